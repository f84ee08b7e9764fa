#include "evenquads/http_server.hpp"

#include <httplib.h>

#include <map>
#include <stdexcept>

namespace evenquads {

struct HttpServer::Impl {
  explicit Impl(Service& s) : service(s) {}

  void dispatch(const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [key, value] : req.params) {
      query.emplace(key, value);
    }
    const Response r = service.handle(req.method, req.path, query, req.body);
    res.status = r.status;
    if (!r.body.is_null()) {
      res.set_content(r.body.dump(), "application/json");
    }
  }

  Service& service;
  httplib::Server server;
};

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>(service)) {
  auto& srv = impl_->server;
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    impl_->dispatch(req, res);
  };
  const std::string any = R"(/.*)";
  srv.Get(any, handler);
  srv.Post(any, handler);
  srv.Put(any, handler);
  srv.Delete(any, handler);
  srv.Options(any, [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  srv.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                           {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                           {"Access-Control-Allow-Headers", "Content-Type"}});
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  auto& srv = impl_->server;
  const int bound = port == 0 ? srv.bind_to_any_port(host) : (srv.bind_to_port(host, port) ? port : -1);
  if (bound < 0) {
    throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
  }
  return bound;
}

void HttpServer::listen() {
  if (!impl_->server.listen_after_bind()) {
    throw std::runtime_error("HTTP server stopped with an error");
  }
}

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) {
    impl_->server.stop();
  }
}

} // namespace evenquads
