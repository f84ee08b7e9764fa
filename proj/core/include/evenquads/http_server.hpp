#pragma once

#include "evenquads/service.hpp"

#include <memory>
#include <string>

namespace evenquads {

/// HTTP front for a Service, with permissive CORS for the browser UI.
class HttpServer {
public:
  explicit HttpServer(Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds host:port (port 0 picks a free one) and returns the bound port.
  /// Throws std::runtime_error when binding fails.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called. Requires a prior bind().
  void listen();
  /// Blocks until a concurrent listen() is accepting connections.
  void wait_until_ready() const;
  void stop();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

} // namespace evenquads
