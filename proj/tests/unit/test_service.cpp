#include "evenquads/http_server.hpp"
#include "evenquads/service.hpp"
#include "helpers.hpp"

#include <doctest.h>
#include <httplib.h>

#include <random>
#include <thread>

using namespace evenquads;

namespace {

Cap selected_of(const Json& board) {
  std::vector<Point> pts;
  for (const auto& p : board["selected"]) pts.emplace_back(board["n"].get<int>(), p["value"].get<std::uint32_t>());
  return Cap(board["n"].get<int>(), pts);
}

// Board exclude list recomputed from scratch with the triple scan.
void check_consistent(const Json& board) {
  const Cap cap = selected_of(board);
  const auto expect = oracle::exclude_multiplicities(testing::bits_of(cap.points()));
  REQUIRE(board["excludes"].size() == expect.size());
  for (const auto& e : board["excludes"]) {
    CHECK(expect.at(e["value"].get<std::uint32_t>()) == e["multiplicity"].get<int>());
    CHECK(e["triples"].size() == static_cast<std::size_t>(e["multiplicity"].get<int>()));
  }
  Json canonical = Json::array();
  const ExcludeMap ex = exclude_map(cap);
  for (const auto& e : ex.entries()) canonical.push_back(exclude_entry_json(e));
  CHECK(board["excludes"] == canonical);
}

Json strip(Json board) {
  board.erase("history_length");
  return board;
}

} // namespace

TEST_CASE("building a cap point by point") {
  SessionStore store(1);
  const Json fresh = store.create(6);
  const std::string id = fresh["id"];
  CHECK(fresh["k"] == 0);
  CHECK(fresh["excludes"].empty());
  CHECK(fresh["dimension"].is_null());
  CHECK(fresh["grid"]["rows"] == 8);

  SUBCASE("five independent points give ten single excludes") {
    Json board;
    for (std::uint32_t b : {0u, 1u, 2u, 4u, 8u}) {
      const Json r = store.toggle(id, Point(6, b));
      CHECK(r["accepted"] == true);
      board = r["board"];
    }
    CHECK(board["excludes"].size() == 10);
    for (const auto& e : board["excludes"]) CHECK(e["multiplicity"] == 1);
    CHECK(board["class"]["name"] == "IND(5,4)");
    CHECK(board["dimension"] == 4);
    CHECK(board["counts"]["caps_of_this_size"] == "6999552");
    check_consistent(board);
  }

  SUBCASE("a 6-cap in a 4-flat shows ten double excludes") {
    Json board;
    for (std::uint32_t b : {0u, 1u, 2u, 4u, 8u, 15u}) board = store.toggle(id, Point(6, b))["board"];
    REQUIRE(board["excludes"].size() == 10);
    for (const auto& e : board["excludes"]) CHECK(e["multiplicity"] == 2);
    CHECK(board["completes_span"] == true);
    CHECK(board["class"]["label"] == "ODD5");
    check_consistent(board);

    SUBCASE("an excluded point is refused with its witnesses") {
      const Json before = store.board(id);
      const std::uint32_t excluded = board["excludes"][0]["value"];
      const Json r = store.toggle(id, Point(6, excluded));
      CHECK(r["accepted"] == false);
      const Json& triples = r["rejection"]["triples"];
      REQUIRE(triples.size() == 2);
      std::set<std::uint32_t> used;
      for (const auto& t : triples)
        for (const auto& p : t) used.insert(p["value"].get<std::uint32_t>());
      CHECK(used.size() == 6);
      CHECK(r["rejection"]["value"] == excluded);
      CHECK(store.board(id) == before);
    }
  }

  SUBCASE("toggling a selected point removes it") {
    store.toggle(id, Point(6, 5));
    store.toggle(id, Point(6, 9));
    const Json r = store.toggle(id, Point(6, 5));
    CHECK(r["board"]["k"] == 1);
    CHECK(r["board"]["selected"][0]["value"] == 9);
  }

  SUBCASE("undo and reset") {
    const Json empty = store.board(id);
    CHECK(store.undo(id)["undone"] == false);
    store.toggle(id, Point(6, 3));
    const Json one = store.board(id);
    store.toggle(id, Point(6, 12));
    const Json u = store.undo(id);
    CHECK(u["undone"] == true);
    CHECK(strip(u["board"]) == strip(one));
    CHECK(strip(store.undo(id)["board"]) == strip(empty));
    store.toggle(id, Point(6, 3));
    store.toggle(id, Point(6, 40));
    const Json reset = store.reset(id);
    CHECK(reset == empty);
  }

  SUBCASE("grid coordinates travel with every point") {
    const Json board = store.toggle(id, Point::parse("110001", 6))["board"];
    CHECK(board["selected"][0]["row"] == 4);
    CHECK(board["selected"][0]["col"] == 5);
    CHECK(board["selected"][0]["binary"] == "110001");
  }
}

TEST_CASE("random click sequences never drift from recomputation") {
  SessionStore store(2);
  std::mt19937_64 rng(3);
  for (int n : {4, 5, 6, 7, 8}) {
    const std::string id = store.create(n)["id"];
    std::vector<Json> boards{store.board(id)};
    for (int step = 0; step < 150; ++step) {
      const std::uint64_t action = rng() % 10;
      if (action == 0) {
        const Json r = store.undo(id);
        if (r["undone"] == true) boards.pop_back();
        CHECK(strip(r["board"]) == strip(boards.back()));
        check_consistent(r["board"]);
        continue;
      }
      const Point p(n, static_cast<std::uint32_t>(rng() % (1u << n)));
      const Json r = store.toggle(id, p);
      check_consistent(r["board"]);
      if (r["accepted"] == true) {
        boards.push_back(r["board"]);
      } else {
        CHECK(strip(r["board"]) == strip(boards.back()));
      }
      CHECK(is_cap(selected_of(r["board"]).points()));
    }
  }
}

TEST_CASE("session errors") {
  SessionStore store(4);
  CHECK_THROWS_AS(store.create(3), std::invalid_argument);
  CHECK_THROWS_AS(store.create(9), std::invalid_argument);
  CHECK_THROWS_AS(store.board("missing"), SessionNotFound);
  const std::string id = store.create(5)["id"];
  CHECK_THROWS_AS(store.toggle(id, Point(6, 1)), std::invalid_argument);
  const Json restored = store.create(testing::cap(5, {1, 2, 4}));
  CHECK(restored["k"] == 3);
  CHECK(restored["history_length"] == 0);
  CHECK(store.size() == 2);
}

TEST_CASE("concurrent sessions stay consistent") {
  SessionStore store(5);
  const std::string shared = store.create(6)["id"];
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&store, &shared, t] {
      const std::string own = store.create(6)["id"];
      std::mt19937_64 rng(static_cast<std::uint64_t>(t));
      for (int i = 0; i < 200; ++i) {
        const Point p(6, static_cast<std::uint32_t>(rng() % 64));
        (void)store.toggle(own, p);
        (void)store.toggle(shared, p);
        (void)store.board(shared);
      }
    });
  }
  for (auto& w : workers) w.join();
  check_consistent(store.board(shared));
  CHECK(store.size() == 5);
}

TEST_CASE("router") {
  Service service(6);
  const Response created = service.handle("POST", "/sessions", {}, R"({"n": 6})");
  CHECK(created.status == 201);
  const std::string id = created.body["id"];
  const std::string base = "/sessions/" + id;

  CHECK(service.handle("GET", base, {}, "").body["k"] == 0);
  const Response t1 = service.handle("POST", base + "/toggle", {}, R"({"point": 5})");
  CHECK(t1.status == 200);
  CHECK(t1.body["accepted"] == true);
  const Response t2 = service.handle("POST", base + "/toggle", {}, R"({"point": "110001"})");
  CHECK(t2.body["board"]["k"] == 2);
  CHECK(service.handle("POST", base + "/undo", {}, "").body["board"]["k"] == 1);
  CHECK(service.handle("POST", base + "/reset", {}, "").body["k"] == 0);

  const Response snap = service.handle("GET", base + "/snapshot", {}, "");
  CHECK(snap.body["n"] == 6);
  const Response restored =
      service.handle("POST", "/sessions", {}, R"({"n": 6, "points": ["000001", 2, 4]})");
  CHECK(restored.status == 201);
  CHECK(restored.body["k"] == 3);

  CHECK(service.handle("GET", "/sessions/nope", {}, "").status == 404);
  CHECK(service.handle("POST", base + "/toggle", {}, "{bad json").status == 400);
  CHECK(service.handle("POST", base + "/toggle", {}, R"({"point": 64})").status == 400);
  CHECK(service.handle("POST", base + "/toggle", {}, R"({})").status == 400);
  CHECK(service.handle("POST", "/sessions", {}, R"({"n": 12})").status == 400);
  CHECK(service.handle("POST", "/sessions", {}, R"({"n": 6, "points": [0, 1, 2, 3]})").status == 400);
  CHECK(service.handle("DELETE", base, {}, "").status == 405);
  CHECK(service.handle("GET", "/nowhere", {}, "").status == 404);

  const Response census = service.handle("GET", "/meta/census", {{"n", "6"}, {"k", "8"}}, "");
  REQUIRE(census.status == 200);
  CHECK(census.body["rows"][0]["total"] == "927940608");
  const Response all = service.handle("GET", "/meta/census", {{"n", "7"}}, "");
  CHECK(all.body["rows"].size() == 10);
  CHECK(all.body["rows"][9]["supported"] == false);
  CHECK(service.handle("GET", "/meta/census", {{"n", "x"}}, "").status == 400);
  CHECK(service.handle("GET", "/meta/census", {}, "").status == 400);

  const Response prob = service.handle("GET", "/meta/probability", {{"n", "6"}}, "");
  REQUIRE(prob.body["rows"].size() == 10);
  CHECK(prob.body["rows"][6]["p_quad"] == "0.4977915321");
  CHECK(service.handle("GET", "/meta/probability", {{"n", "7"}}, "").status == 400);
}

TEST_CASE("HTTP round trip on loopback") {
  Service service(7);
  HttpServer server(service);
  const int port = server.bind("127.0.0.1", 0);
  std::thread loop([&] { server.listen(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto created = client.Post("/sessions", R"({"n": 6})", "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  CHECK(created->get_header_value("Access-Control-Allow-Origin") == "*");
  const std::string id = Json::parse(created->body)["id"];

  for (int b : {0, 1, 2, 4, 8, 15}) {
    auto r = client.Post("/sessions/" + id + "/toggle", Json{{"point", b}}.dump(), "application/json");
    REQUIRE(r);
    CHECK(r->status == 200);
  }
  auto board = client.Get("/sessions/" + id);
  REQUIRE(board);
  const Json body = Json::parse(board->body);
  CHECK(body["excludes"].size() == 10);
  auto census = client.Get("/meta/census?n=6&k=9");
  REQUIRE(census);
  CHECK(Json::parse(census->body)["rows"][0]["total"] == "995491840");
  auto missing = client.Get("/sessions/unknown");
  REQUIRE(missing);
  CHECK(missing->status == 404);
  auto options = client.Options("/sessions");
  REQUIRE(options);
  CHECK(options->status == 204);

  server.stop();
  loop.join();
}
