#include "evenquads/service.hpp"

#include "evenquads/grid.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <vector>

namespace evenquads {

struct SessionStore::Session {
  std::string id;
  int n = 0;
  Cap selected;
  // exclude point -> triples summing to it, kept in step with `selected`
  std::map<std::uint32_t, std::vector<Triple>> excludes;
  std::vector<Point> history; // toggled points; a toggle is its own inverse
  mutable std::shared_mutex mutex;

  explicit Session(int dim) : n(dim), selected(dim) {}

  [[nodiscard]] ExcludeMap exclude_view() const {
    std::vector<ExcludeEntry> entries;
    entries.reserve(excludes.size());
    for (const auto& [bits, triples] : excludes) {
      entries.push_back(ExcludeEntry{Point(n, bits), triples});
    }
    return ExcludeMap(std::move(entries));
  }

  void add(const Point& y) {
    const auto pts = selected.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const std::uint32_t e = pts[i].bits() ^ pts[j].bits() ^ y.bits();
        excludes[e].push_back(Triple{pts[i], pts[j], y});
      }
    }
    selected = selected.with(y);
  }

  void remove(const Point& y) {
    selected = selected.without(y);
    const auto pts = selected.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const std::uint32_t e = pts[i].bits() ^ pts[j].bits() ^ y.bits();
        auto it = excludes.find(e);
        auto& triples = it->second;
        std::erase_if(triples, [&](const Triple& t) {
          return std::find(t.begin(), t.end(), y) != t.end();
        });
        if (triples.empty()) {
          excludes.erase(it);
        }
      }
    }
  }

  void apply(const Point& y) {
    if (selected.contains(y)) {
      remove(y);
    } else {
      add(y);
    }
#ifndef NDEBUG
    if (!(exclude_view() == exclude_map(selected))) {
      throw std::logic_error("incremental exclude map drifted from recomputation");
    }
#endif
  }

  [[nodiscard]] Json board() const {
    const ExcludeMap map = exclude_view();
    const int k = static_cast<int>(selected.size());
    const GridShape shape = grid_shape(n);
    Json selected_json = Json::array();
    for (const auto& p : selected.points()) {
      selected_json.push_back(point_json(p));
    }
    Json excludes_json = Json::array();
    for (const auto& e : map.entries()) {
      excludes_json.push_back(exclude_entry_json(e));
    }
    Json out{{"id", id},
             {"n", n},
             {"k", k},
             {"grid", {{"rows", shape.rows}, {"cols", shape.cols}}},
             {"selected", selected_json},
             {"excludes", excludes_json},
             {"max_multiplicity", map.max_multiplicity()},
             {"history_length", history.size()},
             {"complete_in_ambient", is_complete_in_ambient(selected)}};
    out["dimension"] = k == 0 ? Json(nullptr) : Json(cap_dimension(selected));
    out["completes_span"] = k == 0 ? Json(nullptr) : Json(completes_span(selected));
    out["class"] = (k >= 1 && k <= 9) ? class_json(classify(selected)) : Json(nullptr);
    Json counts{{"k", k}, {"n", n}};
    try {
      counts["caps_of_this_size"] = k == 0 ? Json("1") : Json(count_caps(k, n).str());
    } catch (const std::domain_error&) {
      counts["caps_of_this_size"] = nullptr;
    }
    out["counts"] = std::move(counts);
    return out;
  }
};

SessionStore::SessionStore(std::uint64_t seed) : rng_(seed) {}

std::string SessionStore::fresh_id() {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng_()));
  return buf;
}

Json SessionStore::create(int n) { return create(Cap(n)); }

Json SessionStore::create(const Cap& start) {
  const int n = start.n();
  if (n < kMinSessionDim || n > kMaxSessionDim) {
    throw std::invalid_argument("session dimension must be between " +
                                std::to_string(kMinSessionDim) + " and " +
                                std::to_string(kMaxSessionDim));
  }
  auto session = std::make_shared<Session>(n);
  for (const auto& p : start.points()) {
    session->add(p);
  }
  std::unique_lock lock(mutex_);
  do {
    session->id = fresh_id();
  } while (sessions_.contains(session->id));
  sessions_.emplace(session->id, session);
  return session->board();
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    throw SessionNotFound("no session '" + id + "'");
  }
  return it->second;
}

Json SessionStore::board(const std::string& id) const {
  const auto s = find(id);
  std::shared_lock lock(s->mutex);
  return s->board();
}

Json SessionStore::toggle(const std::string& id, const Point& p) {
  const auto s = find(id);
  std::unique_lock lock(s->mutex);
  if (p.n() != s->n) {
    throw std::invalid_argument("point of Z_2^" + std::to_string(p.n()) + " in a session over Z_2^" +
                                std::to_string(s->n));
  }
  if (const auto it = s->excludes.find(p.bits()); it != s->excludes.end()) {
    const ExcludeMap single({ExcludeEntry{p, it->second}});
    Json rejection = exclude_entry_json(single.entries().front());
    rejection["reason"] = "point completes a quad with the selection";
    return Json{{"accepted", false}, {"rejection", rejection}, {"board", s->board()}};
  }
  s->apply(p);
  s->history.push_back(p);
  return Json{{"accepted", true}, {"board", s->board()}};
}

Json SessionStore::undo(const std::string& id) {
  const auto s = find(id);
  std::unique_lock lock(s->mutex);
  if (s->history.empty()) {
    return Json{{"undone", false}, {"board", s->board()}};
  }
  const Point last = s->history.back();
  s->apply(last);
  s->history.pop_back();
  return Json{{"undone", true}, {"board", s->board()}};
}

Json SessionStore::reset(const std::string& id) {
  const auto s = find(id);
  std::unique_lock lock(s->mutex);
  s->selected = Cap(s->n);
  s->excludes.clear();
  s->history.clear();
  return s->board();
}

std::string SessionStore::snapshot(const std::string& id) const {
  const auto s = find(id);
  std::shared_lock lock(s->mutex);
  return write_cap_file(s->selected);
}

int SessionStore::dimension_of(const std::string& id) const { return find(id)->n; }

std::size_t SessionStore::size() const {
  std::shared_lock lock(mutex_);
  return sessions_.size();
}

namespace {

Response error(int status, const std::string& message) {
  return Response{status, Json{{"error", message}}};
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= path.size()) {
    const std::size_t slash = path.find('/', start);
    const std::size_t end = slash == std::string::npos ? path.size() : slash;
    if (end > start) {
      parts.push_back(path.substr(start, end - start));
    }
    if (slash == std::string::npos) {
      break;
    }
    start = slash + 1;
  }
  return parts;
}

int int_param(const std::map<std::string, std::string>& query, const std::string& key,
              std::optional<int> fallback) {
  const auto it = query.find(key);
  if (it == query.end()) {
    if (!fallback) {
      throw std::invalid_argument("missing query parameter '" + key + "'");
    }
    return *fallback;
  }
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(it->second, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != it->second.size()) {
    throw std::invalid_argument("query parameter '" + key + "' must be an integer");
  }
  return v;
}

Json parse_body(const std::string& body) {
  if (body.empty()) {
    return Json::object();
  }
  Json j = Json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw std::invalid_argument("request body must be a JSON object");
  }
  return j;
}

Json census_document(int n, std::optional<int> k) {
  if (n < 1 || n > kMaxAmbientDim) {
    throw std::invalid_argument("n must be between 1 and 16");
  }
  Json rows = Json::array();
  const int lo = k.value_or(1);
  const int hi = k.value_or(10);
  if (lo < 1) {
    throw std::invalid_argument("k must be at least 1");
  }
  for (int kk = lo; kk <= hi; ++kk) {
    try {
      Json row = census_row_json(census_row(kk, n));
      row["supported"] = true;
      rows.push_back(std::move(row));
    } catch (const std::domain_error&) {
      rows.push_back(Json{{"k", kk}, {"n", n}, {"supported", false}});
    }
  }
  return Json{{"n", n}, {"rows", rows}};
}

} // namespace

Response Service::handle(const std::string& method, const std::string& path,
                         const std::map<std::string, std::string>& query, const std::string& body) {
  const auto parts = split_path(path);
  const bool get = method == "GET";
  const bool post = method == "POST";
  try {
    if (parts.size() == 1 && parts[0] == "sessions") {
      if (!post) {
        return error(405, "use POST /sessions");
      }
      const Json req = parse_body(body);
      if (!req.contains("n") || !req["n"].is_number_integer()) {
        throw std::invalid_argument("body needs an integer \"n\"");
      }
      const int n = req["n"].get<int>();
      if (n < kMinSessionDim || n > kMaxSessionDim) {
        throw std::invalid_argument("n must be between 4 and 8");
      }
      std::vector<Point> start;
      if (req.contains("points")) {
        for (const auto& p : req["points"]) {
          start.push_back(point_from_json(p, n));
        }
      }
      return Response{201, store_.create(Cap(n, std::move(start)))};
    }
    if (parts.size() >= 2 && parts[0] == "sessions") {
      const std::string& id = parts[1];
      if (parts.size() == 2) {
        return get ? Response{200, store_.board(id)} : error(405, "use GET");
      }
      if (parts.size() == 3) {
        const std::string& action = parts[2];
        if (action == "snapshot" && get) {
          return Response{200, Json::parse(store_.snapshot(id))};
        }
        if (!post) {
          return error(405, "use POST");
        }
        if (action == "toggle") {
          const Json req = parse_body(body);
          if (!req.contains("point")) {
            throw std::invalid_argument("body needs a \"point\"");
          }
          const Point p = point_from_json(req["point"], store_.dimension_of(id));
          return Response{200, store_.toggle(id, p)};
        }
        if (action == "undo") {
          return Response{200, store_.undo(id)};
        }
        if (action == "reset") {
          return Response{200, store_.reset(id)};
        }
      }
    }
    if (parts.size() == 2 && parts[0] == "meta") {
      if (!get) {
        return error(405, "use GET");
      }
      if (parts[1] == "census") {
        const int n = int_param(query, "n", std::nullopt);
        const auto k = query.contains("k") ? std::optional(int_param(query, "k", std::nullopt))
                                           : std::nullopt;
        return Response{200, census_document(n, k)};
      }
      if (parts[1] == "probability") {
        const int n = int_param(query, "n", 6);
        if (n < 1 || n > 6) {
          throw std::invalid_argument("probability tables cover 1 <= n <= 6");
        }
        return Response{200, probability_json(probability_table(n), n)};
      }
    }
    return error(404, "no route for " + method + " " + path);
  } catch (const SessionNotFound& e) {
    return error(404, e.what());
  } catch (const std::invalid_argument& e) {
    return error(400, e.what());
  } catch (const Json::exception& e) {
    return error(400, e.what());
  }
}

} // namespace evenquads
