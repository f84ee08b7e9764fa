#include "evenquads/io.hpp"

#include "evenquads/grid.hpp"

#include <stdexcept>

namespace evenquads {

Cap parse_cap_file(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("cap file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() ||
      !doc.contains("points") || !doc["points"].is_array()) {
    throw std::invalid_argument("cap file needs an integer \"n\" and a \"points\" array");
  }
  const int n = doc["n"].get<int>();
  std::vector<Point> pts;
  for (const auto& p : doc["points"]) {
    pts.push_back(point_from_json(p, n));
  }
  return Cap(n, std::move(pts));
}

std::string write_cap_file(const Cap& cap) {
  Json points = Json::array();
  for (const auto& p : cap.points()) {
    points.push_back(p.to_binary());
  }
  return Json{{"n", cap.n()}, {"points", points}}.dump(2) + "\n";
}

Json point_json(const Point& p) {
  const GridCell cell = point_to_grid(p);
  return Json{{"value", p.bits()}, {"binary", p.to_binary()}, {"row", cell.row}, {"col", cell.col}};
}

Point point_from_json(const Json& j, int n) {
  if (j.is_number_integer()) {
    const auto v = j.get<long long>();
    if (v < 0 || v >= (1ll << n)) {
      throw std::invalid_argument("point " + std::to_string(v) + " out of range for n=" +
                                  std::to_string(n));
    }
    return Point(n, static_cast<std::uint32_t>(v));
  }
  if (j.is_string()) {
    return Point::parse(j.get<std::string>(), n);
  }
  if (j.is_object() && j.contains("value")) {
    return point_from_json(j["value"], n);
  }
  throw std::invalid_argument("point must be an integer or a binary string");
}

Json exclude_entry_json(const ExcludeEntry& e) {
  Json triples = Json::array();
  for (const auto& t : e.triples) {
    triples.push_back(Json::array({point_json(t[0]), point_json(t[1]), point_json(t[2])}));
  }
  Json out = point_json(e.point);
  out["multiplicity"] = e.multiplicity();
  out["triples"] = std::move(triples);
  return out;
}

Json class_json(const CapClass& c) {
  Json out{{"k", c.k}, {"dim", c.dim}, {"label", c.label()}, {"name", c.to_string()}};
  out["odd_sum_m"] = c.odd_sum_m ? Json(*c.odd_sum_m) : Json(nullptr);
  return out;
}

Json structure_json(const StructureReport& r) {
  Json clauses = Json::array();
  for (const auto& c : r.clauses) {
    Json witnesses = Json::array();
    for (const auto& w : c.witnesses) {
      Json set = Json::array();
      for (const auto& p : w) {
        set.push_back(p.to_binary());
      }
      witnesses.push_back(std::move(set));
    }
    clauses.push_back(
        Json{{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}, {"witnesses", witnesses}});
  }
  return Json{{"ok", r.ok()}, {"clauses", clauses}};
}

Json census_row_json(const CensusRow& row) {
  Json dims = Json::object();
  for (const auto& [d, c] : row.by_dimension) {
    dims[std::to_string(d)] = c.str();
  }
  return Json{{"k", row.k}, {"n", row.n}, {"total", row.total.str()}, {"by_dimension", dims}};
}

Json probability_json(const std::vector<ProbabilityRow>& rows, int n) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"k", r.k},
                       {"p_no_quad", r.p_no_quad_decimal()},
                       {"p_quad", r.p_quad_decimal()},
                       {"p_no_quad_exact", r.p_no_quad.str()},
                       {"p_quad_exact", r.p_quad.str()}});
  }
  return Json{{"n", n}, {"rows", out}};
}

Json enumeration_json(const EnumerationResult& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json dims = Json::object();
    for (const auto& [d, c] : row.by_dimension) {
      dims[std::to_string(d)] = c;
    }
    rows.push_back(Json{{"k", row.k}, {"total", row.total}, {"by_dimension", dims}});
  }
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json j = class_json(c.cls);
    j["count"] = c.count;
    classes.push_back(std::move(j));
  }
  return Json{{"n", r.n},      {"max_k", r.max_k}, {"complete", r.complete},
              {"rows", rows}, {"classes", classes}};
}

Json card_json(const Card& c) {
  Json out = point_json(card_to_point(c));
  out["card"] = c.to_string();
  return out;
}

} // namespace evenquads
