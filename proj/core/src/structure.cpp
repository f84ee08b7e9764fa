#include "evenquads/structure.hpp"

#include "evenquads/geometry.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace evenquads {

bool StructureReport::ok() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.holds; });
}

std::vector<std::string> StructureReport::violations() const {
  std::vector<std::string> out;
  for (const auto& c : clauses) {
    if (!c.holds) {
      out.push_back(c.name);
    }
  }
  return out;
}

const ClauseResult& StructureReport::clause(const std::string& name) const {
  for (const auto& c : clauses) {
    if (c.name == name) {
      return c;
    }
  }
  throw std::out_of_range("no clause named " + name);
}

namespace {

ClauseResult check_min_dependence(const Cap& cap) {
  ClauseResult r{kClauseMinDependence, true, {}, {}};
  const auto pts = cap.points();
  // Independent route: a direct scan for four points summing to zero.
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      for (std::size_t c = b + 1; c < pts.size(); ++c) {
        for (std::size_t d = c + 1; d < pts.size(); ++d) {
          if ((pts[a].bits() ^ pts[b].bits() ^ pts[c].bits() ^ pts[d].bits()) == 0) {
            r.holds = false;
            r.witnesses.push_back({pts[a], pts[b], pts[c], pts[d]});
          }
        }
      }
    }
  }
  int dependent = 0;
  for (std::size_t i = 0; i < pts.size() && pts.size() > 1; ++i) {
    std::vector<Point> others;
    others.reserve(pts.size() - 1);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) {
        others.push_back(pts[j]);
      }
    }
    auto combo = affine_combination(others, pts[i]);
    if (!combo) {
      continue;
    }
    ++dependent;
    std::vector<Point> witness{pts[i]};
    for (auto idx : *combo) {
      witness.push_back(others[idx]);
    }
    if (combo->size() < 5) {
      r.holds = false;
    }
    r.witnesses.push_back(std::move(witness));
  }
  r.detail = std::to_string(dependent) + " cap point(s) lie in the span of the others";
  return r;
}

std::optional<std::vector<Point>> find_six_in_4flat(std::span<const Point> pts) {
  const std::size_t k = pts.size();
  if (k < 6) {
    return std::nullopt;
  }
  std::vector<std::size_t> idx{0, 1, 2, 3, 4, 5};
  std::vector<Point> six(6);
  while (true) {
    for (std::size_t i = 0; i < 6; ++i) {
      six[i] = pts[idx[i]];
    }
    if (dimension(six) <= 4) {
      return six;
    }
    // Advance to the next 6-combination in lexicographic order.
    int i = 5;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == k - 6 + static_cast<std::size_t>(i)) {
      --i;
    }
    if (i < 0) {
      return std::nullopt;
    }
    ++idx[static_cast<std::size_t>(i)];
    for (auto j = static_cast<std::size_t>(i) + 1; j < 6; ++j) {
      idx[j] = idx[j - 1] + 1;
    }
  }
}

} // namespace

StructureReport check_structure(const Cap& cap) {
  StructureReport report;
  report.clauses.push_back(check_min_dependence(cap));

  const ExcludeMap excludes = exclude_map(cap);
  const auto six = find_six_in_4flat(cap.points());

  ClauseResult mult{kClauseMultiplicityFlat, true, {}, {}};
  const int max_mult = excludes.max_multiplicity();
  const bool has_mult2 = max_mult >= 2;
  mult.holds = has_mult2 == six.has_value();
  mult.detail = "max multiplicity " + std::to_string(max_mult) + "; six points in a 4-flat: " +
                (six ? "yes" : "no");
  for (const auto& e : excludes.entries()) {
    if (e.multiplicity() >= 2) {
      std::vector<Point> w{e.point};
      for (const auto& t : e.triples) {
        w.insert(w.end(), t.begin(), t.end());
      }
      mult.witnesses.push_back(std::move(w));
      break;
    }
  }
  if (six) {
    mult.witnesses.push_back(*six);
  }
  report.clauses.push_back(std::move(mult));

  ClauseResult per_flat{kClauseOnePerFlat, true, {}, {}};
  if (!six || cap.n() < 4) {
    per_flat.detail = "vacuous: no six cap points span a 4-flat";
  } else {
    const Flat anchor = affine_span(*six);
    const auto pieces = partition_into_flats(cap.n(), anchor.dim(), anchor);
    int occupied = 0;
    for (std::size_t i = 1; i < pieces.size(); ++i) {
      std::vector<Point> inside;
      for (const auto& p : cap.points()) {
        if (pieces[i].contains(p)) {
          inside.push_back(p);
        }
      }
      occupied += inside.empty() ? 0 : 1;
      if (inside.size() > 1) {
        per_flat.holds = false;
        per_flat.witnesses.push_back(std::move(inside));
      }
    }
    per_flat.detail = std::to_string(pieces.size() - 1) + " other 4-flat(s), " +
                      std::to_string(occupied) + " occupied";
  }
  report.clauses.push_back(std::move(per_flat));
  return report;
}

} // namespace evenquads
