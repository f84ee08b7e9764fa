#pragma once

#include "evenquads/cap.hpp"

#include <string>
#include <vector>

namespace evenquads {

/// One checked structural clause with the point lists that witness it.
struct ClauseResult {
  std::string name;
  bool holds = true;
  std::string detail;
  std::vector<std::vector<Point>> witnesses;
};

struct StructureReport {
  std::vector<ClauseResult> clauses;

  [[nodiscard]] bool ok() const;
  [[nodiscard]] std::vector<std::string> violations() const;
  [[nodiscard]] const ClauseResult& clause(const std::string& name) const;
};

inline constexpr const char* kClauseMinDependence = "dependence_uses_at_least_six_points";
inline constexpr const char* kClauseMultiplicityFlat = "multiplicity_two_iff_six_in_4flat";
inline constexpr const char* kClauseOnePerFlat = "at_most_one_point_per_other_4flat";

/// Checks three structural facts about a cap, each computed by a route
/// independent of the exclude bookkeeping where possible:
///  - any cap point in the span of the others is a sum of at least five of them;
///  - an exclude of multiplicity >= 2 exists iff six cap points share a 4-flat;
///  - when six points span a 4-flat, every other coset 4-flat holds at most one
///    cap point.
/// Violations mean a bug; valid caps always produce an all-clear report.
[[nodiscard]] StructureReport check_structure(const Cap& cap);

} // namespace evenquads
