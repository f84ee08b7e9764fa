#pragma once

#include "evenquads/cap.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace evenquads {

enum class CapTag {
  Independent, ///< dim = k - 1
  OddSum,      ///< dim = k - 2, extra point is a sum of 2m+1 others
  Mult1,       ///< (k, dim) in {(8,6), (9,7)}, every exclude is a 1-point
  Mult2,       ///< (k, dim) in {(8,6), (9,7)}, some exclude is a 2-point
  Dim6Nine,    ///< 9-cap spanning a 6-flat
};

/// Affine-equivalence class label of a k-cap.
struct CapClass {
  int k = 0;
  int dim = 0;
  CapTag tag = CapTag::Independent;
  /// m for OddSum; for Mult1/Mult2 the equivalent odd-sum presentation
  /// (Mult1 <-> m = 3, Mult2 <-> m = 2).
  std::optional<int> odd_sum_m;

  /// "IND", "ODD5", "ODD7", "MULT1", "MULT2" or "9DIM6".
  [[nodiscard]] std::string label() const;
  /// label() with (k,dim) attached, e.g. "MULT1(8,6)".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const CapClass&, const CapClass&) = default;
};

/// Class from the structural invariants alone. Throws std::domain_error for
/// k outside [1, 9] and std::logic_error for combinations no cap can have.
[[nodiscard]] CapClass class_from_invariants(int k, int dim, int max_multiplicity);

/// Classifies a cap with 1 <= k <= 9 by dimension and exclude multiplicity.
[[nodiscard]] CapClass classify(const Cap& cap);

/// For a k-cap of dimension k-2 (k >= 6): the m such that the point left out
/// of an affinely independent (k-1)-subset is a sum of 2m+1 of that subset.
/// Throws std::domain_error when the dimension is not k-2.
[[nodiscard]] int odd_sum_signature(const Cap& cap);

enum class Equivalence { Yes, No, Unknown };

[[nodiscard]] std::string to_string(Equivalence e);

/// Decides affine equivalence. For k <= 9 compares class labels; larger caps
/// fall back to an explicit search bounded by `search_budget` candidate maps.
[[nodiscard]] Equivalence are_equivalent(const Cap& c, const Cap& d,
                                         std::uint64_t search_budget = 50'000'000);

/// Explicit search: tries every ordered affinely independent tuple of D as the
/// image of a fixed affine basis of C and tests whether the induced map
/// carries C onto D. Independent of the class labels.
[[nodiscard]] Equivalence are_equivalent_by_search(const Cap& c, const Cap& d,
                                                   std::uint64_t search_budget = 50'000'000);

} // namespace evenquads
