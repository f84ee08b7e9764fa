#pragma once

#include "evenquads/cap.hpp"
#include "evenquads/classify.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace evenquads {

struct EnumerationOptions {
  int n = 4;
  int max_k = 0;
  unsigned threads = 1;
  /// Also tally affine-equivalence classes (k <= 9).
  bool by_class = false;
  /// Stop after this many search nodes; 0 means unlimited.
  std::uint64_t node_budget = 0;
};

struct EnumeratedRow {
  int k = 0;
  std::map<int, std::uint64_t> by_dimension; ///< nonzero counts only
  std::uint64_t total = 0;
};

struct ClassTally {
  CapClass cls;
  std::uint64_t count = 0;
};

struct EnumerationResult {
  int n = 0;
  int max_k = 0;
  /// False when the node budget ran out; counts are then lower bounds.
  bool complete = true;
  std::uint64_t nodes = 0;
  std::vector<EnumeratedRow> rows; ///< k = 1 .. max_k
  std::vector<ClassTally> classes; ///< sorted by (k, dim, label); empty unless by_class

  [[nodiscard]] const EnumeratedRow& row(int k) const;
};

/// Exhaustive count of every k-cap of Z_2^n for k <= max_k, split by
/// dimension (and class when requested). Supports 1 <= n <= 8.
///
/// Caps are generated in increasing point order so each is reached exactly
/// once. Every search node keeps bit tables over Z_2^n of the sums of 1..5
/// distinct cap points and of the affine span; adding a point y updates them
/// by XOR-translating the previous level's table by y. The caps one point
/// larger than a node are then counted by popcount, without visiting them:
/// a candidate lying in the span keeps the dimension, and a candidate that
/// is a sum of five cap points creates an exclude of multiplicity 2.
///
/// Work is split by the first two points across `threads` workers; the
/// result does not depend on the thread count.
[[nodiscard]] EnumerationResult enumerate_census(const EnumerationOptions& options);

/// Calls `visit` on every cap of Z_2^n with 1 <= size <= max_k, materialized.
/// Intended for small n where per-cap inspection is affordable.
void for_each_cap(int n, int max_k, const std::function<void(const Cap&)>& visit);

} // namespace evenquads
