#include "evenquads/classify.hpp"

#include "evenquads/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace evenquads {

std::string CapClass::label() const {
  switch (tag) {
  case CapTag::Independent:
    return "IND";
  case CapTag::OddSum:
    return "ODD" + std::to_string(2 * odd_sum_m.value_or(0) + 1);
  case CapTag::Mult1:
    return "MULT1";
  case CapTag::Mult2:
    return "MULT2";
  case CapTag::Dim6Nine:
    return "9DIM6";
  }
  return "?";
}

std::string CapClass::to_string() const {
  return label() + "(" + std::to_string(k) + "," + std::to_string(dim) + ")";
}

CapClass class_from_invariants(int k, int dim, int max_multiplicity) {
  if (k < 1 || k > 9) {
    throw std::domain_error("classification is defined for 1 <= k <= 9, got k=" +
                            std::to_string(k));
  }
  auto impossible = [&]() {
    return std::logic_error("no " + std::to_string(k) + "-cap has dimension " +
                            std::to_string(dim) + " with max multiplicity " +
                            std::to_string(max_multiplicity));
  };
  if (dim == k - 1) {
    if (k >= 3 && max_multiplicity != 1) {
      throw impossible();
    }
    return CapClass{k, dim, CapTag::Independent, std::nullopt};
  }
  if (k <= 5) {
    throw impossible();
  }
  if (k <= 7) {
    if (dim != k - 2 || max_multiplicity != 2) {
      throw impossible();
    }
    return CapClass{k, dim, CapTag::OddSum, 2};
  }
  if (dim == k - 2) {
    if (max_multiplicity == 1) {
      return CapClass{k, dim, CapTag::Mult1, 3};
    }
    if (max_multiplicity == 2) {
      return CapClass{k, dim, CapTag::Mult2, 2};
    }
    throw impossible();
  }
  if (k == 9 && dim == 6 && max_multiplicity >= 2) {
    return CapClass{k, dim, CapTag::Dim6Nine, std::nullopt};
  }
  throw impossible();
}

CapClass classify(const Cap& cap) {
  const int k = static_cast<int>(cap.size());
  if (k < 1 || k > 9) {
    throw std::domain_error("classification is defined for 1 <= k <= 9, got k=" +
                            std::to_string(k));
  }
  const int dim = cap_dimension(cap);
  const int max_mult = k >= 3 ? exclude_map(cap).max_multiplicity() : 1;
  CapClass c = class_from_invariants(k, dim, max_mult);
  if (c.tag == CapTag::Dim6Nine && max_mult != 3) {
    throw std::logic_error("9-cap of dimension 6 without a 3-point");
  }
  return c;
}

int odd_sum_signature(const Cap& cap) {
  const int k = static_cast<int>(cap.size());
  if (k < 6) {
    throw std::domain_error("odd-sum signature needs k >= 6");
  }
  if (cap_dimension(cap) != k - 2) {
    throw std::domain_error("odd-sum signature needs dimension k-2");
  }
  const auto pts = cap.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Point> rest;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) {
        rest.push_back(pts[j]);
      }
    }
    if (!is_affinely_independent(rest)) {
      continue;
    }
    const auto combo = affine_combination(rest, pts[i]);
    if (!combo) {
      throw std::logic_error("dimension k-2 cap with a point outside the span of the rest");
    }
    return static_cast<int>(combo->size() - 1) / 2;
  }
  throw std::logic_error("dimension k-2 cap without an independent (k-1)-subset");
}

std::string to_string(Equivalence e) {
  switch (e) {
  case Equivalence::Yes:
    return "yes";
  case Equivalence::No:
    return "no";
  case Equivalence::Unknown:
    return "unknown";
  }
  return "?";
}

namespace {

Equivalence trivial_mismatch(const Cap& c, const Cap& d) {
  if (c.n() != d.n()) {
    throw std::invalid_argument("caps live in different ambient spaces");
  }
  if (c.size() != d.size()) {
    return Equivalence::No;
  }
  if (c.empty()) {
    return Equivalence::Yes;
  }
  return Equivalence::Unknown;
}

class EquivalenceSearch {
public:
  EquivalenceSearch(const Cap& c, const Cap& d, std::uint64_t budget)
      : budget_(budget), n_(c.n()) {
    const auto cp = c.points();
    // Greedy affine basis of C.
    Gf2Basis span;
    basis_.push_back(cp[0]);
    for (std::size_t i = 1; i < cp.size(); ++i) {
      if (span.insert(cp[i].bits() ^ cp[0].bits())) {
        basis_.push_back(cp[i]);
      }
    }
    // Express every cap point in the basis; check it once its last basis
    // index has been assigned.
    checks_.resize(basis_.size());
    for (const auto& p : cp) {
      const auto combo = affine_combination(basis_, p);
      const std::size_t last = combo->back();
      checks_[last].push_back(*combo);
    }
    for (const auto& p : d.points()) {
      target_.push_back(p.bits());
    }
    in_target_.assign(std::size_t{1} << n_, false);
    for (auto b : target_) {
      in_target_[b] = true;
    }
  }

  Equivalence run() {
    std::vector<std::uint32_t> image;
    image.reserve(basis_.size());
    const bool found = extend(image, Gf2Basis{});
    if (found) {
      return Equivalence::Yes;
    }
    return exhausted_ ? Equivalence::Unknown : Equivalence::No;
  }

private:
  bool extend(std::vector<std::uint32_t>& image, const Gf2Basis& span) {
    const std::size_t depth = image.size();
    if (depth == basis_.size()) {
      return true;
    }
    for (auto t : target_) {
      if (exhausted_) {
        return false;
      }
      if (++visited_ > budget_) {
        exhausted_ = true;
        return false;
      }
      Gf2Basis next = span;
      if (depth > 0 && !next.insert(t ^ image[0])) {
        continue;
      }
      if (depth == 0 || std::find(image.begin(), image.end(), t) == image.end()) {
        image.push_back(t);
        if (consistent(image, depth) && extend(image, next)) {
          return true;
        }
        image.pop_back();
      }
    }
    return false;
  }

  bool consistent(const std::vector<std::uint32_t>& image, std::size_t depth) const {
    for (const auto& combo : checks_[depth]) {
      std::uint32_t v = 0;
      for (auto idx : combo) {
        v ^= image[idx];
      }
      if (!in_target_[v]) {
        return false;
      }
    }
    return true;
  }

  std::uint64_t budget_;
  int n_;
  std::vector<Point> basis_;
  std::vector<std::vector<std::vector<std::size_t>>> checks_;
  std::vector<std::uint32_t> target_;
  std::vector<bool> in_target_;
  std::uint64_t visited_ = 0;
  bool exhausted_ = false;
};

} // namespace

Equivalence are_equivalent_by_search(const Cap& c, const Cap& d, std::uint64_t search_budget) {
  if (auto e = trivial_mismatch(c, d); e != Equivalence::Unknown) {
    return e;
  }
  if (cap_dimension(c) != cap_dimension(d)) {
    return Equivalence::No;
  }
  return EquivalenceSearch(c, d, search_budget).run();
}

Equivalence are_equivalent(const Cap& c, const Cap& d, std::uint64_t search_budget) {
  if (auto e = trivial_mismatch(c, d); e != Equivalence::Unknown) {
    return e;
  }
  if (c.size() <= 9) {
    return classify(c) == classify(d) ? Equivalence::Yes : Equivalence::No;
  }
  return are_equivalent_by_search(c, d, search_budget);
}

} // namespace evenquads
