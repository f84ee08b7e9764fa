#include "evenquads/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>

namespace evenquads {

namespace detail {
struct EnumeratorAccess {
  static TrustedCapKey key() { return TrustedCapKey{}; }
};
} // namespace detail

const EnumeratedRow& EnumerationResult::row(int k) const {
  for (const auto& r : rows) {
    if (r.k == k) {
      return r;
    }
  }
  throw std::out_of_range("no enumerated row for k=" + std::to_string(k));
}

namespace {

constexpr int kMaxClassified = 9;

constexpr std::array<std::uint64_t, 6> kLowHalf = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

// Bit table over Z_2^n in W 64-bit words.
template <int W>
struct Mask {
  std::array<std::uint64_t, W> w{};

  void set(std::uint32_t x) { w[x >> 6] |= std::uint64_t{1} << (x & 63u); }
  [[nodiscard]] bool test(std::uint32_t x) const { return (w[x >> 6] >> (x & 63u)) & 1u; }

  Mask& operator|=(const Mask& o) {
    for (int i = 0; i < W; ++i) {
      w[i] |= o.w[i];
    }
    return *this;
  }
  friend Mask operator&(const Mask& a, const Mask& b) {
    Mask out;
    for (int i = 0; i < W; ++i) {
      out.w[i] = a.w[i] & b.w[i];
    }
    return out;
  }
  [[nodiscard]] Mask operator~() const {
    Mask out;
    for (int i = 0; i < W; ++i) {
      out.w[i] = ~w[i];
    }
    return out;
  }
  [[nodiscard]] std::uint64_t count() const {
    std::uint64_t c = 0;
    for (int i = 0; i < W; ++i) {
      c += static_cast<std::uint64_t>(std::popcount(w[i]));
    }
    return c;
  }
};

inline std::uint64_t permute_word(std::uint64_t word, std::uint32_t lo) {
  for (int b = 0; b < 6; ++b) {
    if ((lo >> b) & 1u) {
      const int s = 1 << b;
      word = ((word & kLowHalf[static_cast<std::size_t>(b)]) << s) |
             ((word >> s) & kLowHalf[static_cast<std::size_t>(b)]);
    }
  }
  return word;
}

// out[x] = m[x ^ y]: the set {x ^ y : x in m}.
template <int W>
Mask<W> translate(const Mask<W>& m, std::uint32_t y) {
  Mask<W> out;
  const std::uint32_t lo = y & 63u;
  const std::uint32_t hi = y >> 6;
  for (int i = 0; i < W; ++i) {
    out.w[static_cast<std::size_t>(i)] =
        permute_word(m.w[static_cast<std::size_t>(i) ^ hi], lo);
  }
  return out;
}

template <int W>
Mask<W> universe(int n) {
  Mask<W> m;
  const std::uint32_t size = 1u << n;
  if (size >= 64) {
    for (std::uint32_t i = 0; i < size / 64; ++i) {
      m.w[i] = ~std::uint64_t{0};
    }
  } else {
    m.w[0] = (std::uint64_t{1} << size) - 1;
  }
  return m;
}

// Points strictly greater than x.
template <int W>
Mask<W> above(std::uint32_t x, const Mask<W>& all) {
  Mask<W> m;
  const std::uint32_t word = x >> 6;
  const std::uint32_t bit = x & 63u;
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(W); ++i) {
    if (i > word) {
      m.w[i] = ~std::uint64_t{0};
    } else if (i == word) {
      m.w[i] = bit == 63 ? 0 : (~std::uint64_t{0} << (bit + 1));
    }
  }
  return m & all;
}

template <int W>
struct Node {
  Mask<W> sums[6]; // sums[j]: sums of j distinct cap points (j = 1..5)
  Mask<W> span;
  std::uint32_t last = 0;
  int dim = 0;
  bool mult2 = false;
};

// Tallies indexed by (k, dim, has a 2-point).
class Tally {
public:
  Tally(int max_k, int n)
      : dims_(n + 1), counts_(static_cast<std::size_t>((max_k + 1) * (n + 1) * 2), 0) {}
  void add(int k, int dim, bool mult2, std::uint64_t c) {
    counts_[index(k, dim, mult2)] += c;
  }
  [[nodiscard]] std::uint64_t get(int k, int dim, bool mult2) const {
    return counts_[index(k, dim, mult2)];
  }
  void merge(const Tally& o) {
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      counts_[i] += o.counts_[i];
    }
  }

private:
  [[nodiscard]] std::size_t index(int k, int dim, bool mult2) const {
    return static_cast<std::size_t>((k * dims_ + dim) * 2 + (mult2 ? 1 : 0));
  }
  int dims_;
  std::vector<std::uint64_t> counts_;
};

template <int W>
class Search {
public:
  Search(int n, int max_k, bool by_class, std::atomic<std::uint64_t>& nodes,
         std::uint64_t budget, std::atomic<bool>& aborted)
      : n_(n), max_k_(max_k), by_class_(by_class), all_(universe<W>(n)), nodes_(nodes),
        budget_(budget), aborted_(aborted), tally_(max_k, n) {}

  Node<W> root(std::uint32_t a) const {
    Node<W> node;
    node.sums[1].set(a);
    node.span.set(a);
    node.last = a;
    node.dim = 0;
    return node;
  }

  // `size` is the size of the new cap.
  Node<W> child(const Node<W>& p, std::uint32_t y, std::uint32_t first, int size) const {
    Node<W> c;
    // 4- and 5-sums only feed class tallies, which stop at k = 9.
    const bool classes = by_class_ && size + 1 <= kMaxClassified;
    const int top = classes ? 5 : 3;
    c.sums[1] = p.sums[1];
    c.sums[1].set(y);
    for (int j = 2; j <= top; ++j) {
      c.sums[j] = p.sums[j];
      c.sums[j] |= translate(p.sums[j - 1], y);
    }
    if (p.span.test(y)) {
      c.span = p.span;
      c.dim = p.dim;
    } else {
      c.span = p.span;
      c.span |= translate(p.span, y ^ first);
      c.dim = p.dim + 1;
    }
    c.mult2 = p.mult2 || (by_class_ && size <= kMaxClassified && p.sums[5].test(y));
    c.last = y;
    return c;
  }

  // Counts the caps one larger than `node` (size `size`), then descends.
  void expand(const Node<W>& node, int size, std::uint32_t first) {
    if (aborted_.load(std::memory_order_relaxed)) {
      return;
    }
    if (budget_ != 0 && nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
      aborted_.store(true, std::memory_order_relaxed);
      return;
    }
    if (budget_ == 0) {
      ++local_nodes_;
    }
    const Mask<W> allowed = ~node.sums[3] & above(node.last, all_);
    const Mask<W> inside = allowed & node.span;
    const Mask<W> outside = allowed & ~node.span;
    const int k = size + 1;
    if (by_class_ && k <= kMaxClassified && !node.mult2) {
      const std::uint64_t two = (inside & node.sums[5]).count();
      tally_.add(k, node.dim, true, two);
      tally_.add(k, node.dim, false, inside.count() - two);
    } else {
      tally_.add(k, node.dim, node.mult2, inside.count());
    }
    tally_.add(k, node.dim + 1, node.mult2, outside.count());

    if (k >= max_k_) {
      return;
    }
    for (int i = 0; i < W; ++i) {
      std::uint64_t bits = allowed.w[static_cast<std::size_t>(i)];
      while (bits != 0) {
        const auto y = static_cast<std::uint32_t>(i * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        expand(child(node, y, first, k), k, first);
      }
    }
  }

  void run_task(std::uint32_t a, std::uint32_t b) {
    const Node<W> r = root(a);
    expand(child(r, b, a, 2), 2, a);
  }

  [[nodiscard]] const Tally& tally() const { return tally_; }
  [[nodiscard]] Tally& tally() { return tally_; }
  [[nodiscard]] std::uint64_t local_nodes() const { return local_nodes_; }

private:
  int n_;
  int max_k_;
  bool by_class_;
  Mask<W> all_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t budget_;
  std::atomic<bool>& aborted_;
  Tally tally_;
  std::uint64_t local_nodes_ = 0;
};

template <int W>
EnumerationResult run_enumeration(const EnumerationOptions& opt) {
  const int n = opt.n;
  const std::uint32_t size = 1u << n;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};

  Tally total(opt.max_k, n);
  // Sizes 1 and 2 directly: every point, every pair.
  if (opt.max_k >= 1) {
    total.add(1, 0, false, size);
  }
  if (opt.max_k >= 2) {
    total.add(2, 1, false, std::uint64_t{size} * (size - 1) / 2);
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> tasks;
  if (opt.max_k >= 3) {
    for (std::uint32_t a = 0; a < size; ++a) {
      for (std::uint32_t b = a + 1; b < size; ++b) {
        tasks.emplace_back(a, b);
      }
    }
  }

  const unsigned workers = std::max(1u, std::min<unsigned>(opt.threads, 256));
  std::vector<Search<W>> searches;
  searches.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) {
    searches.emplace_back(n, opt.max_k, opt.by_class, nodes, opt.node_budget, aborted);
  }
  std::atomic<std::size_t> next{0};
  auto work = [&](Search<W>& search) {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size() || aborted.load()) {
        return;
      }
      search.run_task(tasks[t].first, tasks[t].second);
    }
  };
  if (workers == 1) {
    work(searches.front());
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) {
      pool.emplace_back([&, i] { work(searches[i]); });
    }
  }

  std::uint64_t visited = nodes.load();
  for (const auto& s : searches) {
    total.merge(s.tally());
    visited += s.local_nodes();
  }

  EnumerationResult result;
  result.n = n;
  result.max_k = opt.max_k;
  result.complete = !aborted.load();
  result.nodes = visited;
  for (int k = 1; k <= opt.max_k; ++k) {
    EnumeratedRow row;
    row.k = k;
    for (int dim = 0; dim <= n; ++dim) {
      const std::uint64_t c = total.get(k, dim, false) + total.get(k, dim, true);
      if (c != 0) {
        row.by_dimension[dim] = c;
        row.total += c;
      }
      if (!opt.by_class || k > kMaxClassified) {
        continue;
      }
      for (bool mult2 : {false, true}) {
        const std::uint64_t m = total.get(k, dim, mult2);
        if (m == 0) {
          continue;
        }
        // Caps of size <= 2 have no excludes; report multiplicity 1 for them.
        const int max_mult = mult2 ? 2 : 1;
        const CapClass cls = class_from_invariants(k, dim, max_mult);
        auto it = std::find_if(result.classes.begin(), result.classes.end(),
                               [&](const ClassTally& t) { return t.cls == cls; });
        if (it == result.classes.end()) {
          result.classes.push_back(ClassTally{cls, m});
        } else {
          it->count += m;
        }
      }
    }
    result.rows.push_back(std::move(row));
  }
  std::sort(result.classes.begin(), result.classes.end(),
            [](const ClassTally& a, const ClassTally& b) {
              return std::tuple(a.cls.k, a.cls.dim, a.cls.label()) <
                     std::tuple(b.cls.k, b.cls.dim, b.cls.label());
            });
  return result;
}

template <int W>
void visit_caps(int n, int max_k, const std::function<void(const Cap&)>& visit) {
  const Mask<W> all = universe<W>(n);
  const std::uint32_t size = 1u << n;
  std::vector<Point> current;
  struct Frame {
    Mask<W> s1, s2, s3;
  };
  auto recurse = [&](auto&& self, const Frame& f, std::uint32_t last) -> void {
    visit(Cap(n, current, detail::EnumeratorAccess::key()));
    if (static_cast<int>(current.size()) >= max_k) {
      return;
    }
    const Mask<W> allowed = ~f.s3 & above(last, all);
    for (int i = 0; i < W; ++i) {
      std::uint64_t bits = allowed.w[static_cast<std::size_t>(i)];
      while (bits != 0) {
        const auto y = static_cast<std::uint32_t>(i * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        Frame g = f;
        g.s1.set(y);
        g.s2 |= translate(f.s1, y);
        g.s3 |= translate(f.s2, y);
        current.emplace_back(n, y);
        self(self, g, y);
        current.pop_back();
      }
    }
  };
  for (std::uint32_t a = 0; a < size && max_k >= 1; ++a) {
    Frame f;
    f.s1.set(a);
    current.assign(1, Point(n, a));
    recurse(recurse, f, a);
  }
}

} // namespace

EnumerationResult enumerate_census(const EnumerationOptions& options) {
  if (options.n < 1 || options.n > 8) {
    throw std::domain_error("enumeration supports 1 <= n <= 8");
  }
  if (options.max_k < 0) {
    throw std::invalid_argument("max_k must be non-negative");
  }
  if (options.n <= 6) {
    return run_enumeration<1>(options);
  }
  if (options.n == 7) {
    return run_enumeration<2>(options);
  }
  return run_enumeration<4>(options);
}

void for_each_cap(int n, int max_k, const std::function<void(const Cap&)>& visit) {
  if (n < 1 || n > 8) {
    throw std::domain_error("enumeration supports 1 <= n <= 8");
  }
  if (n <= 6) {
    visit_caps<1>(n, max_k, visit);
  } else if (n == 7) {
    visit_caps<2>(n, max_k, visit);
  } else {
    visit_caps<4>(n, max_k, visit);
  }
}

} // namespace evenquads
