#include "evenquads/point.hpp"

#include <algorithm>
#include <charconv>

namespace evenquads {

Point::Point(int n, std::uint32_t bits) {
  if (n < 1 || n > kMaxAmbientDim) {
    throw std::invalid_argument("ambient dimension must be in [1, 16], got " + std::to_string(n));
  }
  if (bits >> n != 0) {
    throw std::invalid_argument("point " + std::to_string(bits) + " out of range for n=" +
                                std::to_string(n));
  }
  n_ = static_cast<std::uint8_t>(n);
  bits_ = bits;
}

int Point::coordinate(int i) const {
  if (i < 0 || i >= n_) {
    throw std::out_of_range("coordinate index out of range");
  }
  return static_cast<int>((bits_ >> (n_ - 1 - i)) & 1u);
}

std::string Point::to_binary() const {
  std::string out(n_, '0');
  for (int i = 0; i < n_; ++i) {
    if ((bits_ >> (n_ - 1 - i)) & 1u) {
      out[static_cast<std::size_t>(i)] = '1';
    }
  }
  return out;
}

Point Point::parse(std::string_view text, int n) {
  auto is_binary = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
  };
  std::string_view body = text;
  bool explicit_binary = false;
  if (body.starts_with("0b") || body.starts_with("0B")) {
    body.remove_prefix(2);
    explicit_binary = true;
  }
  if ((explicit_binary || static_cast<int>(body.size()) == n) && is_binary(body)) {
    if (static_cast<int>(body.size()) > n) {
      throw std::invalid_argument("binary point '" + std::string(text) + "' wider than n=" +
                                  std::to_string(n));
    }
    std::uint32_t bits = 0;
    for (char c : body) {
      bits = (bits << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return Point(n, bits);
  }
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (explicit_binary || ec != std::errc{} || ptr != body.data() + body.size() || body.empty()) {
    throw std::invalid_argument("cannot parse point '" + std::string(text) + "'");
  }
  return Point(n, value);
}

Point add(const Point& p, const Point& q) {
  if (p.n() != q.n()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(p.n()) + " vs " +
                                std::to_string(q.n()));
  }
  return Point(p.n(), p.bits() ^ q.bits());
}

bool is_quad(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (a == b || a == c || a == d || b == c || b == d || c == d) {
    throw std::invalid_argument("is_quad requires four distinct points");
  }
  return (a ^ b ^ c ^ d).bits() == 0;
}

Point exclude_of_triple(const Point& a, const Point& b, const Point& c) {
  if (a == b || a == c || b == c) {
    throw std::invalid_argument("exclude_of_triple requires three distinct points");
  }
  return a ^ b ^ c;
}

int common_dimension(std::span<const Point> points) {
  if (points.empty()) {
    throw std::invalid_argument("empty point set");
  }
  const int n = points.front().n();
  for (const auto& p : points) {
    if (p.n() != n) {
      throw std::invalid_argument("points of mixed ambient dimension");
    }
  }
  return n;
}

std::vector<Point> all_points(int n) {
  std::vector<Point> out;
  const std::uint32_t size = 1u << n;
  out.reserve(size);
  for (std::uint32_t b = 0; b < size; ++b) {
    out.emplace_back(n, b);
  }
  return out;
}

} // namespace evenquads
