#pragma once

#include "evenquads/cap.hpp"
#include "oracles.hpp"

#include <vector>

namespace testing {

inline std::vector<evenquads::Point> points(int n, const std::vector<oracle::Bits>& bits) {
  std::vector<evenquads::Point> out;
  out.reserve(bits.size());
  for (auto b : bits) out.emplace_back(n, b);
  return out;
}

inline std::vector<oracle::Bits> bits_of(std::span<const evenquads::Point> pts) {
  std::vector<oracle::Bits> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(p.bits());
  return out;
}

inline evenquads::Cap cap(int n, const std::vector<oracle::Bits>& bits) {
  return evenquads::Cap(n, points(n, bits));
}

} // namespace testing
