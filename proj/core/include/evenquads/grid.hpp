#pragma once

#include "evenquads/point.hpp"

namespace evenquads {

/// A cell of the recursive-coordinate grid; row 0 is the top row.
struct GridCell {
  int row = 0;
  int col = 0;
  friend constexpr bool operator==(const GridCell&, const GridCell&) = default;
};

/// Grid shape for Z_2^n: 2^floor(n/2) rows by 2^ceil(n/2) columns.
struct GridShape {
  int rows = 0;
  int cols = 0;
};

[[nodiscard]] GridShape grid_shape(int n);

/// Recursive coordinates: each successive pair of bits picks a quadrant
/// (00 top-left, 01 top-right, 10 bottom-left, 11 bottom-right) of the
/// current super-square. For odd n the final unpaired bit picks the left
/// or right cell of a horizontal pair.
[[nodiscard]] GridCell point_to_grid(const Point& p);

/// Inverse of point_to_grid. Throws std::out_of_range for cells off the grid.
[[nodiscard]] Point grid_to_point(int row, int col, int n);

} // namespace evenquads
