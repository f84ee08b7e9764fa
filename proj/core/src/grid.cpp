#include "evenquads/grid.hpp"

#include <stdexcept>
#include <string>

namespace evenquads {

GridShape grid_shape(int n) {
  if (n < 1 || n > kMaxAmbientDim) {
    throw std::invalid_argument("ambient dimension must be in [1, 16]");
  }
  return GridShape{1 << (n / 2), 1 << ((n + 1) / 2)};
}

GridCell point_to_grid(const Point& p) {
  const int n = p.n();
  const int pairs = n / 2;
  GridCell cell;
  for (int i = 0; i < pairs; ++i) {
    cell.row = (cell.row << 1) | p.coordinate(2 * i);
    cell.col = (cell.col << 1) | p.coordinate(2 * i + 1);
  }
  if (n % 2 == 1) {
    cell.col = (cell.col << 1) | p.coordinate(n - 1);
  }
  return cell;
}

Point grid_to_point(int row, int col, int n) {
  const GridShape shape = grid_shape(n);
  if (row < 0 || row >= shape.rows || col < 0 || col >= shape.cols) {
    throw std::out_of_range("grid cell (" + std::to_string(row) + ", " + std::to_string(col) +
                            ") outside " + std::to_string(shape.rows) + "x" +
                            std::to_string(shape.cols) + " grid");
  }
  const int pairs = n / 2;
  const int odd = n % 2;
  std::uint32_t bits = 0;
  const int pair_cols = col >> odd;
  for (int i = 0; i < pairs; ++i) {
    const int shift = pairs - 1 - i;
    bits = (bits << 1) | static_cast<std::uint32_t>((row >> shift) & 1);
    bits = (bits << 1) | static_cast<std::uint32_t>((pair_cols >> shift) & 1);
  }
  if (odd) {
    bits = (bits << 1) | static_cast<std::uint32_t>(col & 1);
  }
  return Point(n, bits);
}

} // namespace evenquads
