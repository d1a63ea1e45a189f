#ifndef DCAT_SQUARE_HPP
#define DCAT_SQUARE_HPP

#include <string>
#include <vector>

#include "dcat/category.hpp"
#include "dcat/errors.hpp"

namespace dcat {

// A square of the double category: the quintuple (m: u a/c v) with top edge
// a and bottom edge c in H, left edge u and right edge v in V, and content m
// in M sitting at the bottom-right corner, subject to the boundary law
// av = ucm evaluated in P.
struct Square {
  ArrowId m;
  ArrowId a;  // top
  ArrowId c;  // bottom
  ArrowId u;  // left
  ArrowId v;  // right

  friend bool operator==(const Square&, const Square&) = default;
};

// Lexicographic on (a, c, u, v, m); fixes the canonical enumeration order.
bool square_less(const Square& lhs, const Square& rhs);

std::string square_to_string(const Square& q);

// A rows x cols array of squares. Horizontally adjacent squares must share
// their vertical edge and vertically adjacent squares their horizontal edge;
// paste_grid checks this and reports the offending position.
struct SquareGrid {
  int rows = 0;
  int cols = 0;
  std::vector<Square> cells;  // row-major
  std::string module_ref;     // optional serialization hint

  SquareGrid() = default;
  SquareGrid(int rows_, int cols_)
      : rows(rows_), cols(cols_), cells(static_cast<std::size_t>(rows_) *
                                        static_cast<std::size_t>(cols_)) {}

  Square& at(int row, int col) {
    return cells[static_cast<std::size_t>(row) * cols + col];
  }
  const Square& at(int row, int col) const {
    return cells[static_cast<std::size_t>(row) * cols + col];
  }

  friend bool operator==(const SquareGrid&, const SquareGrid&) = default;
};

}  // namespace dcat

#endif  // DCAT_SQUARE_HPP
