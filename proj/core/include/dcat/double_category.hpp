#ifndef DCAT_DOUBLE_CATEGORY_HPP
#define DCAT_DOUBLE_CATEGORY_HPP

#include <cstdint>
#include <vector>

#include "dcat/action.hpp"
#include "dcat/diagnostics.hpp"
#include "dcat/double_module.hpp"
#include "dcat/square.hpp"

namespace dcat {

// Knobs for the exhaustive-or-sampled law checks. Populations at or below
// the caps are checked exhaustively; larger ones fall back to deterministic
// seeded sampling, recorded in the report.
struct CheckOptions {
  std::uint64_t seed = 0;
  std::uint64_t sample = 100000;              // grids drawn when sampling
  std::uint64_t max_grids = 1000000;          // exhaustive 2x2-grid cap
  std::uint64_t max_triples = 20000000;       // exhaustive associativity cap
  std::uint64_t max_candidates = 10000000;    // enumerate_squares tuple cap
};

// True iff the five arrows type as a square and the boundary law av = ucm
// holds in P. Throws UnknownArrowError for ids missing from M/H/V.
bool is_square(const DoubleModule& dm, const Square& q);

// All squares over dm, in canonical order. Throws SizeLimitError when the
// candidate-tuple count exceeds options.max_candidates.
std::vector<Square> enumerate_squares(const DoubleModule& dm,
                                      const CheckOptions& options = {});

// Horizontal composition (left square then right square):
//   (m: u a/c v) o2 (n: v b/d w) = (m^d n : u ab/cd w).
Square compose_h(const DoubleModule& dm, const Square& lhs, const Square& rhs);

// Vertical composition (top square then bottom square):
//   (m: u a/c v) o1 (p: x c/e y) = (p m^y : ux a/e vy).
Square compose_v(const DoubleModule& dm, const Square& top,
                 const Square& bottom);

// Degenerate squares: identity_h(u) = (1: u id/id u) is the unit for o2 at
// the vertical edge u; identity_v(a) = (1: id a/a id) the unit for o1 at the
// horizontal edge a.
Square identity_h(const DoubleModule& dm, const ArrowId& v_arrow);
Square identity_v(const DoubleModule& dm, const ArrowId& h_arrow);

// Inverses for the groupoid case (M, H, V, P all groupoids):
//   inverse_h(q) = ((m^(c^-1))^-1 : v a^-1/c^-1 u),
//   inverse_v(q) = ((m^(v^-1))^-1 : u^-1 c/a v^-1).
Square inverse_h(const DoubleModule& dm, const Square& q);
Square inverse_v(const DoubleModule& dm, const Square& q);

// True iff the content m is an identity of M. Thin squares form a
// sub-double-category.
bool is_thin(const DoubleModule& dm, const Square& q);

// Pastes a grid, composing rows with o2 first and the row composites with
// o1 (the canonical order; interchange makes the other order agree on valid
// modules). Throws NotComposableError naming the offending grid position.
Square paste_grid(const DoubleModule& dm, const SquareGrid& grid);

// Columns-first evaluation, exposed for interchange verification.
Square paste_grid_columns_first(const DoubleModule& dm, const SquareGrid& grid);

// For every composable 2x2 grid (exhaustively or sampled per options):
// checks that the two pasting orders agree, that the transport-exchange
// instance attached to the grid,  m^(yf) q = q m^(dz)  with (y, d, f, z) the
// edges of the bottom-right square and q its content, holds, and that the
// two verdicts coincide grid by grid. Works on structurally valid candidates
// whose module laws may fail; each interchange violation carries its
// transport-exchange witness.
DiagnosticReport check_interchange_equiv(const DoubleModule& dm,
                                         const CheckOptions& options = {});

// Double-category laws over enumerate_squares(dm): both compositions closed
// on squares and associative, the degenerate squares are two-sided units,
// interchange holds on all (or sampled) 2x2 grids, and, when all four
// categories are groupoids, inverse_h / inverse_v satisfy both one-sided
// inverse laws for every square.
DiagnosticReport validate_double_category(const DoubleModule& dm,
                                          const CheckOptions& options = {});

// A crossed module assembled from degenerate squares at one object (see
// extract_crossed_module_h/_v), packaged so check_crossed_module can verify
// it: boundary: group -> target with `action` of target on group.
struct CrossedModule {
  FiniteCategory group;
  FiniteCategory target;
  IdObjFunctor boundary;
  RightAction action;
  ObjectId base;
};

// Horizontal extraction at object x: elements are squares (m: 1 a/1 1),
// that is pairs (m, a) with mu m = phi a, multiplied componentwise via o2;
// the boundary sends (m, a) to a in H(x, x) and h acts by
// (m, a)^h = (m^h, h^-1 a h). Requires all four categories to be groupoids.
CrossedModule extract_crossed_module_h(const DoubleModule& dm,
                                       const ObjectId& x);

// Vertical extraction at object x: elements are squares (m: 1 1/1 v), pairs
// (m, v) with mu m = psi v, multiplied via o1 with its twist
// (m, v)(p, y) = (p m^y, vy); boundary into V(x, x), action
// (m, v)^w = (m^w, w^-1 v w).
CrossedModule extract_crossed_module_v(const DoubleModule& dm,
                                       const ObjectId& x);

DiagnosticReport check_crossed_module(const CrossedModule& cm);

}  // namespace dcat

#endif  // DCAT_DOUBLE_CATEGORY_HPP
