#pragma once

#include <map>
#include <string>
#include <vector>

#include "windinv/laurent.hpp"
#include "windinv/presentations.hpp"
#include "windinv/words.hpp"

namespace windinv {

// Winding numbers of the lattice loop traced by a commutator-subgroup word:
// cell (i, j) maps to the winding number around (i + 1/2, j + 1/2); only
// nonzero cells are stored.
using WindingGrid = std::map<Exponents, std::int64_t, ExponentOrder>;

// The winding invariant P_w = sum a_{i,j} X^i Y^j, computed incrementally:
// walking the letters, each vertical step of sign s at horizontal position
// k and lower height j contributes s * q_k * Y^j, with q_k the geometric
// column. Requires is_commutator_element(w); throws std::domain_error
// otherwise. The ray-casting oracle below is the definitional ground truth
// this summation is tested against.
LaurentPoly winding_invariant(const Word& w);

// Definitional ray-casting oracle, serial reference implementation: for
// each cell of the bounding box, cast a ray in the +x direction from the
// cell center and sum signed crossings with vertical path segments (+1
// upward, -1 downward). Rays at half-integer heights meet no horizontal
// segment and no vertex, so every crossing is transversal.
WindingGrid winding_grid_oracle(const Word& w);

// Same computation with the per-cell loop parallelized (OpenMP when
// available). Results are identical to the serial oracle.
WindingGrid winding_grid_oracle_parallel(const Word& w);

LaurentPoly grid_polynomial(const WindingGrid& grid);

// Componentwise winding invariants of the relators. Requires a rank-2
// cocommutative presentation.
std::vector<LaurentPoly> lambda_vector(const Presentation& p);

// Equality in the free metabelian group F/F'': true iff the exponent sums
// agree and the winding invariant of u * v^-1 vanishes.
bool equal_mod_second_derived(const Word& u, const Word& v);

enum class GridFormat { ascii, svg };

// Renders the traced loop and the per-cell winding numbers. ASCII marks
// the origin with 'o' and draws only edges the path traverses; SVG draws
// unit squares, the path with a start dot at the origin, and integer
// labels at cell centers.
std::string render_grid(const Word& w, GridFormat format);

}  // namespace windinv
