#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "windinv/laurent.hpp"

namespace windinv {

// Dense matrix over Z[X, X^-1, Y, Y^-1], row-major.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

  static LaurentMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // 1-based, matching the usual matrix-entry convention.
  LaurentPoly& at(int row, int col) {
    return entries_[static_cast<std::size_t>(row - 1) * cols_ + (col - 1)];
  }
  const LaurentPoly& at(int row, int col) const {
    return entries_[static_cast<std::size_t>(row - 1) * cols_ + (col - 1)];
  }

  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

  // Rows separated by ';', entries by ',', each entry in Laurent text form.
  std::string str() const;
  static LaurentMatrix parse(std::string_view text);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<LaurentPoly> entries_;
};

LaurentMatrix mul(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix transpose(const LaurentMatrix& a);

// Cofactor expansion, capped at 4x4; throws std::invalid_argument beyond.
LaurentPoly det(const LaurentMatrix& a);

// A^-1 = det(A)^-1 * adj(A) for 2x2 A with unit determinant; throws
// std::domain_error when det(A) is not a unit (A is not in GL_2).
LaurentMatrix adjugate_inverse_2x2(const LaurentMatrix& a);

// The 2x2 matrix over Z[X,X^-1,Y,Y^-1] that is invertible but not a
// product of elementary and diagonal matrices (Evans):
//   [ 1-2(X-1)Y^-1    4Y^-1        ]
//   [ -(X-1)^2 Y^-1   1+2(X-1)Y^-1 ]
LaurentMatrix evans_matrix();

// Identity plus a single off-diagonal entry `a` at (i, j), 1-based.
struct ElementaryFactor {
  int i = 1;
  int j = 2;
  LaurentPoly a;
};

// Diagonal matrix whose entries must all be units.
struct DiagonalFactor {
  std::vector<LaurentPoly> units;
};

using GEFactor = std::variant<ElementaryFactor, DiagonalFactor>;

// Realizes a factor as an n x n matrix, validating its invariants
// (elementary position in range and off-diagonal, diagonal entries units).
LaurentMatrix realize(const GEFactor& f, int n);

// Certificate checker for membership in the subgroup generated by
// elementary and diagonal matrices: true iff the ordered product of the
// realized factors equals `target`. Membership is only ever certified,
// never decided.
bool check_ge_product(const std::vector<GEFactor>& factors, const LaurentMatrix& target);

// Given 2x2 N with first column (1, 0)^t and det(N) = 1 -- which forces
// N = [[1, A], [0, 1]] -- returns Elementary(1, 2, -A), whose realization
// left-multiplies N to the identity. Throws std::invalid_argument when the
// preconditions fail.
GEFactor reduce_e1_fixed(const LaurentMatrix& n);

// Entry (i, j) = col[i] * row[j].
LaurentMatrix outer_product(std::span<const LaurentPoly> col, std::span<const LaurentPoly> row);

}  // namespace windinv
