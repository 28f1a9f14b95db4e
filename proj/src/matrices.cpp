#include "windinv/matrices.hpp"

#include <stdexcept>

#include "windinv/errors.hpp"

namespace windinv {

LaurentMatrix LaurentMatrix::identity(int n) {
  LaurentMatrix m(n, n);
  for (int k = 1; k <= n; ++k) m.at(k, k) = LaurentPoly(1);
  return m;
}

std::string LaurentMatrix::str() const {
  std::string out;
  for (int r = 1; r <= rows_; ++r) {
    if (r > 1) out += "; ";
    for (int c = 1; c <= cols_; ++c) {
      if (c > 1) out += ", ";
      out += at(r, c).str();
    }
  }
  return out;
}

LaurentMatrix LaurentMatrix::parse(std::string_view text) {
  std::vector<std::vector<LaurentPoly>> rows;
  std::size_t row_start = 0;
  auto parse_row = [&](std::string_view row_text) {
    std::vector<LaurentPoly> row;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = row_text.find(',', start);
      std::string_view entry = row_text.substr(
          start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      row.push_back(LaurentPoly::parse(entry));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return row;
  };
  while (true) {
    std::size_t semi = text.find(';', row_start);
    std::string_view row_text = text.substr(
        row_start, semi == std::string_view::npos ? std::string_view::npos : semi - row_start);
    rows.push_back(parse_row(row_text));
    if (semi == std::string_view::npos) break;
    row_start = semi + 1;
  }
  LaurentMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) {
      throw ParseError("matrix rows have unequal lengths", r);
    }
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m.at(static_cast<int>(r) + 1, static_cast<int>(c) + 1) = rows[r][c];
    }
  }
  return m;
}

LaurentMatrix mul(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mul: dimension mismatch");
  LaurentMatrix out(a.rows(), b.cols());
  for (int r = 1; r <= a.rows(); ++r) {
    for (int c = 1; c <= b.cols(); ++c) {
      LaurentPoly sum;
      for (int k = 1; k <= a.cols(); ++k) sum += a.at(r, k) * b.at(k, c);
      out.at(r, c) = sum;
    }
  }
  return out;
}

LaurentMatrix transpose(const LaurentMatrix& a) {
  LaurentMatrix out(a.cols(), a.rows());
  for (int r = 1; r <= a.rows(); ++r) {
    for (int c = 1; c <= a.cols(); ++c) out.at(c, r) = a.at(r, c);
  }
  return out;
}

namespace {

LaurentMatrix minor_matrix(const LaurentMatrix& a, int drop_row, int drop_col) {
  LaurentMatrix out(a.rows() - 1, a.cols() - 1);
  int rr = 1;
  for (int r = 1; r <= a.rows(); ++r) {
    if (r == drop_row) continue;
    int cc = 1;
    for (int c = 1; c <= a.cols(); ++c) {
      if (c == drop_col) continue;
      out.at(rr, cc) = a.at(r, c);
      ++cc;
    }
    ++rr;
  }
  return out;
}

}  // namespace

LaurentPoly det(const LaurentMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix is not square");
  if (a.rows() > 4) throw std::invalid_argument("det: cofactor expansion capped at 4x4");
  if (a.rows() == 0) return LaurentPoly(1);
  if (a.rows() == 1) return a.at(1, 1);
  LaurentPoly sum;
  for (int c = 1; c <= a.cols(); ++c) {
    LaurentPoly cofactor = a.at(1, c) * det(minor_matrix(a, 1, c));
    if (c % 2 == 0) cofactor = -cofactor;
    sum += cofactor;
  }
  return sum;
}

LaurentMatrix adjugate_inverse_2x2(const LaurentMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) {
    throw std::invalid_argument("adjugate_inverse_2x2: matrix must be 2x2");
  }
  LaurentPoly d = det(a);
  if (!d.is_unit()) {
    throw std::domain_error("adjugate_inverse_2x2: determinant is not a unit");
  }
  LaurentPoly inv_det = unit_inverse(d);
  LaurentMatrix out(2, 2);
  out.at(1, 1) = inv_det * a.at(2, 2);
  out.at(1, 2) = inv_det * -a.at(1, 2);
  out.at(2, 1) = inv_det * -a.at(2, 1);
  out.at(2, 2) = inv_det * a.at(1, 1);
  return out;
}

LaurentMatrix evans_matrix() {
  const LaurentPoly x_minus_1 = LaurentPoly::monomial(1, 0, 1) - LaurentPoly(1);
  const LaurentPoly y_inv = LaurentPoly::monomial(0, -1, 1);
  LaurentMatrix m(2, 2);
  m.at(1, 1) = LaurentPoly(1) - LaurentPoly(2) * x_minus_1 * y_inv;
  m.at(1, 2) = LaurentPoly(4) * y_inv;
  m.at(2, 1) = -(x_minus_1 * x_minus_1 * y_inv);
  m.at(2, 2) = LaurentPoly(1) + LaurentPoly(2) * x_minus_1 * y_inv;
  return m;
}

LaurentMatrix realize(const GEFactor& f, int n) {
  if (const auto* e = std::get_if<ElementaryFactor>(&f)) {
    if (e->i < 1 || e->i > n || e->j < 1 || e->j > n) {
      throw std::invalid_argument("realize: elementary position out of range");
    }
    if (e->i == e->j) {
      throw std::invalid_argument("realize: elementary entry must be off-diagonal");
    }
    LaurentMatrix m = LaurentMatrix::identity(n);
    m.at(e->i, e->j) = e->a;
    return m;
  }
  const auto& d = std::get<DiagonalFactor>(f);
  if (static_cast<int>(d.units.size()) != n) {
    throw std::invalid_argument("realize: diagonal size mismatch");
  }
  LaurentMatrix m(n, n);
  for (int k = 1; k <= n; ++k) {
    if (!d.units[k - 1].is_unit()) {
      throw std::invalid_argument("realize: diagonal entry is not a unit");
    }
    m.at(k, k) = d.units[k - 1];
  }
  return m;
}

bool check_ge_product(const std::vector<GEFactor>& factors, const LaurentMatrix& target) {
  if (target.rows() != target.cols()) {
    throw std::invalid_argument("check_ge_product: target is not square");
  }
  LaurentMatrix product = LaurentMatrix::identity(target.rows());
  for (const GEFactor& f : factors) {
    product = mul(product, realize(f, target.rows()));
  }
  return product == target;
}

GEFactor reduce_e1_fixed(const LaurentMatrix& n) {
  if (n.rows() != 2 || n.cols() != 2) {
    throw std::invalid_argument("reduce_e1_fixed: matrix must be 2x2");
  }
  if (!(n.at(1, 1) == LaurentPoly(1)) || !n.at(2, 1).is_zero()) {
    throw std::invalid_argument("reduce_e1_fixed: first column must be (1, 0)^t");
  }
  if (!det(n).is_one()) {
    throw std::invalid_argument("reduce_e1_fixed: determinant must be 1");
  }
  // N = [[1, A], [0, 1]] now, so E' = Elementary(1, 2, -A) gives E'N = Id.
  return ElementaryFactor{1, 2, -n.at(1, 2)};
}

LaurentMatrix outer_product(std::span<const LaurentPoly> col, std::span<const LaurentPoly> row) {
  LaurentMatrix out(static_cast<int>(col.size()), static_cast<int>(row.size()));
  for (std::size_t r = 0; r < col.size(); ++r) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out.at(static_cast<int>(r) + 1, static_cast<int>(c) + 1) = col[r] * row[c];
    }
  }
  return out;
}

}  // namespace windinv
