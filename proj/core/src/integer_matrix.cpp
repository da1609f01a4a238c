#include "zcolor/integer_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "zcolor/errors.hpp"

namespace zcolor {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::without(std::size_t row, std::size_t col) const {
  IntMatrix m(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, r = 0; i < rows_; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, c = 0; j < cols_; ++j) {
      if (j == col) continue;
      m(r, c++) = (*this)(i, j);
    }
    ++r;
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    if ((*this)(src, j) != 0) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    if ((*this)(i, src) != 0) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size()) throw PreconditionError("matrix/vector shape mismatch");
  IntVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (a(i, j) != 0) out[i] += a(i, j) * v[j];
  return out;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

IntVector SmithForm::diagonal() const {
  IntVector d(std::min(S.rows(), S.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = S(i, i);
  return d;
}

namespace {

// Quotient rounded to nearest, so the remainder satisfies |r| <= |b|/2.
int cmp_abs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

Integer nearest_quotient(const Integer& a, const Integer& b) {
  Integer num = b > 0 ? Integer(2 * a + b) : Integer(-2 * a - b);
  Integer den = b > 0 ? Integer(2 * b) : Integer(-2 * b);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms) {
  SmithForm f;
  f.S = m;
  IntMatrix& S = f.S;
  const std::size_t rows = m.rows(), cols = m.cols();
  if (with_transforms) {
    f.U = IntMatrix::identity(rows);
    f.V = IntMatrix::identity(cols);
  }
  auto row_swap = [&](std::size_t a, std::size_t b) {
    S.swap_rows(a, b);
    if (with_transforms) f.U.swap_rows(a, b);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    S.swap_cols(a, b);
    if (with_transforms) f.V.swap_cols(a, b);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    S.add_row(dst, src, k);
    if (with_transforms) f.U.add_row(dst, src, k);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    S.add_col(dst, src, k);
    if (with_transforms) f.V.add_col(dst, src, k);
  };

  const std::size_t n = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < n; ++t) {
    for (;;) {
      // Pivot: least non-zero absolute value in the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (S(i, j) != 0 && (pi == rows || cmp_abs(S(i, j), S(pi, pj)) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == rows) goto done;
      row_swap(t, pi);
      col_swap(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (S(i, t) == 0) continue;
        Integer q = nearest_quotient(S(i, t), S(t, t));
        row_add(i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (S(t, j) == 0) continue;
        Integer q = nearest_quotient(S(t, j), S(t, t));
        col_add(j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (S(i, j) != 0 && !mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      if (with_transforms) f.U.negate_row(t);
    }
  }
done:
  f.rank = t;
  return f;
}

std::vector<IntVector> hermite_normal_form(std::vector<IntVector> vecs, std::size_t dim) {
  std::vector<IntVector> out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < vecs.size(); ++col) {
    // Euclid on column `col` among rows r.. until one non-zero remains.
    for (;;) {
      std::size_t best = vecs.size();
      for (std::size_t i = r; i < vecs.size(); ++i)
        if (vecs[i][col] != 0 && (best == vecs.size() || cmp_abs(vecs[i][col], vecs[best][col]) < 0)) best = i;
      if (best == vecs.size()) break;
      std::swap(vecs[r], vecs[best]);
      bool others = false;
      for (std::size_t i = r + 1; i < vecs.size(); ++i) {
        if (vecs[i][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), vecs[i][col].get_mpz_t(), vecs[r][col].get_mpz_t());
        for (std::size_t j = col; j < dim; ++j) vecs[i][j] -= q * vecs[r][j];
        if (vecs[i][col] != 0) others = true;
      }
      if (!others) break;
    }
    if (r < vecs.size() && vecs[r][col] != 0) {
      if (vecs[r][col] < 0)
        for (auto& x : vecs[r]) x = -x;
      for (std::size_t i = 0; i < r; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), vecs[i][col].get_mpz_t(), vecs[r][col].get_mpz_t());
        if (q != 0)
          for (std::size_t j = col; j < dim; ++j) vecs[i][j] -= q * vecs[r][j];
      }
      ++r;
    }
  }
  for (std::size_t i = 0; i < r; ++i) out.push_back(std::move(vecs[i]));
  return out;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  SmithForm f = smith_normal_form(m, true);
  std::vector<IntVector> basis;
  for (std::size_t j = f.rank; j < m.cols(); ++j) basis.push_back(f.V.col(j));
  return hermite_normal_form(std::move(basis), m.cols());
}

std::optional<IntegerSolution> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw PreconditionError("right-hand side has wrong length");
  SmithForm f = smith_normal_form(a, true);
  IntVector ub = f.U * b;
  IntVector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < f.rank) {
      const Integer& s = f.S(i, i);
      if (!mpz_divisible_p(ub[i].get_mpz_t(), s.get_mpz_t())) return std::nullopt;
      y[i] = ub[i] / s;
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  IntegerSolution sol;
  sol.x = f.V * y;
  sol.unique = f.rank == a.cols();
  return sol;
}

Integer abs_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  SmithForm f = smith_normal_form(m, false);
  if (f.rank < m.rows()) return 0;
  Integer d = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) d *= f.S(i, i);
  return abs(d);
}

}  // namespace zcolor
