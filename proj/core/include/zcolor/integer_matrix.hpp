#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace zcolor {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  IntMatrix without(std::size_t row, std::size_t col) const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k);
  void add_col(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t i);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_diagonal() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * M * V = S with U, V unimodular and S diagonal, diagonal entries
/// non-negative with d1 | d2 | ... (zeros last).
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  std::size_t rank = 0;

  IntVector diagonal() const;
};

/// Exact Smith normal form. Pivots on the entry of least absolute value to keep
/// intermediate coefficients small. When `with_transforms` is false, U and V
/// are left empty.
SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms = true);

/// Row Hermite normal form of the lattice spanned by `vectors`: echelon rows
/// with positive pivots and entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped. Deterministic for a given lattice.
std::vector<IntVector> hermite_normal_form(std::vector<IntVector> vectors, std::size_t dim);

/// Integer lattice basis (HNF-canonical) of {x in Z^cols : M x = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

struct IntegerSolution {
  IntVector x;
  bool unique = false;
};

/// Solves A x = b over the integers. Returns nothing when no integer solution
/// exists; otherwise the solution with all free SNF coordinates set to zero.
std::optional<IntegerSolution> solve_integer(const IntMatrix& a, const IntVector& b);

/// |det| of a square matrix, 0 when singular; 1 for the 0x0 matrix.
Integer abs_determinant(const IntMatrix& m);

}  // namespace zcolor
