#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace framed {

using Integer = mpz_class;
using IntegerVector = std::vector<Integer>;

// Dense integer matrix with arbitrary-precision entries, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  // Row-major initializer; throws DomainError if the count is wrong.
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix diagonal(std::span<const Integer> diag, std::size_t rows,
                                std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<Integer>& entries() const { return entries_; }

  IntegerVector row(std::size_t i) const;
  IntegerVector column(std::size_t j) const;
  IntegerMatrix transpose() const;
  // Rows [first, last) as a new matrix.
  IntegerMatrix row_block(std::size_t first, std::size_t last) const;
  // Columns [first, last) as a new matrix.
  IntegerMatrix column_block(std::size_t first, std::size_t last) const;

  bool is_zero() const;
  bool is_symmetric() const;

  // Elementary operations, used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  // column[target] += factor * column[source]
  void add_column_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_column(std::size_t j);

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerVector operator*(const IntegerMatrix& a, std::span<const Integer> x);

// Exact determinant by fraction-free (Bareiss) elimination. Square only.
Integer determinant(const IntegerMatrix& a);

// U * A * V = S with U, V unimodular and S in Smith normal form: nonnegative
// diagonal d1 | d2 | ... with zeros trailing. The inverses of U and V are
// carried along since homology coordinates need them.
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix S;
  IntegerMatrix V;
  IntegerMatrix U_inverse;
  IntegerMatrix V_inverse;

  // Number of nonzero diagonal entries.
  std::size_t rank() const;
  // The min(rows, cols) diagonal entries of S.
  IntegerVector diagonal() const;
};

// Deterministic for a fixed input. Pivots on the entry of least absolute
// value in the active block.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

// Structure of Z^rows / column-space(A): free rank and the invariant factors
// greater than one, in divisibility order.
struct CokernelStructure {
  std::size_t free_rank = 0;
  IntegerVector torsion;

  friend bool operator==(const CokernelStructure&, const CokernelStructure&) = default;
};

CokernelStructure cokernel_structure(const IntegerMatrix& a);

// Some integral x with A x = b, or nullopt if none exists. Throws DomainError
// when b does not have A.rows() entries.
std::optional<IntegerVector> solve_diophantine(const IntegerMatrix& a,
                                               std::span<const Integer> b);

// Matrix text format: "rows cols" followed by rows lines of cols integers.
IntegerMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const IntegerMatrix& m);

std::string to_string(const IntegerMatrix& m);

Integer gcd_of(std::span<const Integer> values);

}  // namespace framed
