#include "framed/exact_linalg.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "framed/errors.hpp"
#include "text_io.hpp"

namespace framed {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DomainError("matrix entry count " + std::to_string(entries_.size()) +
                      " does not match " + std::to_string(rows) + "x" +
                      std::to_string(cols));
  }
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix initializer");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::diagonal(std::span<const Integer> diag, std::size_t rows,
                                      std::size_t cols) {
  IntegerMatrix m(rows, cols);
  const std::size_t n = std::min({rows, cols, diag.size()});
  for (std::size_t i = 0; i < n; ++i) m(i, i) = diag[i];
  return m;
}

IntegerVector IntegerMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

IntegerVector IntegerMatrix::column(std::size_t j) const {
  IntegerVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::row_block(std::size_t first, std::size_t last) const {
  IntegerMatrix b(last - first, cols_);
  for (std::size_t i = first; i < last; ++i)
    for (std::size_t j = 0; j < cols_; ++j) b(i - first, j) = (*this)(i, j);
  return b;
}

IntegerMatrix IntegerMatrix::column_block(std::size_t first, std::size_t last) const {
  IntegerMatrix b(rows_, last - first);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = first; j < last; ++j) b(i, j - first) = (*this)(i, j);
  return b;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Integer& v) { return sgn(v) == 0; });
}

bool IntegerMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                     const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Integer& s = (*this)(source, j);
    if (sgn(s) != 0) (*this)(target, j) += factor * s;
  }
}

void IntegerMatrix::add_column_multiple(std::size_t target, std::size_t source,
                                        const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer& s = (*this)(i, source);
    if (sgn(s) != 0) (*this)(i, target) += factor * s;
  }
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntegerMatrix::negate_column(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DomainError("cannot multiply " + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                      std::to_string(b.cols()));
  }
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

IntegerVector operator*(const IntegerMatrix& a, std::span<const Integer> x) {
  if (a.cols() != x.size()) {
    throw DomainError("matrix has " + std::to_string(a.cols()) + " columns, vector has " +
                      std::to_string(x.size()) + " entries");
  }
  IntegerVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(x[j]) != 0) y[i] += a(i, j) * x[j];
  return y;
}

Integer determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && sgn(m(swap, k)) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        m(i, j) = std::move(v);
      }
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(S.rows(), S.cols());
  while (r < n && sgn(S(r, r)) != 0) ++r;
  return r;
}

IntegerVector SmithDecomposition::diagonal() const {
  const std::size_t n = std::min(S.rows(), S.cols());
  IntegerVector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = S(i, i);
  return d;
}

namespace {

// Working state of the reduction. Every row operation on S is mirrored on U
// (from the left) and as the inverse column operation on U_inverse; column
// operations likewise on V and V_inverse.
class SmithReducer {
 public:
  explicit SmithReducer(const IntegerMatrix& a)
      : s_(a),
        u_(IntegerMatrix::identity(a.rows())),
        v_(IntegerMatrix::identity(a.cols())),
        u_inv_(IntegerMatrix::identity(a.rows())),
        v_inv_(IntegerMatrix::identity(a.cols())) {}

  SmithDecomposition run() {
    const std::size_t m = s_.rows(), n = s_.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      auto pivot = smallest_in_block(t);
      if (!pivot) break;
      swap_rows(t, pivot->first);
      swap_columns(t, pivot->second);
      reduce_at(t);
      if (sgn(s_(t, t)) < 0) negate_row(t);
    }
    return {std::move(u_), std::move(s_), std::move(v_), std::move(u_inv_),
            std::move(v_inv_)};
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> smallest_in_block(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < s_.rows(); ++i) {
      for (std::size_t j = t; j < s_.cols(); ++j) {
        const Integer& v = s_(i, j);
        if (sgn(v) == 0) continue;
        if (!best || mpz_cmpabs(v.get_mpz_t(), s_(best->first, best->second).get_mpz_t()) < 0) best = {i, j};
        if (abs(v) == 1) return best;
      }
    }
    return best;
  }

  // Clears row t and column t outside the pivot, then enforces that the pivot
  // divides the remaining block.
  void reduce_at(std::size_t t) {
    const std::size_t m = s_.rows(), n = s_.cols();
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(s_(i, t)) == 0) continue;
        Integer q = s_(i, t) / s_(t, t);
        add_row_multiple(i, t, -q);
        if (sgn(s_(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(s_(t, j)) == 0) continue;
        Integer q = s_(t, j) / s_(t, t);
        add_column_multiple(j, t, -q);
        if (sgn(s_(t, j)) != 0) clean = false;
      }
      if (!clean) {
        move_smallest_of_cross_to_pivot(t);
        continue;
      }
      auto offender = non_divisible_entry(t);
      if (!offender) return;
      // Row t picks up the offending row; the next pass shrinks the pivot.
      add_row_multiple(t, *offender, 1);
    }
  }

  void move_smallest_of_cross_to_pivot(std::size_t t) {
    std::size_t best_i = t, best_j = t;
    for (std::size_t i = t + 1; i < s_.rows(); ++i)
      if (sgn(s_(i, t)) != 0 && mpz_cmpabs(s_(i, t).get_mpz_t(), s_(best_i, best_j).get_mpz_t()) < 0) best_i = i, best_j = t;
    for (std::size_t j = t + 1; j < s_.cols(); ++j)
      if (sgn(s_(t, j)) != 0 && mpz_cmpabs(s_(t, j).get_mpz_t(), s_(best_i, best_j).get_mpz_t()) < 0) best_i = t, best_j = j;
    swap_rows(t, best_i);
    swap_columns(t, best_j);
  }

  std::optional<std::size_t> non_divisible_entry(std::size_t t) const {
    const Integer& p = s_(t, t);
    for (std::size_t i = t + 1; i < s_.rows(); ++i)
      for (std::size_t j = t + 1; j < s_.cols(); ++j)
        if (sgn(s_(i, j)) != 0 && !mpz_divisible_p(s_(i, j).get_mpz_t(), p.get_mpz_t()))
          return i;
    return std::nullopt;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    s_.swap_rows(a, b);
    u_.swap_rows(a, b);
    u_inv_.swap_columns(a, b);
  }
  void swap_columns(std::size_t a, std::size_t b) {
    s_.swap_columns(a, b);
    v_.swap_columns(a, b);
    v_inv_.swap_rows(a, b);
  }
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& f) {
    s_.add_row_multiple(target, source, f);
    u_.add_row_multiple(target, source, f);
    u_inv_.add_column_multiple(source, target, -f);
  }
  void add_column_multiple(std::size_t target, std::size_t source, const Integer& f) {
    s_.add_column_multiple(target, source, f);
    v_.add_column_multiple(target, source, f);
    v_inv_.add_row_multiple(source, target, -f);
  }
  void negate_row(std::size_t i) {
    s_.negate_row(i);
    u_.negate_row(i);
    u_inv_.negate_column(i);
  }

  IntegerMatrix s_, u_, v_, u_inv_, v_inv_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a) { return SmithReducer(a).run(); }

CokernelStructure cokernel_structure(const IntegerMatrix& a) {
  const SmithDecomposition snf = smith_normal_form(a);
  CokernelStructure out;
  const std::size_t r = snf.rank();
  out.free_rank = a.rows() - r;
  for (std::size_t i = 0; i < r; ++i)
    if (snf.S(i, i) > 1) out.torsion.push_back(snf.S(i, i));
  return out;
}

std::optional<IntegerVector> solve_diophantine(const IntegerMatrix& a,
                                               std::span<const Integer> b) {
  if (b.size() != a.rows()) {
    throw DomainError("right-hand side has " + std::to_string(b.size()) +
                      " entries, matrix has " + std::to_string(a.rows()) + " rows");
  }
  // A x = b  <=>  S (V^-1 x) = U b.
  const SmithDecomposition snf = smith_normal_form(a);
  const IntegerVector c = snf.U * b;
  const std::size_t r = snf.rank();
  IntegerVector y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), snf.S(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), snf.S(i, i).get_mpz_t());
    } else if (sgn(c[i]) != 0) {
      return std::nullopt;
    }
  }
  return snf.V * std::span<const Integer>(y);
}

namespace {

Integer parse_integer(const std::string& token) {
  Integer v;
  std::string digits = token;
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  if (digits.empty() || v.set_str(digits, 10) != 0) {
    throw FormatError("expected an integer, found '" + token + "'");
  }
  return v;
}

}  // namespace

IntegerMatrix read_matrix(std::istream& in) {
  std::istringstream header(detail::next_data_line(in, "matrix header"));
  long long rows = -1, cols = -1;
  std::string extra;
  if (!(header >> rows >> cols) || rows < 0 || cols < 0 || (header >> extra)) {
    throw FormatError("matrix header must be 'rows cols' with nonnegative counts");
  }
  std::vector<Integer> entries;
  entries.reserve(static_cast<std::size_t>(rows * cols));
  for (long long i = 0; i < rows; ++i) {
    std::istringstream line(detail::next_data_line(in, "matrix row"));
    std::string token;
    long long count = 0;
    while (line >> token) {
      entries.push_back(parse_integer(token));
      ++count;
    }
    if (count != cols) {
      throw FormatError("matrix row " + std::to_string(i) + " has " + std::to_string(count) +
                        " entries, expected " + std::to_string(cols));
    }
  }
  return IntegerMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                       std::move(entries));
}

void write_matrix(std::ostream& out, const IntegerMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

std::string to_string(const IntegerMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

Integer gcd_of(std::span<const Integer> values) {
  Integer g = 0;
  for (const Integer& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

}  // namespace framed
