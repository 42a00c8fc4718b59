#ifndef QDEG_EXACT_MATH_HPP
#define QDEG_EXACT_MATH_HPP

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qdeg {

using Integer = mpz_class;
/// Exact rational. GMP keeps results of arithmetic in lowest terms with a
/// positive denominator; values built from raw parts go through
/// make_rational.
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  bool operator==(const Matrix& other) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
IntVector multiply(const IntMatrix& m, std::span<const Integer> v);

/// Column-style Hermite reduction: unimodular U with M*U = [E | 0], where E is
/// in column echelon form with `rank` nonzero columns.
struct ColumnEchelon {
  IntMatrix reduced;  // M*U
  IntMatrix unimodular;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // pivot row of each nonzero column
};
ColumnEchelon column_echelon(const IntMatrix& m);

/// Basis of the saturated lattice {u in Z^n : M u = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

/// True iff the columns of M generate Z^d as a lattice.
bool columns_generate_lattice(const IntMatrix& m);

struct RrefResult {
  RatMatrix form;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};
RrefResult rref(RatMatrix m);

/// Basis of {v in Q^n : M v = 0}, one vector per free column.
std::vector<RatVector> rational_kernel(const RatMatrix& m);

/// Throws ValidationError on dimension mismatch.
bool in_span(std::span<const Rational> v, std::span<const RatVector> basis);

std::size_t rank_of(std::span<const RatVector> vectors);

}  // namespace qdeg

#endif
