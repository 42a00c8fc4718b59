#include "qdeg/exact_math.hpp"

#include "qdeg/errors.hpp"

#include <algorithm>
#include <utility>

namespace qdeg {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("expected digits", offset + i);
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') throw ParseError("expected digit", offset + k);
  }
  Integer z(std::string(text.substr(i)), 10);
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, 0));
  Integer num = parse_integer(text.substr(0, slash), 0);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw ParseError("signed denominator", slash + 1);
  Integer den = parse_integer(den_text, slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return make_rational(num, den);
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

IntVector multiply(const IntMatrix& m, std::span<const Integer> v) {
  if (v.size() != m.cols()) throw ValidationError("matrix-vector dimension mismatch");
  IntVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

namespace {

// Column operation on (M | U): replace columns (i, j) by
// (p*col_i + q*col_j, s*col_i + t*col_j).
void combine_columns(IntMatrix& m, std::size_t i, std::size_t j, const Integer& p,
                     const Integer& q, const Integer& s, const Integer& t) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer a = m(r, i);
    Integer b = m(r, j);
    m(r, i) = p * a + q * b;
    m(r, j) = s * a + t * b;
  }
}

void swap_columns(IntMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Nearest integer to num/den, den > 0.
Integer round_div(const Integer& num, const Integer& den) {
  Integer twice = 2 * num + den;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), Integer(2 * den).get_mpz_t());
  return q;
}

// Pairwise size reduction; keeps the lattice, shrinks entries.
void size_reduce(std::vector<IntVector>& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        Integer nj = dot(basis[j], basis[j]);
        if (nj == 0) continue;
        Integer k = round_div(dot(basis[i], basis[j]), nj);
        if (k == 0) continue;
        IntVector candidate = basis[i];
        for (std::size_t c = 0; c < candidate.size(); ++c) candidate[c] -= k * basis[j][c];
        if (dot(candidate, candidate) < dot(basis[i], basis[i])) {
          basis[i] = std::move(candidate);
          changed = true;
        }
      }
    }
  }
}

}  // namespace

ColumnEchelon column_echelon(const IntMatrix& m) {
  ColumnEchelon out;
  out.reduced = m;
  out.unimodular = IntMatrix::identity(m.cols());
  IntMatrix& a = out.reduced;
  IntMatrix& u = out.unimodular;
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < a.rows() && pivot < a.cols(); ++r) {
    for (std::size_t c = pivot + 1; c < a.cols(); ++c) {
      if (a(r, c) == 0) continue;
      if (a(r, pivot) == 0) {
        swap_columns(a, pivot, c);
        swap_columns(u, pivot, c);
        continue;
      }
      Integer x = a(r, pivot);
      Integer y = a(r, c);
      Integer g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      // [p -y/g; q x/g] has determinant 1.
      Integer s = -y / g;
      Integer t = x / g;
      combine_columns(a, pivot, c, p, q, s, t);
      combine_columns(u, pivot, c, p, q, s, t);
    }
    if (a(r, pivot) != 0) {
      if (a(r, pivot) < 0) {
        for (std::size_t k = 0; k < a.rows(); ++k) a(k, pivot) = -a(k, pivot);
        for (std::size_t k = 0; k < u.rows(); ++k) u(k, pivot) = -u(k, pivot);
      }
      out.pivot_rows.push_back(r);
      ++pivot;
    }
  }
  out.rank = pivot;
  return out;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  ColumnEchelon e = column_echelon(m);
  std::vector<IntVector> basis;
  for (std::size_t c = e.rank; c < m.cols(); ++c) basis.push_back(e.unimodular.column(c));
  size_reduce(basis);
  return basis;
}

bool columns_generate_lattice(const IntMatrix& m) {
  ColumnEchelon e = column_echelon(m);
  if (e.rank != m.rows()) return false;
  for (std::size_t c = 0; c < e.rank; ++c) {
    if (abs(e.reduced(e.pivot_rows[c], c)) != 1) return false;
  }
  return true;
}

RrefResult rref(RatMatrix m) {
  RrefResult out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t found = row;
    while (found < m.rows() && m(found, col) == 0) ++found;
    if (found == m.rows()) continue;
    if (found != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(found, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = out.pivots.size();
  out.form = std::move(m);
  return out;
}

std::vector<RatVector> rational_kernel(const RatMatrix& m) {
  RrefResult e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.form(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_of(std::span<const RatVector> vectors) {
  if (vectors.empty()) return 0;
  RatMatrix m(vectors.size(), vectors.front().size());
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != m.cols()) throw ValidationError("vector dimension mismatch");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = vectors[r][c];
  }
  return rref(std::move(m)).rank;
}

bool in_span(std::span<const Rational> v, std::span<const RatVector> basis) {
  for (const auto& b : basis)
    if (b.size() != v.size()) throw ValidationError("vector dimension mismatch");
  if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) return true;
  if (basis.empty()) return false;
  std::vector<RatVector> with(basis.begin(), basis.end());
  std::size_t before = rank_of(with);
  with.emplace_back(v.begin(), v.end());
  return rank_of(with) == before;
}

}  // namespace qdeg
