#include "qdeg/monomial_order.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace qdeg {

ExponentVector unit_exponent(std::size_t n, std::size_t var) {
  ExponentVector u(n, 0);
  u[var] = 1;
  return u;
}

Exponent total_degree(const ExponentVector& u) {
  return std::accumulate(u.begin(), u.end(), Exponent{0});
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExponentVector product(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ExponentVector quotient(const ExponentVector& b, const ExponentVector& a) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool coprime(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

namespace {

std::strong_ordering grevlex_tail(const ExponentVector& a, const ExponentVector& b) {
  // Equal total degree: the monomial with the smaller exponent in the last
  // differing variable is larger.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_grevlex(const ExponentVector& a, const ExponentVector& b) {
  auto by_degree = total_degree(a) <=> total_degree(b);
  if (by_degree != 0) return by_degree;
  return grevlex_tail(a, b);
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const ExponentVector& a,
                                            const ExponentVector& b) const {
  assert(a.size() == b.size());
  switch (kind_) {
    case Kind::Lex:
      return a <=> b;
    case Kind::GRevLex:
      return compare_grevlex(a, b);
    case Kind::Elimination: {
      std::size_t k = std::min(block_, a.size());
      Exponent da = std::accumulate(a.begin(), a.begin() + k, Exponent{0});
      Exponent db = std::accumulate(b.begin(), b.begin() + k, Exponent{0});
      if (da != db) return da <=> db;
      return compare_grevlex(a, b);
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_module_terms(const MonomialOrder& order, const ExponentVector& a,
                                          std::size_t comp_a, const ExponentVector& b,
                                          std::size_t comp_b) {
  auto c = order.compare(a, b);
  if (c != 0) return c;
  return comp_b <=> comp_a;
}

}  // namespace qdeg
