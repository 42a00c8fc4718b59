#ifndef QDEG_MONOMIAL_ORDER_HPP
#define QDEG_MONOMIAL_ORDER_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qdeg {

using Exponent = std::int32_t;
/// Exponent vector u of a monomial x^u; length is the ring's variable count.
using ExponentVector = std::vector<Exponent>;

ExponentVector unit_exponent(std::size_t n, std::size_t var);
Exponent total_degree(const ExponentVector& u);
bool divides(const ExponentVector& a, const ExponentVector& b);
ExponentVector product(const ExponentVector& a, const ExponentVector& b);
/// b / a, requires divides(a, b).
ExponentVector quotient(const ExponentVector& b, const ExponentVector& a);
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
bool coprime(const ExponentVector& a, const ExponentVector& b);

/// Global term order on exponent vectors.
///
/// Elimination(k) compares the total degree in the first k variables and
/// breaks ties with graded reverse lexicographic order on all variables; it
/// is used to eliminate auxiliary variables placed at the front.
class MonomialOrder {
public:
  enum class Kind { GRevLex, Lex, Elimination };

  constexpr MonomialOrder() = default;
  static constexpr MonomialOrder grevlex() { return MonomialOrder(Kind::GRevLex, 0); }
  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static constexpr MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(Kind::Elimination, block);
  }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const;

  bool operator==(const MonomialOrder&) const = default;

private:
  constexpr MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  Kind kind_ = Kind::GRevLex;
  std::size_t block_ = 0;
};

/// Module term order: compare monomials first, then components with the
/// smaller component index ranking higher (position-up).
std::strong_ordering compare_module_terms(const MonomialOrder& order, const ExponentVector& a,
                                          std::size_t comp_a, const ExponentVector& b,
                                          std::size_t comp_b);

}  // namespace qdeg

#endif
