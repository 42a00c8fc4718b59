#ifndef QDEG_POLYNOMIAL_HPP
#define QDEG_POLYNOMIAL_HPP

#include "qdeg/exact_math.hpp"
#include "qdeg/monomial_order.hpp"

#include <span>
#include <string>
#include <vector>

namespace qdeg {

struct Term {
  Rational coef;
  ExponentVector exps;

  bool operator==(const Term&) const = default;
};

/// Polynomial over Q in a fixed number of variables. Terms are kept sorted
/// strictly decreasing in the polynomial's term order, with no zero
/// coefficients and no repeated monomials; the empty term list is zero.
class Polynomial {
public:
  explicit Polynomial(std::size_t nvars = 0, MonomialOrder order = MonomialOrder::grevlex())
      : nvars_(nvars), order_(order) {}

  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial monomial(ExponentVector exps, Rational coef = 1,
                             MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial constant(std::size_t nvars, Rational c,
                             MonomialOrder order = MonomialOrder::grevlex());

  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& lead() const { return terms_.front(); }

  /// Same polynomial, re-sorted under another order.
  Polynomial with_order(MonomialOrder order) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Rational& c);
  /// this += c * x^m * g
  void add_scaled(const Rational& c, const ExponentVector& m, const Polynomial& g);

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(Polynomial f, const Rational& c) { return f *= c; }

  Polynomial pow(unsigned e) const;

  /// Equality of the represented polynomials; both must use the same order.
  bool operator==(const Polynomial& g) const { return nvars_ == g.nvars_ && terms_ == g.terms_; }

private:
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Renders in the parser's grammar, e.g. "x_1*x_3 - 3/2*x_2^2".
std::string render(const Polynomial& f, std::span<const std::string> names);

}  // namespace qdeg

#endif
