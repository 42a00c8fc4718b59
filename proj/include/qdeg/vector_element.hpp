#ifndef QDEG_VECTOR_ELEMENT_HPP
#define QDEG_VECTOR_ELEMENT_HPP

#include "qdeg/polynomial.hpp"

#include <span>
#include <vector>

namespace qdeg {

struct ModuleTerm {
  Rational coef;
  ExponentVector exps;
  std::size_t component = 0;

  bool operator==(const ModuleTerm&) const = default;
};

/// Element of the free module R^rank, stored as a list of terms c*x^u*e_k
/// sorted strictly decreasing in the position-up module order.
class VectorElement {
public:
  VectorElement(std::size_t nvars = 0, std::size_t rank = 0,
                MonomialOrder order = MonomialOrder::grevlex())
      : nvars_(nvars), rank_(rank), order_(order) {}

  static VectorElement from_terms(std::size_t nvars, std::size_t rank,
                                  std::vector<ModuleTerm> terms, MonomialOrder order);
  /// Requires a nonempty span of polynomials sharing variables and order.
  static VectorElement from_components(std::span<const Polynomial> components);
  static VectorElement from_polynomial(const Polynomial& f);
  static VectorElement basis_vector(std::size_t nvars, std::size_t rank, std::size_t k,
                                    MonomialOrder order);

  std::size_t nvars() const { return nvars_; }
  std::size_t rank() const { return rank_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<ModuleTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const ModuleTerm& lead() const { return terms_.front(); }

  Polynomial component(std::size_t k) const;
  std::vector<Polynomial> components() const;
  std::size_t nonzero_components() const;

  /// Removes and returns the lead term.
  ModuleTerm take_lead();
  /// Appends a term smaller than every term already present.
  void append_lower(ModuleTerm t) { terms_.push_back(std::move(t)); }

  VectorElement with_order(MonomialOrder order) const;

  VectorElement operator-() const;
  VectorElement& operator+=(const VectorElement& g);
  VectorElement& operator-=(const VectorElement& g);
  VectorElement& operator*=(const Rational& c);
  /// this += c * x^m * g
  void add_scaled(const Rational& c, const ExponentVector& m, const VectorElement& g);
  /// this += p * g
  void add_product(const Polynomial& p, const VectorElement& g);

  friend VectorElement operator+(VectorElement f, const VectorElement& g) { return f += g; }
  friend VectorElement operator-(VectorElement f, const VectorElement& g) { return f -= g; }

  bool operator==(const VectorElement& g) const {
    return nvars_ == g.nvars_ && rank_ == g.rank_ && terms_ == g.terms_;
  }

private:
  std::size_t nvars_;
  std::size_t rank_;
  MonomialOrder order_;
  std::vector<ModuleTerm> terms_;
};

/// Column vectors as a t x s matrix of polynomials, row-major.
std::vector<std::vector<Polynomial>> to_rows(std::span<const VectorElement> columns,
                                             std::size_t rank, std::size_t nvars,
                                             MonomialOrder order);

/// Columns of the transposed matrix: given s columns in R^t, returns t
/// columns in R^s.
std::vector<VectorElement> transpose(std::span<const VectorElement> columns, std::size_t rank,
                                     std::size_t nvars, MonomialOrder order);

/// Sum over k of coefficients[k] * vectors[k].
VectorElement combine(const VectorElement& coefficients, std::span<const VectorElement> vectors,
                      std::size_t target_rank);

}  // namespace qdeg

#endif
