#ifndef QDEG_GROEBNER_HPP
#define QDEG_GROEBNER_HPP

#include "qdeg/polynomial.hpp"
#include "qdeg/vector_element.hpp"

#include <memory>
#include <span>
#include <vector>

namespace qdeg {

/// The free module R^rank over Q[x_1..x_nvars] with a position-up term order.
/// Ideals are submodules of rank 1.
struct FreeModule {
  std::size_t nvars = 0;
  std::size_t rank = 1;
  MonomialOrder order = MonomialOrder::grevlex();

  VectorElement zero() const { return VectorElement(nvars, rank, order); }
  VectorElement basis_vector(std::size_t k) const {
    return VectorElement::basis_vector(nvars, rank, k, order);
  }
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  VectorElement remainder;
};

/// Multivariate division f = sum q_i g_i + r. Each step reduces the leading
/// term of the working element by the first divisor (in list order) whose
/// lead term divides it, so no term of r is divisible by a lead term.
DivisionResult divide(const VectorElement& f, std::span<const VectorElement> divisors);

struct PolynomialDivision {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};
PolynomialDivision divide(const Polynomial& f, std::span<const Polynomial> divisors);

/// S-vector of two elements whose leads share a component (zero otherwise),
/// with both lead terms scaled to coefficient 1.
VectorElement s_vector(const VectorElement& f, const VectorElement& g);

/// Reduced Gröbner basis of a submodule, optionally with the expression of
/// every basis element in terms of the input generators.
class GroebnerBasis {
public:
  GroebnerBasis(FreeModule ambient, std::vector<VectorElement> elements,
                std::vector<VectorElement> representations, std::size_t generator_count)
      : ambient_(ambient),
        elements_(std::move(elements)),
        representations_(std::move(representations)),
        generator_count_(generator_count) {}

  const FreeModule& ambient() const { return ambient_; }
  /// Monic, sorted increasing by lead term; no term of any element is
  /// divisible by another element's lead term.
  const std::vector<VectorElement>& elements() const { return elements_; }
  bool has_representations() const { return !representations_.empty() || elements_.empty(); }
  /// representations()[k] in R^generator_count expresses elements()[k] as a
  /// combination of the input generators.
  const std::vector<VectorElement>& representations() const { return representations_; }
  std::size_t generator_count() const { return generator_count_; }

  VectorElement normal_form(const VectorElement& f) const;
  bool contains(const VectorElement& f) const { return normal_form(f).is_zero(); }

  /// Coefficients c in R^generator_count with f = sum c_i gen_i. Requires
  /// representations and f in the submodule; throws std::logic_error otherwise.
  VectorElement lift(const VectorElement& f) const;

private:
  FreeModule ambient_;
  std::vector<VectorElement> elements_;
  std::vector<VectorElement> representations_;
  std::size_t generator_count_;
};

struct GroebnerOptions {
  bool track_representations = false;
};

/// Buchberger's algorithm with the normal selection strategy, the coprime
/// lead criterion (ideals only) and the chain criterion, followed by
/// auto-reduction.
GroebnerBasis buchberger(std::span<const VectorElement> generators, const FreeModule& ambient,
                         GroebnerOptions options = {});

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators,
                                       std::size_t nvars,
                                       MonomialOrder order = MonomialOrder::grevlex());

/// Submodule built one generator at a time; the basis is complete after
/// every insertion, so membership queries are exact at all times.
class IncrementalBasis {
public:
  explicit IncrementalBasis(FreeModule ambient);
  ~IncrementalBasis();
  IncrementalBasis(IncrementalBasis&&) noexcept;
  IncrementalBasis& operator=(IncrementalBasis&&) noexcept;

  /// Adds f unless it already lies in the submodule; returns whether added.
  bool add(const VectorElement& f);
  bool contains(const VectorElement& f) const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Generators of {q in R^s : sum q_i gens_i = 0}. Computed from the
/// Buchberger transcript: Schreyer's S-pair syzygies of the Gröbner basis
/// (trimmed to minimal Schreyer lead terms) are pulled back to the input
/// generators together with the relations gens_i - (expression through the
/// basis). Each syzygy is scaled so its first nonzero component has lead
/// coefficient 1; duplicates are dropped.
std::vector<VectorElement> syzygies(std::span<const VectorElement> generators,
                                    const FreeModule& ambient);
std::vector<VectorElement> syzygies(std::span<const Polynomial> generators, std::size_t nvars,
                                    MonomialOrder order = MonomialOrder::grevlex());

/// (I : f^infinity), via the Gröbner basis of I + <1 - T f> in an order
/// eliminating T. Returns the reduced Gröbner basis in `order`.
std::vector<Polynomial> saturate(std::span<const Polynomial> ideal, const Polynomial& f,
                                 MonomialOrder order = MonomialOrder::grevlex());

/// Lead terms of a Gröbner basis, grouped by component: the submodule
/// ideals[0] e_0 + ... + ideals[rank-1] e_{rank-1}. Each list is the set of
/// minimal generators of that monomial ideal.
struct InitialModule {
  std::size_t nvars = 0;
  std::vector<std::vector<ExponentVector>> ideals;
};
InitialModule initial_module(std::span<const VectorElement> generators, const FreeModule& ambient);
InitialModule initial_module(const GroebnerBasis& basis);
std::vector<ExponentVector> initial_ideal(std::span<const Polynomial> generators,
                                          std::size_t nvars,
                                          MonomialOrder order = MonomialOrder::grevlex());

/// Equality of ideals by mutual reduction to zero.
bool ideal_equal(std::span<const Polynomial> lhs, std::span<const Polynomial> rhs,
                 std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex());

}  // namespace qdeg

#endif
