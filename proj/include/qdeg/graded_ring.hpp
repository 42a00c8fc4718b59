#ifndef QDEG_GRADED_RING_HPP
#define QDEG_GRADED_RING_HPP

#include "qdeg/exact_math.hpp"
#include "qdeg/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qdeg {

/// Degrees alpha_1..alpha_t of the basis elements of a graded free module
/// R^t; e_k lives in degree alpha_k.
using FreeModuleShifts = std::vector<IntVector>;

/// Integer h with h . a_j > 0 for every column a_j of A. Tries unit vectors,
/// then the all-ones vector, then a vertex of {h : h . a_j >= 1}. Throws
/// ValidationError("grading not positive") when no such h exists.
IntVector find_heft(const IntMatrix& degrees);

/// Q[x_1..x_n] graded by Z^d with deg(x_j) the j-th column of the degree
/// matrix. The term order is independent of the grading.
class GradedRing {
public:
  GradedRing(std::vector<std::string> names, IntMatrix degrees,
             MonomialOrder order = MonomialOrder::grevlex());

  /// Standard Z-grading, every variable in degree 1.
  static GradedRing standard(std::vector<std::string> names,
                             MonomialOrder order = MonomialOrder::grevlex());

  std::size_t nvars() const { return names_.size(); }
  std::size_t grading_rank() const { return degrees_.rows(); }
  const std::vector<std::string>& names() const { return names_; }
  const IntMatrix& degrees() const { return degrees_; }
  const IntVector& heft() const { return heft_; }
  /// Sum of the variable degrees.
  const IntVector& epsilon() const { return epsilon_; }
  const MonomialOrder& order() const { return order_; }

  GradedRing with_order(MonomialOrder order) const;

  std::optional<std::size_t> index_of(const std::string& name) const;
  IntVector variable_degree(std::size_t j) const { return degrees_.column(j); }
  IntVector multidegree(const ExponentVector& u) const;
  Integer heft_degree(const IntVector& degree) const;

  Polynomial zero() const { return Polynomial(nvars(), order_); }
  Polynomial one() const { return Polynomial::constant(nvars(), 1, order_); }
  Polynomial variable(std::size_t j) const {
    return Polynomial::monomial(unit_exponent(nvars(), j), 1, order_);
  }

private:
  std::vector<std::string> names_;
  IntMatrix degrees_;
  IntVector heft_;
  IntVector epsilon_;
  MonomialOrder order_;
};

/// Common multidegree of a polynomial's terms. The zero polynomial is
/// homogeneous of every degree and reports `any`.
struct HomogeneousDegree {
  bool any = false;
  IntVector degree;
};
std::optional<HomogeneousDegree> is_homogeneous(const Polynomial& f, const GradedRing& ring);

}  // namespace qdeg

#endif
