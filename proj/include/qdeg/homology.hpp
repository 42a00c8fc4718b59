#ifndef QDEG_HOMOLOGY_HPP
#define QDEG_HOMOLOGY_HPP

#include "qdeg/graded_ring.hpp"
#include "qdeg/plane.hpp"
#include "qdeg/vector_element.hpp"

#include <span>
#include <vector>

namespace qdeg {

/// coker(R^s -> R^t): generators of degrees `shifts`, relations as the
/// columns of the presentation matrix.
struct GradedPresentation {
  FreeModuleShifts shifts;
  std::vector<VectorElement> relations;
};

/// F_0 <- F_1 <- ... <- F_L. differentials[i] holds the columns of
/// phi_{i+1} : F_{i+1} -> F_i as elements of R^{rank F_i}.
struct FreeResolution {
  std::vector<FreeModuleShifts> modules;
  std::vector<std::vector<VectorElement>> differentials;
  /// False if max_length cut the computation short.
  bool complete = true;

  std::size_t length() const { return modules.empty() ? 0 : modules.size() - 1; }
};

/// Throws ValidationError unless every relation is homogeneous for `shifts`.
void validate_presentation(const GradedPresentation& p, const GradedRing& ring);

/// Degrees of homogeneous, nonzero columns.
FreeModuleShifts column_degrees(std::span<const VectorElement> columns,
                                const FreeModuleShifts& shifts, const GradedRing& ring);

/// A minimal homogeneous generating set of the submodule generated by
/// `elements`: scanning by increasing heft degree, keep an element iff it is
/// not in the span of those already kept.
std::vector<VectorElement> minimize_generators(std::span<const VectorElement> elements,
                                               const FreeModuleShifts& shifts,
                                               const GradedRing& ring);

/// Graded free resolution by iterated syzygies, each level trimmed to a
/// minimal generating set, hence of length at most nvars.
FreeResolution free_resolution(const GradedPresentation& p, const GradedRing& ring,
                               std::size_t max_length);

/// Ext^j(M, R) = ker(phi_{j+1}^T) / im(phi_j^T) as a graded presentation.
/// Dual shifts are negated; generators are minimal generators of the kernel,
/// relations are their syzygies together with the lifts of the columns of
/// phi_j^T. Throws ValidationError if j > nvars.
GradedPresentation ext_presentation(const FreeResolution& res, std::size_t j,
                                    const GradedRing& ring);
GradedPresentation ext_presentation(const GradedPresentation& p, std::size_t j,
                                    const GradedRing& ring);

/// qdeg(H^i_m(M)) as the image of qdeg(Ext^{n-i}(M, R)) under
/// alpha -> -alpha - epsilon_A.
QuasidegreeSet qlc(const FreeResolution& res, std::size_t i, const GradedRing& ring);
QuasidegreeSet qlc(const GradedPresentation& p, std::size_t i, const GradedRing& ring);

/// Union of qlc(M, i) for 0 <= i < d, redundancy removed.
QuasidegreeSet qlc_total(const FreeResolution& res, const GradedRing& ring);
QuasidegreeSet qlc_total(const GradedPresentation& p, const GradedRing& ring);

/// R^1 / I.
GradedPresentation cyclic_presentation(std::span<const Polynomial> ideal, const GradedRing& ring);

}  // namespace qdeg

#endif
