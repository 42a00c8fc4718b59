#ifndef QDEG_QUASIDEGREES_HPP
#define QDEG_QUASIDEGREES_HPP

#include "qdeg/graded_ring.hpp"
#include "qdeg/groebner.hpp"
#include "qdeg/plane.hpp"
#include "qdeg/stdpairs.hpp"
#include "qdeg/vector_element.hpp"

#include <optional>
#include <span>
#include <vector>

namespace qdeg {

struct MonomialEntry {
  Rational coef;
  ExponentVector exps;
};

/// Matrix R^s -> R^t whose entries are zero or single terms; row k carries
/// the degree shift of the k-th basis element of R^t.
class MonomialMatrix {
public:
  MonomialMatrix(std::size_t rows, std::size_t cols, std::size_t nvars, FreeModuleShifts shifts);

  /// Throws PreconditionError if an entry has more than one term.
  static MonomialMatrix from_columns(std::span<const VectorElement> columns,
                                     FreeModuleShifts shifts, std::size_t nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }
  const FreeModuleShifts& shifts() const { return shifts_; }

  void set(std::size_t r, std::size_t c, MonomialEntry entry);
  const std::optional<MonomialEntry>& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  /// Every column has at most one nonzero entry.
  bool splits() const;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t nvars_;
  FreeModuleShifts shifts_;
  std::vector<std::optional<MonomialEntry>> entries_;
};

/// Degree of a homogeneous element of the graded free module with the given
/// shifts; nullopt for inhomogeneous elements. Zero reports `any`.
std::optional<HomogeneousDegree> homogeneous_degree(const VectorElement& v, const GradedRing& ring,
                                                    const FreeModuleShifts& shifts);

/// Plane deg(x^root) + shift + sum over the face of C.deg(x_i).
AffinePlane pair_plane(const StandardPair& pair, const IntVector& shift, const GradedRing& ring);

/// Quasidegrees of (+)_k R(-alpha_k)/I_k for monomial ideals I_k, one plane
/// per standard pair, sorted; redundancy is kept.
QuasidegreeSet quasidegrees_of_ideals(std::span<const std::vector<ExponentVector>> ideals,
                                      const FreeModuleShifts& shifts, const GradedRing& ring);

/// Standard-pair quasidegrees of coker(phi) for a monomial matrix with at
/// most one nonzero entry per column. Throws PreconditionError otherwise.
QuasidegreeSet quasidegrees_monomial(const MonomialMatrix& phi, const GradedRing& ring);

/// Quasidegrees of R^t / <gens> for arbitrary homogeneous generators, through
/// the initial submodule of a Gröbner basis (same Hilbert function).
/// Throws ValidationError on inhomogeneous input.
QuasidegreeSet quasidegrees_module(std::span<const VectorElement> gens,
                                   const FreeModuleShifts& shifts, const GradedRing& ring);

}  // namespace qdeg

#endif
