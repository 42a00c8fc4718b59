#ifndef QDEG_PLANE_HPP
#define QDEG_PLANE_HPP

#include "qdeg/exact_math.hpp"

#include <span>
#include <vector>

namespace qdeg {

/// The affine subspace base + C.v_1 + ... + C.v_k of C^d, with rational data.
///
/// The generators are kept exactly as given (the degrees of the face
/// variables, possibly repeated or dependent). A canonical form is derived
/// once: the span as its nonzero RREF rows and the base reduced so its pivot
/// coordinates vanish. Two planes are equal as sets iff their canonical forms
/// coincide.
class AffinePlane {
public:
  AffinePlane(RatVector base, std::vector<RatVector> generators);

  std::size_t ambient_dim() const { return base_.size(); }
  const RatVector& base() const { return base_; }
  const std::vector<RatVector>& generators() const { return generators_; }
  const RatVector& canonical_base() const { return canonical_base_; }
  const std::vector<RatVector>& canonical_span() const { return canonical_span_; }
  std::size_t dimension() const { return canonical_span_.size(); }

  bool contains_point(std::span<const Rational> point) const;
  /// Whether v lies in the linear span of the generators.
  bool spans(std::span<const Rational> v) const;
  bool same_set(const AffinePlane& other) const {
    return canonical_base_ == other.canonical_base_ && canonical_span_ == other.canonical_span_;
  }

  /// Identical raw data.
  bool operator==(const AffinePlane& other) const {
    return base_ == other.base_ && generators_ == other.generators_;
  }

private:
  RatVector reduce(std::span<const Rational> v) const;

  RatVector base_;
  std::vector<RatVector> generators_;
  RatVector canonical_base_;
  std::vector<RatVector> canonical_span_;
  std::vector<std::size_t> pivots_;
};

/// Lexicographic on (canonical base, canonical span), then raw generators.
bool plane_less(const AffinePlane& a, const AffinePlane& b);

/// inner is a subset of outer.
bool plane_contains(const AffinePlane& outer, const AffinePlane& inner);

/// Union of affine planes.
struct QuasidegreeSet {
  std::vector<AffinePlane> planes;

  bool empty() const { return planes.empty(); }
  std::size_t size() const { return planes.size(); }
};

/// Sorts with plane_less and drops planes with identical raw data.
QuasidegreeSet normalize_order(QuasidegreeSet q);

/// Keeps only planes not contained in another. Among planes that are equal
/// as sets, the one with the most generators is kept (first on ties), so the
/// output is a subset of the input, pairwise incomparable, and sorted.
QuasidegreeSet remove_redundancy(const QuasidegreeSet& q);

bool point_in_qdeg(std::span<const Rational> beta, const QuasidegreeSet& q);

/// alpha -> -alpha - epsilon applied to a plane: the base is mapped, the
/// span is unchanged.
AffinePlane duality_transform(const AffinePlane& plane, std::span<const Integer> epsilon);
QuasidegreeSet duality_transform(const QuasidegreeSet& q, std::span<const Integer> epsilon);

}  // namespace qdeg

#endif
