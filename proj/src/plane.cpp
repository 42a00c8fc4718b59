#include "qdeg/plane.hpp"

#include "qdeg/errors.hpp"

#include <algorithm>

namespace qdeg {

AffinePlane::AffinePlane(RatVector base, std::vector<RatVector> generators)
    : base_(std::move(base)), generators_(std::move(generators)) {
  const std::size_t d = base_.size();
  for (const auto& g : generators_)
    if (g.size() != d) throw ValidationError("plane generator dimension mismatch");
  RatMatrix m(generators_.size(), d);
  for (std::size_t r = 0; r < generators_.size(); ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = generators_[r][c];
  RrefResult e = rref(std::move(m));
  pivots_ = e.pivots;
  for (std::size_t r = 0; r < e.rank; ++r) canonical_span_.push_back(e.form.row(r));
  canonical_base_ = reduce(base_);
}

RatVector AffinePlane::reduce(std::span<const Rational> v) const {
  RatVector out(v.begin(), v.end());
  for (std::size_t r = 0; r < canonical_span_.size(); ++r) {
    Rational f = out[pivots_[r]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < out.size(); ++c) out[c] -= f * canonical_span_[r][c];
  }
  return out;
}

bool AffinePlane::spans(std::span<const Rational> v) const {
  if (v.size() != ambient_dim()) throw ValidationError("vector dimension mismatch");
  RatVector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

bool AffinePlane::contains_point(std::span<const Rational> point) const {
  if (point.size() != ambient_dim()) throw ValidationError("point dimension mismatch");
  RatVector diff(point.begin(), point.end());
  for (std::size_t c = 0; c < diff.size(); ++c) diff[c] -= base_[c];
  return spans(diff);
}

bool plane_less(const AffinePlane& a, const AffinePlane& b) {
  if (a.canonical_base() != b.canonical_base()) return a.canonical_base() < b.canonical_base();
  if (a.canonical_span() != b.canonical_span()) return a.canonical_span() < b.canonical_span();
  if (a.generators() != b.generators()) return a.generators() < b.generators();
  return a.base() < b.base();
}

bool plane_contains(const AffinePlane& outer, const AffinePlane& inner) {
  if (outer.ambient_dim() != inner.ambient_dim()) throw ValidationError("plane dimension mismatch");
  if (!outer.contains_point(inner.base())) return false;
  return std::all_of(inner.canonical_span().begin(), inner.canonical_span().end(),
                     [&](const RatVector& v) { return outer.spans(v); });
}

QuasidegreeSet normalize_order(QuasidegreeSet q) {
  std::stable_sort(q.planes.begin(), q.planes.end(), plane_less);
  q.planes.erase(std::unique(q.planes.begin(), q.planes.end()), q.planes.end());
  return q;
}

QuasidegreeSet remove_redundancy(const QuasidegreeSet& q) {
  const auto& p = q.planes;
  QuasidegreeSet out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < p.size() && !dominated; ++j) {
      if (i == j || !plane_contains(p[j], p[i])) continue;
      if (!plane_contains(p[i], p[j])) {
        dominated = true;
      } else {
        // Equal sets: prefer more generators, then the earlier plane.
        std::size_t gi = p[i].generators().size();
        std::size_t gj = p[j].generators().size();
        dominated = gj > gi || (gj == gi && j < i);
      }
    }
    if (!dominated) out.planes.push_back(p[i]);
  }
  std::stable_sort(out.planes.begin(), out.planes.end(), plane_less);
  return out;
}

bool point_in_qdeg(std::span<const Rational> beta, const QuasidegreeSet& q) {
  return std::any_of(q.planes.begin(), q.planes.end(),
                     [&](const AffinePlane& p) { return p.contains_point(beta); });
}

AffinePlane duality_transform(const AffinePlane& plane, std::span<const Integer> epsilon) {
  if (epsilon.size() != plane.ambient_dim()) throw ValidationError("epsilon dimension mismatch");
  RatVector base = plane.base();
  for (std::size_t c = 0; c < base.size(); ++c) base[c] = -base[c] - Rational(epsilon[c]);
  return AffinePlane(std::move(base), plane.generators());
}

QuasidegreeSet duality_transform(const QuasidegreeSet& q, std::span<const Integer> epsilon) {
  QuasidegreeSet out;
  for (const auto& p : q.planes) out.planes.push_back(duality_transform(p, epsilon));
  return out;
}

}  // namespace qdeg
