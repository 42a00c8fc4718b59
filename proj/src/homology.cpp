#include "qdeg/homology.hpp"

#include "qdeg/errors.hpp"
#include "qdeg/groebner.hpp"
#include "qdeg/quasidegrees.hpp"

#include <algorithm>
#include <numeric>

namespace qdeg {

namespace {

FreeModuleShifts negate(const FreeModuleShifts& shifts) {
  FreeModuleShifts out = shifts;
  for (auto& s : out)
    for (auto& x : s) x = -x;
  return out;
}

}  // namespace

void validate_presentation(const GradedPresentation& p, const GradedRing& ring) {
  for (const auto& s : p.shifts)
    if (s.size() != ring.grading_rank()) throw ValidationError("shift has wrong length");
  for (const auto& r : p.relations) {
    if (r.rank() != p.shifts.size()) throw ValidationError("relation has wrong rank");
    if (r.nvars() != ring.nvars()) throw ValidationError("relation has wrong variable count");
    if (!homogeneous_degree(r, ring, p.shifts)) throw ValidationError("inhomogeneous relation");
  }
}

FreeModuleShifts column_degrees(std::span<const VectorElement> columns,
                                const FreeModuleShifts& shifts, const GradedRing& ring) {
  FreeModuleShifts out;
  for (const auto& c : columns) {
    auto deg = homogeneous_degree(c, ring, shifts);
    if (!deg || deg->any) throw ValidationError("column is zero or inhomogeneous");
    out.push_back(deg->degree);
  }
  return out;
}

std::vector<VectorElement> minimize_generators(std::span<const VectorElement> elements,
                                               const FreeModuleShifts& shifts,
                                               const GradedRing& ring) {
  std::vector<std::pair<Integer, std::size_t>> order;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (elements[k].is_zero()) continue;
    auto deg = homogeneous_degree(elements[k], ring, shifts);
    if (!deg) throw ValidationError("inhomogeneous element");
    order.emplace_back(ring.heft_degree(deg->degree), k);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  IncrementalBasis basis(FreeModule{ring.nvars(), shifts.size(), ring.order()});
  std::vector<VectorElement> kept;
  for (const auto& [heft, k] : order) {
    (void)heft;
    if (basis.add(elements[k])) kept.push_back(elements[k]);
  }
  return kept;
}

FreeResolution free_resolution(const GradedPresentation& p, const GradedRing& ring,
                               std::size_t max_length) {
  validate_presentation(p, ring);
  FreeResolution res;
  res.modules.push_back(p.shifts);
  std::vector<VectorElement> columns = minimize_generators(p.relations, p.shifts, ring);
  while (!columns.empty()) {
    if (res.length() == max_length) {
      res.complete = false;
      break;
    }
    FreeModuleShifts degrees = column_degrees(columns, res.modules.back(), ring);
    FreeModule ambient{ring.nvars(), res.modules.back().size(), ring.order()};
    std::vector<VectorElement> next = syzygies(columns, ambient);
    res.differentials.push_back(std::move(columns));
    res.modules.push_back(degrees);
    columns = minimize_generators(next, degrees, ring);
  }
  return res;
}

GradedPresentation ext_presentation(const FreeResolution& res, std::size_t j,
                                    const GradedRing& ring) {
  if (j > ring.nvars()) throw ValidationError("Ext index out of range");
  if (!res.complete) throw ValidationError("resolution is incomplete");
  if (j > res.length()) return {};
  const std::size_t n = ring.nvars();
  const MonomialOrder order = ring.order();
  const FreeModuleShifts dual = negate(res.modules[j]);
  const std::size_t rank = dual.size();

  // Generators of ker(phi_{j+1}^T) inside F_j^*.
  std::vector<VectorElement> kernel;
  if (j < res.differentials.size()) {
    std::vector<VectorElement> cols = transpose(res.differentials[j], rank, n, order);
    kernel = minimize_generators(syzygies(cols, FreeModule{n, res.modules[j + 1].size(), order}),
                                 dual, ring);
  } else {
    for (std::size_t k = 0; k < rank; ++k)
      kernel.push_back(VectorElement::basis_vector(n, rank, k, order));
  }
  GradedPresentation out;
  if (kernel.empty()) return out;
  out.shifts = column_degrees(kernel, dual, ring);

  const FreeModule kernel_ambient{n, rank, order};
  for (auto& s : syzygies(kernel, kernel_ambient)) out.relations.push_back(std::move(s));
  if (j >= 1) {
    GroebnerBasis gb = buchberger(kernel, kernel_ambient, GroebnerOptions{true});
    std::vector<VectorElement> image =
        transpose(res.differentials[j - 1], res.modules[j - 1].size(), n, order);
    for (const auto& c : image) {
      VectorElement lifted = gb.lift(c);
      if (!lifted.is_zero()) out.relations.push_back(std::move(lifted));
    }
  }
  return out;
}

GradedPresentation ext_presentation(const GradedPresentation& p, std::size_t j,
                                    const GradedRing& ring) {
  if (j > ring.nvars()) throw ValidationError("Ext index out of range");
  return ext_presentation(free_resolution(p, ring, ring.nvars()), j, ring);
}

QuasidegreeSet qlc(const FreeResolution& res, std::size_t i, const GradedRing& ring) {
  if (i > ring.nvars()) throw ValidationError("cohomological index out of range");
  GradedPresentation ext = ext_presentation(res, ring.nvars() - i, ring);
  QuasidegreeSet q = quasidegrees_module(ext.relations, ext.shifts, ring);
  return normalize_order(duality_transform(q, ring.epsilon()));
}

QuasidegreeSet qlc(const GradedPresentation& p, std::size_t i, const GradedRing& ring) {
  if (i > ring.nvars()) throw ValidationError("cohomological index out of range");
  return qlc(free_resolution(p, ring, ring.nvars()), i, ring);
}

QuasidegreeSet qlc_total(const FreeResolution& res, const GradedRing& ring) {
  QuasidegreeSet all;
  const std::size_t top = std::min(ring.grading_rank(), ring.nvars() + 1);
  for (std::size_t i = 0; i < top; ++i) {
    QuasidegreeSet q = qlc(res, i, ring);
    all.planes.insert(all.planes.end(), q.planes.begin(), q.planes.end());
  }
  return remove_redundancy(all);
}

QuasidegreeSet qlc_total(const GradedPresentation& p, const GradedRing& ring) {
  return qlc_total(free_resolution(p, ring, ring.nvars()), ring);
}

GradedPresentation cyclic_presentation(std::span<const Polynomial> ideal, const GradedRing& ring) {
  GradedPresentation p;
  p.shifts.push_back(IntVector(ring.grading_rank(), 0));
  for (const auto& f : ideal) {
    if (f.is_zero()) continue;
    p.relations.push_back(VectorElement::from_polynomial(f.with_order(ring.order())));
  }
  return p;
}

}  // namespace qdeg
