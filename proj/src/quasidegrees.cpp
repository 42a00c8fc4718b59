#include "qdeg/quasidegrees.hpp"

#include "qdeg/errors.hpp"

namespace qdeg {

MonomialMatrix::MonomialMatrix(std::size_t rows, std::size_t cols, std::size_t nvars,
                               FreeModuleShifts shifts)
    : rows_(rows), cols_(cols), nvars_(nvars), shifts_(std::move(shifts)),
      entries_(rows * cols) {
  if (shifts_.size() != rows_) throw ValidationError("one shift per row required");
}

MonomialMatrix MonomialMatrix::from_columns(std::span<const VectorElement> columns,
                                            FreeModuleShifts shifts, std::size_t nvars) {
  MonomialMatrix m(shifts.size(), columns.size(), nvars, shifts);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].rank() != m.rows_) throw ValidationError("column rank mismatch");
    auto comps = columns[c].components();
    for (std::size_t r = 0; r < comps.size(); ++r) {
      if (comps[r].is_zero()) continue;
      if (!comps[r].is_monomial())
        throw PreconditionError("entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                ") is not a monomial");
      m.set(r, c, MonomialEntry{comps[r].lead().coef, comps[r].lead().exps});
    }
  }
  return m;
}

void MonomialMatrix::set(std::size_t r, std::size_t c, MonomialEntry entry) {
  if (entry.exps.size() != nvars_) throw ValidationError("entry has wrong number of variables");
  if (entry.coef == 0)
    entries_[r * cols_ + c].reset();
  else
    entries_[r * cols_ + c] = std::move(entry);
}

bool MonomialMatrix::splits() const {
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t nonzero = 0;
    for (std::size_t r = 0; r < rows_; ++r)
      if (at(r, c)) ++nonzero;
    if (nonzero > 1) return false;
  }
  return true;
}

std::optional<HomogeneousDegree> homogeneous_degree(const VectorElement& v, const GradedRing& ring,
                                                    const FreeModuleShifts& shifts) {
  if (v.is_zero()) return HomogeneousDegree{true, {}};
  std::optional<IntVector> degree;
  for (const auto& t : v.terms()) {
    IntVector deg = ring.multidegree(t.exps);
    const IntVector& shift = shifts.at(t.component);
    for (std::size_t i = 0; i < deg.size(); ++i) deg[i] += shift[i];
    if (!degree)
      degree = std::move(deg);
    else if (*degree != deg)
      return std::nullopt;
  }
  return HomogeneousDegree{false, std::move(*degree)};
}

AffinePlane pair_plane(const StandardPair& pair, const IntVector& shift, const GradedRing& ring) {
  IntVector deg = ring.multidegree(pair.root);
  RatVector base(deg.size());
  for (std::size_t i = 0; i < deg.size(); ++i) base[i] = Rational(deg[i] + shift[i]);
  std::vector<RatVector> gens;
  for (std::size_t v : pair.face) {
    IntVector a = ring.variable_degree(v);
    gens.emplace_back(a.begin(), a.end());
  }
  return AffinePlane(std::move(base), std::move(gens));
}

QuasidegreeSet quasidegrees_of_ideals(std::span<const std::vector<ExponentVector>> ideals,
                                      const FreeModuleShifts& shifts, const GradedRing& ring) {
  if (ideals.size() != shifts.size()) throw ValidationError("one shift per row required");
  QuasidegreeSet q;
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    if (shifts[k].size() != ring.grading_rank()) throw ValidationError("shift has wrong length");
    for (const auto& pair : standard_pairs(ideals[k], ring.nvars()))
      q.planes.push_back(pair_plane(pair, shifts[k], ring));
  }
  return normalize_order(std::move(q));
}

QuasidegreeSet quasidegrees_monomial(const MonomialMatrix& phi, const GradedRing& ring) {
  if (phi.nvars() != ring.nvars()) throw ValidationError("matrix and ring variable counts differ");
  if (!phi.splits())
    throw PreconditionError("presentation does not split; use quasidegrees_module");
  std::vector<std::vector<ExponentVector>> ideals(phi.rows());
  for (std::size_t r = 0; r < phi.rows(); ++r)
    for (std::size_t c = 0; c < phi.cols(); ++c)
      if (const auto& e = phi.at(r, c)) ideals[r].push_back(e->exps);
  return quasidegrees_of_ideals(ideals, phi.shifts(), ring);
}

QuasidegreeSet quasidegrees_module(std::span<const VectorElement> gens,
                                   const FreeModuleShifts& shifts, const GradedRing& ring) {
  for (const auto& g : gens) {
    if (g.rank() != shifts.size()) throw ValidationError("generator rank mismatch");
    if (!homogeneous_degree(g, ring, shifts)) throw ValidationError("inhomogeneous generator");
  }
  FreeModule ambient{ring.nvars(), shifts.size(), ring.order()};
  InitialModule in = initial_module(gens, ambient);
  return quasidegrees_of_ideals(in.ideals, shifts, ring);
}

}  // namespace qdeg
