#include "qdeg/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <utility>

namespace qdeg {

namespace {

std::vector<VectorElement> as_vectors(std::span<const Polynomial> polys) {
  std::vector<VectorElement> out;
  out.reserve(polys.size());
  for (const auto& f : polys) out.push_back(VectorElement::from_polynomial(f));
  return out;
}

bool lead_divides(const ModuleTerm& divisor, const ModuleTerm& t) {
  return divisor.component == t.component && divides(divisor.exps, t.exps);
}

// Full reduction of f by divisors. When rep is given it is updated in step
// with f, so any invariant "f == rep . gens" is preserved.
VectorElement reduce_full(VectorElement f, VectorElement* rep,
                          std::span<const VectorElement> divisors,
                          std::span<const VectorElement> divisor_reps) {
  VectorElement rem(f.nvars(), f.rank(), f.order());
  while (!f.is_zero()) {
    const ModuleTerm& lt = f.lead();
    std::size_t k = 0;
    while (k < divisors.size() && !lead_divides(divisors[k].lead(), lt)) ++k;
    if (k == divisors.size()) {
      rem.append_lower(f.take_lead());
      continue;
    }
    const ModuleTerm& dl = divisors[k].lead();
    Rational c = lt.coef / dl.coef;
    ExponentVector m = quotient(lt.exps, dl.exps);
    if (rep) rep->add_scaled(-c, m, divisor_reps[k]);
    f.add_scaled(-c, m, divisors[k]);
  }
  return rem;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  ExponentVector lcm;
  std::size_t component;
  Exponent degree;
};

struct PairOrder {
  MonomialOrder order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    auto c = compare_module_terms(order, a.lcm, a.component, b.lcm, b.component);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

class Engine {
public:
  Engine(FreeModule ambient, bool track, std::size_t generator_count)
      : ambient_(ambient), track_(track), generator_count_(generator_count),
        queue_(PairOrder{ambient.order}) {}

  VectorElement reduce(VectorElement f, VectorElement* rep) const {
    return reduce_full(std::move(f), rep, basis_, reps_);
  }

  void insert(VectorElement f, VectorElement rep) {
    assert(!f.is_zero());
    Rational inv = 1 / f.lead().coef;
    f *= inv;
    if (track_) rep *= inv;
    std::size_t idx = basis_.size();
    const ModuleTerm& lead = f.lead();
    for (std::size_t k = 0; k < idx; ++k) {
      const ModuleTerm& other = basis_[k].lead();
      if (other.component != lead.component) continue;
      ExponentVector l = lcm(other.exps, lead.exps);
      Exponent deg = total_degree(l);
      queue_.insert(Pair{k, idx, std::move(l), lead.component, deg});
      pending_.insert({k, idx});
    }
    basis_.push_back(std::move(f));
    if (track_) reps_.push_back(std::move(rep));
  }

  void add_generator(const VectorElement& g, std::size_t index) {
    VectorElement rep = track_ ? VectorElement::basis_vector(ambient_.nvars, generator_count_,
                                                             index, ambient_.order)
                               : VectorElement();
    VectorElement r = reduce(g, track_ ? &rep : nullptr);
    if (!r.is_zero()) insert(std::move(r), std::move(rep));
  }

  void run() {
    while (!queue_.empty()) {
      Pair p = *queue_.begin();
      queue_.erase(queue_.begin());
      pending_.erase({p.i, p.j});
      if (skip(p)) continue;
      const VectorElement& f = basis_[p.i];
      const VectorElement& g = basis_[p.j];
      ExponentVector mf = quotient(p.lcm, f.lead().exps);
      ExponentVector mg = quotient(p.lcm, g.lead().exps);
      VectorElement s(ambient_.nvars, ambient_.rank, ambient_.order);
      s.add_scaled(1, mf, f);
      s.add_scaled(-1, mg, g);
      VectorElement rep;
      if (track_) {
        rep = VectorElement(ambient_.nvars, generator_count_, ambient_.order);
        rep.add_scaled(1, mf, reps_[p.i]);
        rep.add_scaled(-1, mg, reps_[p.j]);
      }
      VectorElement r = reduce(std::move(s), track_ ? &rep : nullptr);
      if (!r.is_zero()) insert(std::move(r), std::move(rep));
    }
  }

  const std::vector<VectorElement>& basis() const { return basis_; }

  GroebnerBasis finish() && {
    // Drop elements whose lead is divisible by another lead.
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      bool redundant = false;
      for (std::size_t l = 0; l < basis_.size() && !redundant; ++l) {
        if (l == k) continue;
        const ModuleTerm& a = basis_[l].lead();
        const ModuleTerm& b = basis_[k].lead();
        if (lead_divides(a, b) && (a.exps != b.exps || l < k)) redundant = true;
      }
      if (!redundant) keep.push_back(k);
    }
    std::vector<VectorElement> minimal;
    std::vector<VectorElement> minimal_reps;
    for (auto k : keep) {
      minimal.push_back(basis_[k]);
      if (track_) minimal_reps.push_back(reps_[k]);
    }
    // Tail-reduce against the minimal basis.
    std::vector<VectorElement> reduced;
    std::vector<VectorElement> reduced_reps;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      VectorElement tail = minimal[k];
      ModuleTerm lead = tail.take_lead();
      VectorElement rep = track_ ? minimal_reps[k] : VectorElement();
      VectorElement r = reduce_full(std::move(tail), track_ ? &rep : nullptr, minimal,
                                    minimal_reps);
      VectorElement g(ambient_.nvars, ambient_.rank, ambient_.order);
      g.append_lower(std::move(lead));
      for (const auto& t : r.terms()) g.append_lower(t);
      reduced.push_back(std::move(g));
      if (track_) reduced_reps.push_back(std::move(rep));
    }
    std::vector<std::size_t> idx(reduced.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      const ModuleTerm& x = reduced[a].lead();
      const ModuleTerm& y = reduced[b].lead();
      return compare_module_terms(ambient_.order, x.exps, x.component, y.exps, y.component) < 0;
    });
    std::vector<VectorElement> elements;
    std::vector<VectorElement> reps;
    for (auto k : idx) {
      elements.push_back(std::move(reduced[k]));
      if (track_) reps.push_back(std::move(reduced_reps[k]));
    }
    return GroebnerBasis(ambient_, std::move(elements), std::move(reps), generator_count_);
  }

private:
  bool skip(const Pair& p) const {
    const ModuleTerm& a = basis_[p.i].lead();
    const ModuleTerm& b = basis_[p.j].lead();
    if (ambient_.rank == 1 && coprime(a.exps, b.exps)) return true;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      const ModuleTerm& c = basis_[k].lead();
      if (c.component != p.component || !divides(c.exps, p.lcm)) continue;
      if (pending_.count(std::minmax(p.i, k)) || pending_.count(std::minmax(p.j, k))) continue;
      return true;
    }
    return false;
  }

  FreeModule ambient_;
  bool track_;
  std::size_t generator_count_;
  std::vector<VectorElement> basis_;
  std::vector<VectorElement> reps_;
  std::set<Pair, PairOrder> queue_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
};

VectorElement normalize_first_component(VectorElement v) {
  if (v.is_zero()) return v;
  std::size_t first = v.rank();
  for (const auto& t : v.terms()) first = std::min(first, t.component);
  for (const auto& t : v.terms()) {
    if (t.component == first) {
      Rational inv = 1 / t.coef;
      v *= inv;
      break;
    }
  }
  return v;
}

}  // namespace

DivisionResult divide(const VectorElement& f, std::span<const VectorElement> divisors) {
  DivisionResult out{std::vector<Polynomial>(divisors.size(), Polynomial(f.nvars(), f.order())),
                     VectorElement(f.nvars(), f.rank(), f.order())};
  VectorElement p = f;
  while (!p.is_zero()) {
    const ModuleTerm& lt = p.lead();
    std::size_t k = 0;
    while (k < divisors.size() &&
           (divisors[k].is_zero() || !lead_divides(divisors[k].lead(), lt)))
      ++k;
    if (k == divisors.size()) {
      out.remainder.append_lower(p.take_lead());
      continue;
    }
    const ModuleTerm& dl = divisors[k].lead();
    Rational c = lt.coef / dl.coef;
    ExponentVector m = quotient(lt.exps, dl.exps);
    out.quotients[k] += Polynomial::monomial(m, c, f.order());
    p.add_scaled(-c, m, divisors[k]);
  }
  return out;
}

PolynomialDivision divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  auto vecs = as_vectors(divisors);
  DivisionResult r = divide(VectorElement::from_polynomial(f), vecs);
  return PolynomialDivision{std::move(r.quotients), r.remainder.component(0)};
}

VectorElement s_vector(const VectorElement& f, const VectorElement& g) {
  VectorElement s(f.nvars(), f.rank(), f.order());
  if (f.is_zero() || g.is_zero() || f.lead().component != g.lead().component) return s;
  ExponentVector l = lcm(f.lead().exps, g.lead().exps);
  s.add_scaled(1 / f.lead().coef, quotient(l, f.lead().exps), f);
  s.add_scaled(-1 / g.lead().coef, quotient(l, g.lead().exps), g);
  return s;
}

VectorElement GroebnerBasis::normal_form(const VectorElement& f) const {
  return reduce_full(f, nullptr, elements_, representations_);
}

VectorElement GroebnerBasis::lift(const VectorElement& f) const {
  if (!has_representations()) throw std::logic_error("lift requires tracked representations");
  VectorElement rep(ambient_.nvars, generator_count_, ambient_.order);
  VectorElement rem = reduce_full(f, &rep, elements_, representations_);
  if (!rem.is_zero()) throw std::logic_error("lift of an element outside the submodule");
  return -rep;
}

GroebnerBasis buchberger(std::span<const VectorElement> generators, const FreeModule& ambient,
                         GroebnerOptions options) {
  Engine engine(ambient, options.track_representations, generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    assert(generators[i].rank() == ambient.rank && generators[i].nvars() == ambient.nvars);
    if (generators[i].is_zero()) continue;
    engine.add_generator(generators[i].with_order(ambient.order), i);
    engine.run();
  }
  return std::move(engine).finish();
}

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators, std::size_t nvars,
                                       MonomialOrder order) {
  std::vector<VectorElement> gens;
  for (const auto& g : generators) gens.push_back(VectorElement::from_polynomial(g.with_order(order)));
  GroebnerBasis gb = buchberger(gens, FreeModule{nvars, 1, order});
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) out.push_back(g.component(0));
  return out;
}

struct IncrementalBasis::Impl {
  explicit Impl(FreeModule ambient) : engine(ambient, false, 0), ambient(ambient) {}
  Engine engine;
  FreeModule ambient;
};

IncrementalBasis::IncrementalBasis(FreeModule ambient)
    : impl_(std::make_unique<Impl>(ambient)) {}
IncrementalBasis::~IncrementalBasis() = default;
IncrementalBasis::IncrementalBasis(IncrementalBasis&&) noexcept = default;
IncrementalBasis& IncrementalBasis::operator=(IncrementalBasis&&) noexcept = default;

bool IncrementalBasis::add(const VectorElement& f) {
  VectorElement r = impl_->engine.reduce(f.with_order(impl_->ambient.order), nullptr);
  if (r.is_zero()) return false;
  impl_->engine.insert(std::move(r), VectorElement());
  impl_->engine.run();
  return true;
}

bool IncrementalBasis::contains(const VectorElement& f) const {
  return impl_->engine.reduce(f.with_order(impl_->ambient.order), nullptr).is_zero();
}

std::vector<VectorElement> syzygies(std::span<const VectorElement> generators,
                                    const FreeModule& ambient) {
  const std::size_t s = generators.size();
  std::vector<VectorElement> out;
  if (s == 0) return out;
  GroebnerBasis gb = buchberger(generators, ambient, GroebnerOptions{true});
  const auto& basis = gb.elements();
  const auto& reps = gb.representations();
  const std::size_t m = basis.size();

  auto emit = [&](VectorElement v) {
    if (v.is_zero()) return;
    v = normalize_first_component(std::move(v));
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  };

  // Schreyer syzygies of the basis. The Schreyer lead of the (i, j) syzygy,
  // i < j, is (lcm / lead_i) e_i; only minimal leads are needed.
  for (std::size_t i = 0; i < m; ++i) {
    const ModuleTerm& li = basis[i].lead();
    std::vector<std::pair<std::size_t, ExponentVector>> candidates;
    for (std::size_t j = i + 1; j < m; ++j) {
      const ModuleTerm& lj = basis[j].lead();
      if (lj.component != li.component) continue;
      candidates.emplace_back(j, quotient(lcm(li.exps, lj.exps), li.exps));
    }
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      bool minimal = true;
      for (std::size_t b = 0; b < candidates.size() && minimal; ++b) {
        if (a == b) continue;
        const auto& ma = candidates[a].second;
        const auto& mb = candidates[b].second;
        if (divides(mb, ma) && (mb != ma || b < a)) minimal = false;
      }
      if (!minimal) continue;
      std::size_t j = candidates[a].first;
      const ModuleTerm& lj = basis[j].lead();
      ExponentVector l = lcm(li.exps, lj.exps);
      ExponentVector mi = quotient(l, li.exps);
      ExponentVector mj = quotient(l, lj.exps);
      VectorElement sv(ambient.nvars, ambient.rank, ambient.order);
      sv.add_scaled(1, mi, basis[i]);
      sv.add_scaled(-1, mj, basis[j]);
      DivisionResult d = divide(sv, basis);
      if (!d.remainder.is_zero()) throw std::logic_error("S-vector of a Groebner basis did not reduce to zero");
      VectorElement sigma(ambient.nvars, m, ambient.order);
      sigma.add_scaled(1, mi, VectorElement::basis_vector(ambient.nvars, m, i, ambient.order));
      sigma.add_scaled(-1, mj, VectorElement::basis_vector(ambient.nvars, m, j, ambient.order));
      for (std::size_t k = 0; k < m; ++k)
        sigma.add_product(-d.quotients[k],
                          VectorElement::basis_vector(ambient.nvars, m, k, ambient.order));
      emit(combine(sigma, reps, s));
    }
  }

  // gen_i minus its expression through the basis.
  for (std::size_t i = 0; i < s; ++i) {
    DivisionResult d = divide(generators[i].with_order(ambient.order), basis);
    if (!d.remainder.is_zero()) throw std::logic_error("generator not reduced by its own Groebner basis");
    VectorElement v = VectorElement::basis_vector(ambient.nvars, s, i, ambient.order);
    for (std::size_t k = 0; k < m; ++k) {
      VectorElement term(ambient.nvars, s, ambient.order);
      term.add_product(d.quotients[k], reps[k]);
      v -= term;
    }
    emit(std::move(v));
  }
  return out;
}

std::vector<VectorElement> syzygies(std::span<const Polynomial> generators, std::size_t nvars,
                                    MonomialOrder order) {
  std::vector<VectorElement> gens;
  for (const auto& g : generators) gens.push_back(VectorElement::from_polynomial(g.with_order(order)));
  return syzygies(gens, FreeModule{nvars, 1, order});
}

std::vector<Polynomial> saturate(std::span<const Polynomial> ideal, const Polynomial& f,
                                 MonomialOrder order) {
  const std::size_t n = f.nvars();
  const MonomialOrder elim = MonomialOrder::elimination(1);
  auto lift_var = [&](const Polynomial& g) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      ExponentVector e(n + 1, 0);
      std::copy(t.exps.begin(), t.exps.end(), e.begin() + 1);
      terms.push_back(Term{t.coef, std::move(e)});
    }
    return Polynomial::from_terms(n + 1, std::move(terms), elim);
  };
  std::vector<Polynomial> gens;
  for (const auto& g : ideal) gens.push_back(lift_var(g));
  // 1 - T f
  Polynomial tf = lift_var(f) * Polynomial::monomial(unit_exponent(n + 1, 0), 1, elim);
  gens.push_back(Polynomial::constant(n + 1, 1, elim) - tf);
  std::vector<Polynomial> gb = groebner_basis(gens, n + 1, elim);
  std::vector<Polynomial> out;
  for (const auto& g : gb) {
    bool free_of_t = std::all_of(g.terms().begin(), g.terms().end(),
                                 [](const Term& t) { return t.exps[0] == 0; });
    if (!free_of_t) continue;
    std::vector<Term> terms;
    for (const auto& t : g.terms())
      terms.push_back(Term{t.coef, ExponentVector(t.exps.begin() + 1, t.exps.end())});
    out.push_back(Polynomial::from_terms(n, std::move(terms), order));
  }
  return groebner_basis(out, n, order);
}

InitialModule initial_module(const GroebnerBasis& basis) {
  InitialModule out{basis.ambient().nvars,
                    std::vector<std::vector<ExponentVector>>(basis.ambient().rank)};
  for (const auto& g : basis.elements()) out.ideals[g.lead().component].push_back(g.lead().exps);
  return out;
}

InitialModule initial_module(std::span<const VectorElement> generators,
                             const FreeModule& ambient) {
  return initial_module(buchberger(generators, ambient));
}

std::vector<ExponentVector> initial_ideal(std::span<const Polynomial> generators,
                                          std::size_t nvars, MonomialOrder order) {
  std::vector<ExponentVector> out;
  for (const auto& g : groebner_basis(generators, nvars, order)) out.push_back(g.lead().exps);
  return out;
}

bool ideal_equal(std::span<const Polynomial> lhs, std::span<const Polynomial> rhs,
                 std::size_t nvars, MonomialOrder order) {
  auto contained = [&](std::span<const Polynomial> small, std::span<const Polynomial> big) {
    std::vector<Polynomial> gb = groebner_basis(big, nvars, order);
    return std::all_of(small.begin(), small.end(), [&](const Polynomial& f) {
      return divide(f.with_order(order), gb).remainder.is_zero();
    });
  };
  return contained(lhs, rhs) && contained(rhs, lhs);
}

}  // namespace qdeg
