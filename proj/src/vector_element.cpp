#include "qdeg/vector_element.hpp"

#include <algorithm>
#include <cassert>

namespace qdeg {

namespace {

std::vector<ModuleTerm> merge(const std::vector<ModuleTerm>& a, const Rational& c,
                              const ExponentVector* m, const std::vector<ModuleTerm>& b,
                              const MonomialOrder& order) {
  std::vector<ModuleTerm> out;
  out.reserve(a.size() + b.size());
  auto scaled = [&](const ModuleTerm& t) {
    return ModuleTerm{c * t.coef, m ? product(t.exps, *m) : t.exps, t.component};
  };
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    ModuleTerm tb = scaled(b[j]);
    auto cmp = compare_module_terms(order, a[i].exps, a[i].component, tb.exps, tb.component);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(tb));
      ++j;
    } else {
      Rational s = a[i].coef + tb.coef;
      if (s != 0) out.push_back(ModuleTerm{std::move(s), a[i].exps, a[i].component});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(scaled(b[j]));
  return out;
}

}  // namespace

VectorElement VectorElement::from_terms(std::size_t nvars, std::size_t rank,
                                        std::vector<ModuleTerm> terms, MonomialOrder order) {
  VectorElement v(nvars, rank, order);
  std::sort(terms.begin(), terms.end(), [&](const ModuleTerm& a, const ModuleTerm& b) {
    return compare_module_terms(order, a.exps, a.component, b.exps, b.component) > 0;
  });
  for (auto& t : terms) {
    assert(t.component < rank && t.exps.size() == nvars);
    if (!v.terms_.empty() && v.terms_.back().exps == t.exps &&
        v.terms_.back().component == t.component) {
      v.terms_.back().coef += t.coef;
      if (v.terms_.back().coef == 0) v.terms_.pop_back();
    } else if (t.coef != 0) {
      v.terms_.push_back(std::move(t));
    }
  }
  return v;
}

VectorElement VectorElement::from_components(std::span<const Polynomial> components) {
  assert(!components.empty());
  std::vector<ModuleTerm> terms;
  for (std::size_t k = 0; k < components.size(); ++k)
    for (const auto& t : components[k].terms()) terms.push_back(ModuleTerm{t.coef, t.exps, k});
  return from_terms(components.front().nvars(), components.size(), std::move(terms),
                    components.front().order());
}

VectorElement VectorElement::from_polynomial(const Polynomial& f) {
  return from_components(std::span<const Polynomial>(&f, 1));
}

VectorElement VectorElement::basis_vector(std::size_t nvars, std::size_t rank, std::size_t k,
                                          MonomialOrder order) {
  VectorElement v(nvars, rank, order);
  v.terms_.push_back(ModuleTerm{1, ExponentVector(nvars, 0), k});
  return v;
}

Polynomial VectorElement::component(std::size_t k) const {
  std::vector<Term> terms;
  for (const auto& t : terms_)
    if (t.component == k) terms.push_back(Term{t.coef, t.exps});
  return Polynomial::from_terms(nvars_, std::move(terms), order_);
}

std::vector<Polynomial> VectorElement::components() const {
  std::vector<std::vector<Term>> parts(rank_);
  for (const auto& t : terms_) parts[t.component].push_back(Term{t.coef, t.exps});
  std::vector<Polynomial> out;
  out.reserve(rank_);
  for (auto& p : parts) out.push_back(Polynomial::from_terms(nvars_, std::move(p), order_));
  return out;
}

std::size_t VectorElement::nonzero_components() const {
  std::vector<bool> seen(rank_, false);
  for (const auto& t : terms_) seen[t.component] = true;
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

ModuleTerm VectorElement::take_lead() {
  ModuleTerm t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

VectorElement VectorElement::with_order(MonomialOrder order) const {
  return from_terms(nvars_, rank_, terms_, order);
}

VectorElement VectorElement::operator-() const {
  VectorElement v = *this;
  for (auto& t : v.terms_) t.coef = -t.coef;
  return v;
}

VectorElement& VectorElement::operator+=(const VectorElement& g) {
  assert(g.rank_ == rank_ && g.nvars_ == nvars_);
  terms_ = merge(terms_, Rational(1), nullptr, g.terms_, order_);
  return *this;
}

VectorElement& VectorElement::operator-=(const VectorElement& g) {
  assert(g.rank_ == rank_ && g.nvars_ == nvars_);
  terms_ = merge(terms_, Rational(-1), nullptr, g.terms_, order_);
  return *this;
}

VectorElement& VectorElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

void VectorElement::add_scaled(const Rational& c, const ExponentVector& m,
                               const VectorElement& g) {
  assert(g.rank_ == rank_ && g.nvars_ == nvars_);
  if (c == 0) return;
  terms_ = merge(terms_, c, &m, g.terms_, order_);
}

void VectorElement::add_product(const Polynomial& p, const VectorElement& g) {
  for (const auto& t : p.terms()) add_scaled(t.coef, t.exps, g);
}

std::vector<std::vector<Polynomial>> to_rows(std::span<const VectorElement> columns,
                                             std::size_t rank, std::size_t nvars,
                                             MonomialOrder order) {
  std::vector<std::vector<Polynomial>> rows(rank,
                                            std::vector<Polynomial>(columns.size(),
                                                                    Polynomial(nvars, order)));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    auto comps = columns[j].components();
    for (std::size_t k = 0; k < rank; ++k) rows[k][j] = std::move(comps[k]);
  }
  return rows;
}

std::vector<VectorElement> transpose(std::span<const VectorElement> columns, std::size_t rank,
                                     std::size_t nvars, MonomialOrder order) {
  std::vector<std::vector<ModuleTerm>> out_terms(rank);
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& t : columns[j].terms())
      out_terms[t.component].push_back(ModuleTerm{t.coef, t.exps, j});
  std::vector<VectorElement> out;
  out.reserve(rank);
  for (auto& terms : out_terms)
    out.push_back(VectorElement::from_terms(nvars, columns.size(), std::move(terms), order));
  return out;
}

VectorElement combine(const VectorElement& coefficients, std::span<const VectorElement> vectors,
                      std::size_t target_rank) {
  VectorElement out(coefficients.nvars(), target_rank, coefficients.order());
  for (const auto& t : coefficients.terms()) out.add_scaled(t.coef, t.exps, vectors[t.component]);
  return out;
}

}  // namespace qdeg
