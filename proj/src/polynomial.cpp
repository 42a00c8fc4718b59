#include "qdeg/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace qdeg {

namespace {

// Merge two sorted term lists: out = a + c * x^m * b.
std::vector<Term> merge(const std::vector<Term>& a, const Rational& c, const ExponentVector* m,
                        const std::vector<Term>& b, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto scaled = [&](const Term& t) {
    return Term{c * t.coef, m ? product(t.exps, *m) : t.exps};
  };
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Term tb = scaled(b[j]);
    auto cmp = order.compare(a[i].exps, tb.exps);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(tb));
      ++j;
    } else {
      Rational s = a[i].coef + tb.coef;
      if (s != 0) out.push_back(Term{std::move(s), a[i].exps});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(scaled(b[j]));
  return out;
}

}  // namespace

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms,
                                  MonomialOrder order) {
  Polynomial f(nvars, order);
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.exps, b.exps) > 0; });
  for (auto& t : terms) {
    assert(t.exps.size() == nvars);
    if (!f.terms_.empty() && f.terms_.back().exps == t.exps) {
      f.terms_.back().coef += t.coef;
      if (f.terms_.back().coef == 0) f.terms_.pop_back();
    } else if (t.coef != 0) {
      f.terms_.push_back(std::move(t));
    }
  }
  return f;
}

Polynomial Polynomial::monomial(ExponentVector exps, Rational coef, MonomialOrder order) {
  Polynomial f(exps.size(), order);
  if (coef != 0) f.terms_.push_back(Term{std::move(coef), std::move(exps)});
  return f;
}

Polynomial Polynomial::constant(std::size_t nvars, Rational c, MonomialOrder order) {
  return monomial(ExponentVector(nvars, 0), std::move(c), order);
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  return from_terms(nvars_, terms_, order);
}

Polynomial Polynomial::operator-() const {
  Polynomial f = *this;
  for (auto& t : f.terms_) t.coef = -t.coef;
  return f;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  assert(g.nvars_ == nvars_ && g.order_ == order_);
  terms_ = merge(terms_, Rational(1), nullptr, g.terms_, order_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  assert(g.nvars_ == nvars_ && g.order_ == order_);
  terms_ = merge(terms_, Rational(-1), nullptr, g.terms_, order_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

void Polynomial::add_scaled(const Rational& c, const ExponentVector& m, const Polynomial& g) {
  if (c == 0) return;
  terms_ = merge(terms_, c, &m, g.terms_, order_);
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  assert(f.nvars_ == g.nvars_ && f.order_ == g.order_);
  Polynomial out(f.nvars_, f.order_);
  for (const auto& t : f.terms_) out.add_scaled(t.coef, t.exps, g);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1, order_);
  for (unsigned k = 0; k < e; ++k) result = result * *this;
  return result;
}

std::string render(const Polynomial& f, std::span<const std::string> names) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    bool constant = total_degree(t.exps) == 0;
    bool wrote = false;
    if (c != 1 || constant) {
      out << to_string(c);
      wrote = true;
    }
    for (std::size_t v = 0; v < t.exps.size(); ++v) {
      if (t.exps[v] == 0) continue;
      if (wrote) out << "*";
      out << names[v];
      if (t.exps[v] > 1) out << "^" << t.exps[v];
      wrote = true;
    }
    first = false;
  }
  return out.str();
}

}  // namespace qdeg
