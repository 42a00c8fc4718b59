#include "properties.hpp"

#include "oracles.hpp"

#include "qdeg/graded_ring.hpp"
#include "qdeg/groebner.hpp"
#include "qdeg/homology.hpp"
#include "qdeg/plane.hpp"
#include "qdeg/quasidegrees.hpp"
#include "qdeg/stdpairs.hpp"

#include <algorithm>
#include <sstream>

namespace property {

using namespace qdeg;
using oracle::Rng;
using oracle::uniform;

namespace {

std::string show(const ExponentVector& u) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < u.size(); ++i) os << (i ? "," : "") << u[i];
  os << ')';
  return os.str();
}

std::string show(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << ')';
  return os.str();
}

std::vector<ExponentVector> random_monomial_gens(Rng& rng, std::size_t n, int max_exp) {
  std::vector<ExponentVector> gens(uniform(rng, 1, 4));
  for (auto& g : gens) {
    g.resize(n);
    for (auto& e : g) e = uniform(rng, 0, max_exp);
  }
  return gens;
}

bool indexes(const StandardPair& p, const ExponentVector& u) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    bool on_face = std::binary_search(p.face.begin(), p.face.end(), i);
    if (on_face ? u[i] < p.root[i] : u[i] != p.root[i]) return false;
  }
  return true;
}

// Every monomial indexed by p is indexed by q.
bool oracle_pair_contains(const StandardPair& p, const StandardPair& q) {
  if (!std::includes(q.face.begin(), q.face.end(), p.face.begin(), p.face.end())) return false;
  for (std::size_t i = 0; i < p.root.size(); ++i) {
    bool on_q = std::binary_search(q.face.begin(), q.face.end(), i);
    if (on_q ? p.root[i] < q.root[i] : p.root[i] != q.root[i]) return false;
  }
  return true;
}

std::size_t degree_of(const ExponentVector& u) {
  std::size_t d = 0;
  for (auto e : u) d += e;
  return d;
}

Polynomial random_polynomial(Rng& rng, std::size_t n, MonomialOrder order, int terms,
                             int max_exp) {
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    ExponentVector u(n);
    for (auto& e : u) e = uniform(rng, 0, max_exp);
    int c = 0;
    while (c == 0) c = uniform(rng, -3, 3);
    ts.push_back({Rational(c), u});
  }
  return Polynomial::from_terms(n, std::move(ts), order);
}

ExponentVector random_monomial_of_degree(Rng& rng, std::size_t n, int deg) {
  auto all = oracle::monomials_of_degree(n, deg);
  return all[uniform(rng, 0, static_cast<int>(all.size()) - 1)];
}

// x^u - c x^v with u != v of the same degree (so homogeneous), or a
// monomial when the draw repeats.
Polynomial random_binomial(Rng& rng, std::size_t n, MonomialOrder order, int deg) {
  auto u = random_monomial_of_degree(rng, n, deg);
  auto v = random_monomial_of_degree(rng, n, deg);
  Rational c = uniform(rng, 0, 3) == 0 ? oracle::small_rational(rng, 3, 2) : Rational(1);
  if (c == 0) c = 2;
  std::vector<Term> ts{{Rational(1), u}};
  if (u != v) ts.push_back({-c, v});
  return Polynomial::from_terms(n, std::move(ts), order);
}

// S-polynomial with monic leads, written out directly.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& a = f.lead();
  const auto& b = g.lead();
  ExponentVector l(a.exps.size());
  ExponentVector ma(l.size()), mb(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    l[i] = std::max(a.exps[i], b.exps[i]);
    ma[i] = l[i] - a.exps[i];
    mb[i] = l[i] - b.exps[i];
  }
  Polynomial s(f.nvars(), f.order());
  s.add_scaled(1 / a.coef, ma, f);
  s.add_scaled(-1 / b.coef, mb, g);
  return s;
}

std::string check_division(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  auto d = divide(f, std::span<const Polynomial>(divisors));
  Polynomial rebuilt = d.remainder;
  for (std::size_t i = 0; i < divisors.size(); ++i) rebuilt += d.quotients[i] * divisors[i];
  if (!(rebuilt == f)) return "division does not reconstruct f";
  for (const auto& t : d.remainder.terms())
    for (const auto& g : divisors)
      if (!g.is_zero() && oracle::divides(g.lead().exps, t.exps))
        return "remainder term divisible by a lead term";
  return {};
}

oracle::RawPlane raw(const AffinePlane& p) { return {p.base(), p.generators()}; }

}  // namespace

std::string standard_pairs_case(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = uniform(rng, 1, 4);
  auto gens = random_monomial_gens(rng, n, 4);
  auto pairs = standard_pairs(std::span<const ExponentVector>(gens), n);

  for (const auto& p : pairs) {
    if (!std::is_sorted(p.face.begin(), p.face.end())) return "face not sorted";
    for (auto i : p.face)
      if (p.root[i] != 0) return "root support meets the face";
  }

  for (const auto& u : oracle::exponent_box(n, 6)) {
    bool in_ideal = oracle::in_monomial_ideal(u, gens);
    bool covered = std::any_of(pairs.begin(), pairs.end(),
                               [&](const StandardPair& p) { return indexes(p, u); });
    if (in_ideal == covered) return "cover property fails at " + show(u);
  }

  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (i == j) continue;
      bool lib = pair_contains(pairs[i], pairs[j]);
      if (lib != oracle_pair_contains(pairs[i], pairs[j])) return "pair_contains disagrees";
      if (lib) return "pair " + show(pairs[i].root) + " not maximal";
    }

  // Root bound against the minimal generators, found by brute force.
  std::vector<ExponentVector> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = oracle::divides(gens[j], gens[i]) && (gens[j] != gens[i] || j < i);
    if (!redundant) minimal.push_back(gens[i]);
  }
  for (const auto& p : pairs)
    for (std::size_t v = 0; v < n; ++v) {
      int bound = 0;
      for (const auto& g : minimal) bound = std::max(bound, int(g[v]));
      if (bound == 0 ? p.root[v] != 0 : p.root[v] >= bound) return "root bound violated";
    }

  // dim R/I = largest variable set containing the support of no generator.
  int dim = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool free = std::none_of(minimal.begin(), minimal.end(), [&](const ExponentVector& g) {
      for (std::size_t v = 0; v < n; ++v)
        if (g[v] > 0 && !(mask >> v & 1)) return false;
      return true;
    });
    if (free) dim = std::max(dim, __builtin_popcount(mask));
  }
  int top = -1;
  for (const auto& p : pairs) top = std::max(top, int(p.face.size()));
  if (top != dim) return "largest face " + std::to_string(top) + " != dim " + std::to_string(dim);
  return {};
}

std::string groebner_case(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = uniform(rng, 2, 3);
  const MonomialOrder order = seed % 3 == 0 ? MonomialOrder::lex() : MonomialOrder::grevlex();
  std::vector<Polynomial> gens;
  const int count = uniform(rng, 1, 3);
  for (int i = 0; i < count; ++i) gens.push_back(random_polynomial(rng, n, order, uniform(rng, 1, 3), 2));

  auto gb = groebner_basis(gens, n, order);
  for (std::size_t i = 0; i < gb.size(); ++i) {
    if (gb[i].is_zero() || gb[i].lead().coef != 1) return "basis element not monic";
    for (std::size_t j = 0; j < gb.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gb[i].terms())
        if (oracle::divides(gb[j].lead().exps, t.exps)) return "basis not reduced";
    }
  }
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j)
      if (!divide(s_polynomial(gb[i], gb[j]), std::span<const Polynomial>(gb)).remainder.is_zero())
        return "S-pair does not reduce to zero";
  for (const auto& g : gens)
    if (!divide(g, std::span<const Polynomial>(gb)).remainder.is_zero())
      return "input generator not in the basis ideal";

  for (int k = 0; k < 3; ++k) {
    auto f = random_polynomial(rng, n, order, uniform(rng, 1, 5), 3);
    if (auto e = check_division(f, gens); !e.empty()) return e;
    if (auto e = check_division(f, gb); !e.empty()) return e;
  }
  return {};
}

std::string binomial_hilbert_case(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = uniform(rng, 3, 4);
  const MonomialOrder order = seed % 2 ? MonomialOrder::lex() : MonomialOrder::grevlex();
  std::vector<Polynomial> gens;
  const int count = uniform(rng, 1, 3);
  for (int i = 0; i < count; ++i) gens.push_back(random_binomial(rng, n, order, uniform(rng, 1, 3)));

  std::vector<VectorElement> columns;
  for (const auto& g : gens) columns.push_back(VectorElement::from_polynomial(g));
  auto in = initial_ideal(gens, n, order);
  for (int s = 0; s <= 5; ++s) {
    auto monos = oracle::monomials_of_degree(n, s);
    std::size_t hf = monos.size() - oracle::submodule_dim(columns, {0}, n, s);
    std::size_t standard = std::count_if(monos.begin(), monos.end(), [&](const ExponentVector& u) {
      return !oracle::in_monomial_ideal(u, in);
    });
    if (hf != standard)
      return "Hilbert function differs in degree " + std::to_string(s) + ": " +
             std::to_string(hf) + " vs " + std::to_string(standard);
  }

  auto basis = buchberger(columns, FreeModule{n, 1, order});
  for (int k = 0; k < 4; ++k) {
    int s = uniform(rng, 1, 4);
    Polynomial f(n, order);
    for (const auto& g : gens) {
      int dg = static_cast<int>(degree_of(g.lead().exps));
      if (dg <= s && uniform(rng, 0, 1))
        f.add_scaled(oracle::small_rational(rng, 3, 2), random_monomial_of_degree(rng, n, s - dg), g);
    }
    if (k % 2) f += Polynomial::monomial(random_monomial_of_degree(rng, n, s), 1, order);
    bool by_gb = basis.contains(VectorElement::from_polynomial(f));
    if (by_gb != oracle::ideal_member(f, gens)) return "membership disagrees with linear algebra";
  }
  return {};
}

std::string syzygy_case(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = 3;
  const auto order = MonomialOrder::grevlex();
  std::vector<Polynomial> gens;
  const int count = uniform(rng, 2, 3);
  for (int i = 0; i < count; ++i) {
    auto g = random_binomial(rng, n, order, uniform(rng, 1, 2));
    if (uniform(rng, 0, 2) == 0)
      g = Polynomial::monomial(random_monomial_of_degree(rng, n, uniform(rng, 1, 2)), 1, order);
    gens.push_back(g);
  }
  std::vector<VectorElement> columns;
  oracle::Shifts shifts;
  for (const auto& g : gens) {
    columns.push_back(VectorElement::from_polynomial(g));
    shifts.push_back(static_cast<int>(degree_of(g.lead().exps)));
  }

  auto syz = syzygies(std::span<const Polynomial>(gens), n, order);
  for (const auto& s : syz)
    if (!oracle::apply(s, columns, 1).is_zero()) return "syzygy does not annihilate";
  try {
    for (int s = 0; s <= 6; ++s) {
      auto ker = oracle::kernel_dim(columns, shifts, {0}, n, s);
      auto gen = oracle::submodule_dim(syz, shifts, n, s);
      if (ker != gen)
        return "syzygies span " + std::to_string(gen) + " of " + std::to_string(ker) +
               " kernel dimensions in degree " + std::to_string(s);
    }
  } catch (const std::logic_error&) {
    return "inhomogeneous syzygy";
  }
  return {};
}

std::string saturation_case(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = 3;
  const auto order = MonomialOrder::grevlex();
  std::vector<Polynomial> gens;
  const int count = uniform(rng, 1, 3);
  for (int i = 0; i < count; ++i) gens.push_back(random_binomial(rng, n, order, uniform(rng, 1, 3)));
  Polynomial f = Polynomial::monomial(unit_exponent(n, uniform(rng, 0, 2)), 1, order);

  auto once = saturate(gens, f, order);
  auto twice = saturate(once, f, order);
  if (!ideal_equal(once, twice, n, order)) return "saturation not idempotent";
  for (const auto& g : gens)
    if (!oracle::ideal_member(g, once)) return "I not contained in its saturation";
  for (const auto& g : once) {
    bool found = false;
    Polynomial h = g;
    for (int k = 0; k <= 8 && !found; ++k) {
      found = oracle::ideal_member(h, gens);
      h = h * f;
    }
    if (!found) return "saturation element with no power of f landing in I";
  }
  return {};
}

std::string resolution_case(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = 3;
  auto ring = GradedRing::standard({"x", "y", "z"});
  const auto order = ring.order();

  GradedPresentation p;
  const std::size_t rank = uniform(rng, 1, 2);
  oracle::Shifts shifts;
  for (std::size_t k = 0; k < rank; ++k) {
    shifts.push_back(rank == 1 ? 0 : uniform(rng, 0, 1));
    p.shifts.push_back(IntVector{shifts.back()});
  }
  const int ncols = uniform(rng, 1, 3);
  for (int j = 0; j < ncols; ++j) {
    int deg = uniform(rng, 1, 3);
    std::vector<Polynomial> comps;
    for (std::size_t k = 0; k < rank; ++k) {
      int dk = deg - shifts[k];
      if (dk < 1 || (rank > 1 && uniform(rng, 0, 2) == 0))
        comps.emplace_back(n, order);
      else if (uniform(rng, 0, 1))
        comps.push_back(Polynomial::monomial(random_monomial_of_degree(rng, n, dk), 1, order));
      else
        comps.push_back(random_binomial(rng, n, order, dk));
    }
    auto col = VectorElement::from_components(comps);
    if (!col.is_zero()) p.relations.push_back(col);
  }

  auto res = free_resolution(p, ring, n + 1);
  if (!res.complete) return "resolution not complete";
  if (res.length() > n) return "resolution longer than nvars";
  if (res.modules[0] != p.shifts) return "F_0 shifts differ from the presentation";

  std::vector<oracle::Shifts> degs;
  int top = 0;
  for (const auto& m : res.modules) {
    oracle::Shifts s;
    for (const auto& a : m) {
      s.push_back(static_cast<int>(a[0].get_si()));
      top = std::max(top, s.back());
    }
    degs.push_back(s);
  }

  for (std::size_t i = 0; i < res.differentials.size(); ++i) {
    const auto& cols = res.differentials[i];
    if (cols.size() != degs[i + 1].size()) return "differential size mismatch";
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].is_zero()) return "zero column in a differential";
      for (const auto& t : cols[j].terms())
        if (static_cast<int>(degree_of(t.exps)) + degs[i][t.component] != degs[i + 1][j])
          return "inhomogeneous column in phi_" + std::to_string(i + 1);
    }
    if (i + 1 < res.differentials.size())
      for (const auto& c : res.differentials[i + 1])
        if (!oracle::apply(c, cols, degs[i].size()).is_zero())
          return "phi_" + std::to_string(i + 1) + " phi_" + std::to_string(i + 2) + " != 0";
  }

  const int box = std::min(top + 1, 9);
  for (int s = 0; s <= box; ++s) {
    // Image of phi_1 equals the presented submodule.
    std::vector<VectorElement> both = p.relations;
    if (!res.differentials.empty())
      both.insert(both.end(), res.differentials[0].begin(), res.differentials[0].end());
    auto rel = oracle::submodule_dim(p.relations, shifts, n, s);
    if (oracle::submodule_dim(both, shifts, n, s) != rel ||
        (!res.differentials.empty() &&
         oracle::submodule_dim(res.differentials[0], shifts, n, s) != rel))
      return "image of phi_1 differs from the relations in degree " + std::to_string(s);
    for (std::size_t i = 1; i < res.modules.size(); ++i) {
      auto ker = oracle::kernel_dim(res.differentials[i - 1], degs[i], degs[i - 1], n, s);
      std::size_t im = i < res.differentials.size()
                           ? oracle::submodule_dim(res.differentials[i], degs[i], n, s)
                           : 0;
      if (ker != im)
        return "not exact at F_" + std::to_string(i) + " in degree " + std::to_string(s);
    }
  }
  return {};
}

std::string plane_family_case(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t d = uniform(rng, 1, 4);
  auto random_vec = [&](int bound) {
    RatVector v(d);
    for (auto& x : v) x = uniform(rng, 0, 4) == 0 ? oracle::small_rational(rng, bound, 3)
                                                  : Rational(uniform(rng, -bound, bound));
    return v;
  };
  auto combo = [&](RatVector v, const std::vector<RatVector>& gens) {
    for (const auto& g : gens) {
      Rational c = uniform(rng, -2, 2);
      for (std::size_t i = 0; i < d; ++i) v[i] += c * g[i];
    }
    return v;
  };

  std::vector<AffinePlane> family;
  const int parents = uniform(rng, 1, 3);
  for (int k = 0; k < parents; ++k) {
    std::vector<RatVector> gens(uniform(rng, 0, static_cast<int>(d)));
    for (auto& g : gens) g = random_vec(2);
    RatVector base = random_vec(3);
    family.emplace_back(base, gens);
    const int children = uniform(rng, 0, 3);
    for (int c = 0; c < children; ++c) {
      std::vector<RatVector> sub;
      const int m = uniform(rng, 0, static_cast<int>(gens.size()));
      for (int i = 0; i < m; ++i) sub.push_back(combo(RatVector(d), gens));
      family.emplace_back(combo(base, gens), sub);
    }
    if (!gens.empty() && uniform(rng, 0, 1)) {
      auto more = gens;
      more.push_back(combo(RatVector(d), gens));
      family.emplace_back(combo(base, gens), more);
    }
    if (uniform(rng, 0, 3) == 0) family.emplace_back(base, gens);
  }
  if (uniform(rng, 0, 1)) family.emplace_back(random_vec(3), std::vector<RatVector>{});
  std::shuffle(family.begin(), family.end(), rng);

  for (const auto& a : family)
    for (const auto& b : family) {
      bool lib = plane_contains(a, b);
      if (lib != oracle::sampled_contains(raw(a), raw(b), rng))
        return "plane_contains disagrees with sampling for " + show(a.base()) + " / " +
               show(b.base());
      if ((lib && plane_contains(b, a)) != a.same_set(b))
        return "canonical forms do not decide set equality";
    }

  QuasidegreeSet in{family};
  auto out = remove_redundancy(in);
  for (const auto& p : out.planes)
    if (std::find(family.begin(), family.end(), p) == family.end())
      return "output plane not taken from the input";
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j)
      if (i != j && oracle::sampled_contains(raw(out.planes[i]), raw(out.planes[j]), rng))
        return "output planes comparable";
  for (const auto& p : family)
    if (std::none_of(out.planes.begin(), out.planes.end(), [&](const AffinePlane& q) {
          return oracle::sampled_contains(raw(q), raw(p), rng);
        }))
      return "union not preserved";
  if (!std::is_sorted(out.planes.begin(), out.planes.end(), plane_less)) return "output not sorted";
  return {};
}

std::string duality_case(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t d = uniform(rng, 1, 4);
  RatVector base(d);
  for (auto& x : base) x = oracle::small_rational(rng, 5, 3);
  std::vector<RatVector> gens(uniform(rng, 0, 3), RatVector(d));
  for (auto& g : gens)
    for (auto& x : g) x = uniform(rng, -3, 3);
  IntVector eps(d);
  for (auto& e : eps) e = uniform(rng, -4, 6);

  AffinePlane p(base, gens);
  auto once = duality_transform(p, eps);
  auto twice = duality_transform(once, eps);
  if (!(twice == p)) return "double transform changed the plane";
  for (std::size_t i = 0; i < d; ++i)
    if (once.base()[i] != -base[i] - Rational(eps[i])) return "transform base wrong";
  return {};
}

std::string monomial_quasidegrees_case(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = uniform(rng, 1, 4);
  const std::size_t d = uniform(rng, 1, 2);
  IntMatrix a(d, n);
  for (std::size_t j = 0; j < n; ++j) {
    a(0, j) = uniform(rng, 1, 2);
    for (std::size_t i = 1; i < d; ++i) a(i, j) = uniform(rng, -2, 2);
  }
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) names.push_back("v" + std::to_string(j));
  GradedRing ring(names, a);

  auto gens = random_monomial_gens(rng, n, 3);
  MonomialMatrix phi(1, gens.size(), n, {IntVector(d)});
  for (std::size_t c = 0; c < gens.size(); ++c) phi.set(0, c, MonomialEntry{Rational(1), gens[c]});
  auto q = quasidegrees_monomial(phi, ring);

  auto degree = [&](const ExponentVector& u) {
    RatVector out(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i] += a(i, j) * u[j];
    return out;
  };

  std::vector<RatVector> true_degrees;
  for (const auto& u : oracle::exponent_box(n, 5))
    if (!oracle::in_monomial_ideal(u, gens)) true_degrees.push_back(degree(u));

  for (const auto& beta : true_degrees)
    if (std::none_of(q.planes.begin(), q.planes.end(), [&](const AffinePlane& p) {
          return oracle::point_on(raw(p), beta);
        }))
      return "true degree " + show(beta) + " outside every plane";

  // Each plane is the affine hull of the true degrees it contains.
  for (const auto& p : q.planes) {
    std::vector<RatVector> on;
    for (const auto& beta : true_degrees)
      if (oracle::point_on(raw(p), beta)) on.push_back(beta);
    if (on.empty()) return "plane with no true degree";
    std::vector<RatVector> diffs;
    for (const auto& beta : on) {
      RatVector v(d);
      for (std::size_t i = 0; i < d; ++i) v[i] = beta[i] - on.front()[i];
      diffs.push_back(v);
    }
    if (oracle::rank(diffs) != oracle::rank(p.generators())) return "plane larger than its degrees";
  }

  // Monomial generators: the Gröbner route yields the same planes.
  std::vector<VectorElement> cols;
  for (const auto& g : gens) cols.push_back(VectorElement::from_polynomial(Polynomial::monomial(g)));
  auto via_gb = quasidegrees_module(cols, {IntVector(d)}, ring);
  auto lhs = remove_redundancy(q), rhs = remove_redundancy(via_gb);
  if (lhs.size() != rhs.size()) return "quasidegrees_module differs on monomial input";
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (!lhs.planes[i].same_set(rhs.planes[i])) return "quasidegrees_module differs on monomial input";
  return {};
}

}  // namespace property
