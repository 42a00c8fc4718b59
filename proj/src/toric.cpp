#include "qdeg/toric.hpp"

#include "qdeg/errors.hpp"
#include "qdeg/groebner.hpp"
#include "qdeg/stdpairs.hpp"

namespace qdeg {

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= n; ++j) names.push_back("x_" + std::to_string(j));
  return names;
}

GradedRing to_a_graded_ring(const IntMatrix& a, std::vector<std::string> names,
                            MonomialOrder order) {
  if (a.empty()) throw ValidationError("empty degree matrix");
  GradedRing ring(std::move(names), a, order);
  if (!columns_generate_lattice(a)) throw ValidationError("ZA != Z^d");
  return ring;
}

namespace {

void require_ring_from(const IntMatrix& a, const GradedRing& ring) {
  if (!(ring.degrees() == a)) throw ValidationError("ring is not graded by the given matrix");
}

}  // namespace

std::vector<Polynomial> lattice_basis_ideal(const IntMatrix& a, const GradedRing& ring) {
  require_ring_from(a, ring);
  std::vector<Polynomial> gens;
  for (const auto& u : integer_kernel(a)) {
    ExponentVector plus(u.size(), 0), minus(u.size(), 0);
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (!u[j].fits_sint_p()) throw ValidationError("kernel entry out of range");
      long e = u[j].get_si();
      (e > 0 ? plus : minus)[j] = static_cast<Exponent>(e > 0 ? e : -e);
    }
    gens.push_back(Polynomial::monomial(plus, 1, ring.order()) -
                   Polynomial::monomial(minus, 1, ring.order()));
  }
  return gens;
}

std::vector<Polynomial> toric_ideal(const IntMatrix& a, const GradedRing& ring) {
  std::vector<Polynomial> ideal = groebner_basis(lattice_basis_ideal(a, ring), ring.nvars(),
                                                 ring.order());
  if (ideal.empty()) return ideal;
  for (std::size_t j = 0; j < ring.nvars(); ++j)
    ideal = saturate(ideal, ring.variable(j), ring.order());
  return ideal;
}

std::vector<Polynomial> toric_ideal_by_product(const IntMatrix& a, const GradedRing& ring) {
  std::vector<Polynomial> basis = lattice_basis_ideal(a, ring);
  if (basis.empty()) return basis;
  Polynomial all = ring.one();
  for (std::size_t j = 0; j < ring.nvars(); ++j) all = all * ring.variable(j);
  return saturate(basis, all, ring.order());
}

std::size_t normalized_volume(const IntMatrix& a) {
  GradedRing ring = to_a_graded_ring(a, default_variable_names(a.cols()));
  std::vector<Polynomial> ideal = toric_ideal(a, ring);
  return degree_via_pairs(initial_ideal(ideal, ring.nvars(), MonomialOrder::grevlex()),
                          ring.nvars());
}

}  // namespace qdeg
