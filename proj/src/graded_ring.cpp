#include "qdeg/graded_ring.hpp"

#include "qdeg/errors.hpp"

#include <algorithm>
#include <numeric>

namespace qdeg {

namespace {

bool is_heft(const IntMatrix& a, const IntVector& h) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += h[i] * a(i, j);
    if (s <= 0) return false;
  }
  return true;
}

// Advance a sorted r-subset of {0..n-1}; false when exhausted.
bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
  std::size_t r = s.size();
  for (std::size_t k = r; k-- > 0;) {
    if (s[k] < n - r + k) {
      ++s[k];
      for (std::size_t m = k + 1; m < r; ++m) s[m] = s[m - 1] + 1;
      return true;
    }
  }
  return false;
}

std::optional<IntVector> heft_by_vertex_enumeration(const IntMatrix& a) {
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  RatMatrix ra = to_rational(a);
  std::size_t rank = rref(ra).rank;
  if (rank == 0) return std::nullopt;

  RatMatrix at(n, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) at(j, i) = ra(i, j);
  std::vector<RatVector> orth = rational_kernel(at);

  std::vector<std::size_t> subset(rank);
  std::iota(subset.begin(), subset.end(), 0);
  do {
    // Tight constraints a_j . h = 1 on the subset, h orthogonal to ker(A^T).
    RatMatrix sys(d, d + 1);
    std::size_t row = 0;
    for (std::size_t j : subset) {
      for (std::size_t i = 0; i < d; ++i) sys(row, i) = ra(i, j);
      sys(row, d) = 1;
      ++row;
    }
    for (const auto& w : orth) {
      for (std::size_t i = 0; i < d; ++i) sys(row, i) = w[i];
      sys(row, d) = 0;
      ++row;
    }
    RrefResult e = rref(sys);
    if (e.rank != d || e.pivots.back() == d) continue;
    RatVector h(d);
    for (std::size_t i = 0; i < d; ++i) h[i] = e.form(i, d);
    bool feasible = true;
    for (std::size_t j = 0; j < n && feasible; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < d; ++i) s += h[i] * ra(i, j);
      feasible = s >= 1;
    }
    if (!feasible) continue;
    Integer den = 1;
    for (const auto& x : h) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    IntVector out(d);
    for (std::size_t i = 0; i < d; ++i) out[i] = Integer(h[i] * den);
    return out;
  } while (next_subset(subset, n));
  return std::nullopt;
}

}  // namespace

IntVector find_heft(const IntMatrix& degrees) {
  const std::size_t d = degrees.rows();
  for (std::size_t i = 0; i < d; ++i) {
    IntVector h(d, 0);
    h[i] = 1;
    if (is_heft(degrees, h)) return h;
  }
  IntVector ones(d, 1);
  if (is_heft(degrees, ones)) return ones;
  if (auto h = heft_by_vertex_enumeration(degrees)) return *h;
  throw ValidationError("grading not positive");
}

GradedRing::GradedRing(std::vector<std::string> names, IntMatrix degrees, MonomialOrder order)
    : names_(std::move(names)), degrees_(std::move(degrees)), order_(order) {
  if (degrees_.cols() != names_.size())
    throw ValidationError("degree matrix has " + std::to_string(degrees_.cols()) +
                          " columns for " + std::to_string(names_.size()) + " variables");
  if (degrees_.rows() == 0) throw ValidationError("grading rank must be positive");
  heft_ = find_heft(degrees_);
  epsilon_.assign(degrees_.rows(), 0);
  for (std::size_t j = 0; j < degrees_.cols(); ++j)
    for (std::size_t i = 0; i < degrees_.rows(); ++i) epsilon_[i] += degrees_(i, j);
}

GradedRing GradedRing::standard(std::vector<std::string> names, MonomialOrder order) {
  IntMatrix ones(1, names.size());
  for (std::size_t j = 0; j < names.size(); ++j) ones(0, j) = 1;
  return GradedRing(std::move(names), std::move(ones), order);
}

GradedRing GradedRing::with_order(MonomialOrder order) const {
  GradedRing r = *this;
  r.order_ = order;
  return r;
}

std::optional<std::size_t> GradedRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

IntVector GradedRing::multidegree(const ExponentVector& u) const {
  IntVector deg(grading_rank(), 0);
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] == 0) continue;
    for (std::size_t i = 0; i < deg.size(); ++i) deg[i] += degrees_(i, j) * u[j];
  }
  return deg;
}

Integer GradedRing::heft_degree(const IntVector& degree) const {
  Integer s = 0;
  for (std::size_t i = 0; i < degree.size(); ++i) s += heft_[i] * degree[i];
  return s;
}

std::optional<HomogeneousDegree> is_homogeneous(const Polynomial& f, const GradedRing& ring) {
  if (f.is_zero()) return HomogeneousDegree{true, {}};
  IntVector deg = ring.multidegree(f.lead().exps);
  for (const auto& t : f.terms())
    if (ring.multidegree(t.exps) != deg) return std::nullopt;
  return HomogeneousDegree{false, std::move(deg)};
}

}  // namespace qdeg
