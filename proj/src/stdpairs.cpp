#include "qdeg/stdpairs.hpp"

#include "qdeg/errors.hpp"

#include <algorithm>

namespace qdeg {

bool pair_contains(const StandardPair& p, const StandardPair& q) {
  auto in_q_face = [&](std::size_t v) {
    return std::binary_search(q.face.begin(), q.face.end(), v);
  };
  for (std::size_t v : p.face)
    if (!in_q_face(v)) return false;
  for (std::size_t v = 0; v < p.root.size(); ++v) {
    if (p.root[v] < q.root[v]) return false;
    if (p.root[v] > q.root[v] && !in_q_face(v)) return false;
  }
  return true;
}

std::vector<ExponentVector> minimal_generators(std::span<const ExponentVector> gens) {
  std::vector<ExponentVector> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < sorted.size() && minimal; ++j)
      if (i != j && divides(sorted[j], sorted[i])) minimal = false;
    if (minimal) out.push_back(sorted[i]);
  }
  return out;
}

bool monomial_in_ideal(const ExponentVector& u, std::span<const ExponentVector> gens) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const ExponentVector& g) { return divides(g, u); });
}

namespace {

// Every monomial x^u x^v with supp(v) in the face lies outside I iff no
// generator, with the face variables set to 1, divides x^u.
bool admissible(const ExponentVector& root, std::size_t face_mask,
                std::span<const ExponentVector> gens) {
  for (const auto& g : gens) {
    bool divides_root = true;
    for (std::size_t v = 0; v < root.size() && divides_root; ++v)
      if (!((face_mask >> v) & 1U) && g[v] > root[v]) divides_root = false;
    if (divides_root) return false;
  }
  return true;
}

}  // namespace

std::vector<StandardPair> standard_pairs(std::span<const ExponentVector> gens,
                                         std::size_t nvars) {
  const std::vector<ExponentVector> mins = minimal_generators(gens);
  ExponentVector bound(nvars, 0);
  for (const auto& g : mins)
    for (std::size_t v = 0; v < nvars; ++v) bound[v] = std::max(bound[v], g[v]);

  std::vector<StandardPair> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << nvars); ++mask) {
    std::vector<std::size_t> face;
    std::vector<std::size_t> free_vars;
    for (std::size_t v = 0; v < nvars; ++v) (((mask >> v) & 1U) ? face : free_vars).push_back(v);
    if (!admissible(ExponentVector(nvars, 0), mask, mins)) continue;

    // Odometer over roots supported off the face with root[v] < bound[v].
    ExponentVector root(nvars, 0);
    bool done = false;
    while (!done) {
      if (admissible(root, mask, mins)) {
        // (u, Z) is contained in a larger admissible pair iff moving one
        // more variable into the face keeps it admissible.
        bool maximal = true;
        for (std::size_t v : free_vars) {
          ExponentVector shifted = root;
          shifted[v] = 0;
          if (admissible(shifted, mask | (std::size_t{1} << v), mins)) {
            maximal = false;
            break;
          }
        }
        if (maximal) out.push_back(StandardPair{root, face});
      }
      done = true;
      for (std::size_t v : free_vars) {
        if (root[v] + 1 < bound[v]) {
          ++root[v];
          done = false;
          break;
        }
        root[v] = 0;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const StandardPair& a, const StandardPair& b) {
    if (a.face.size() != b.face.size()) return a.face.size() < b.face.size();
    if (a.face != b.face) return a.face < b.face;
    return a.root < b.root;
  });
  return out;
}

std::vector<StandardPair> standard_pairs(std::span<const Polynomial> gens, std::size_t nvars) {
  std::vector<ExponentVector> exps;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_monomial()) throw ValidationError("non-monomial generator");
    exps.push_back(g.lead().exps);
  }
  return standard_pairs(exps, nvars);
}

std::size_t degree_via_pairs(std::span<const ExponentVector> gens, std::size_t nvars) {
  auto pairs = standard_pairs(gens, nvars);
  std::size_t top = 0;
  for (const auto& p : pairs) top = std::max(top, p.face.size());
  return static_cast<std::size_t>(std::count_if(
      pairs.begin(), pairs.end(), [&](const StandardPair& p) { return p.face.size() == top; }));
}

}  // namespace qdeg
