#ifndef QDEG_STDPAIRS_HPP
#define QDEG_STDPAIRS_HPP

#include "qdeg/monomial_order.hpp"
#include "qdeg/polynomial.hpp"

#include <span>
#include <vector>

namespace qdeg {

/// (x^root, face): indexes the monomials x^root * x^v with supp(v) in face.
/// supp(root) and face are disjoint.
struct StandardPair {
  ExponentVector root;
  std::vector<std::size_t> face;  // sorted variable indices

  auto operator<=>(const StandardPair&) const = default;
};

/// True iff every monomial indexed by p is indexed by q.
bool pair_contains(const StandardPair& p, const StandardPair& q);

/// Generators with no other generator dividing them, sorted, deduplicated.
std::vector<ExponentVector> minimal_generators(std::span<const ExponentVector> gens);

/// Standard pairs of the monomial ideal generated by `gens` in n variables.
/// Sorted by face size, then face, then root.
std::vector<StandardPair> standard_pairs(std::span<const ExponentVector> gens, std::size_t nvars);

/// Same, from polynomial generators; throws ValidationError unless every
/// nonzero generator is a single term. Zero generators are ignored.
std::vector<StandardPair> standard_pairs(std::span<const Polynomial> gens, std::size_t nvars);

/// Number of standard pairs of maximal face size, i.e. the degree of R/I.
std::size_t degree_via_pairs(std::span<const ExponentVector> gens, std::size_t nvars);

/// Whether x^u lies in the monomial ideal.
bool monomial_in_ideal(const ExponentVector& u, std::span<const ExponentVector> gens);

}  // namespace qdeg

#endif
