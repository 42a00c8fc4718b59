#ifndef QDEG_TORIC_HPP
#define QDEG_TORIC_HPP

#include "qdeg/graded_ring.hpp"
#include "qdeg/polynomial.hpp"

#include <string>
#include <vector>

namespace qdeg {

/// x_1, ..., x_n
std::vector<std::string> default_variable_names(std::size_t n);

/// Q[names] graded by the columns of A. Throws ValidationError when the
/// grading is not positive or the columns do not generate Z^d.
GradedRing to_a_graded_ring(const IntMatrix& a, std::vector<std::string> names,
                            MonomialOrder order = MonomialOrder::grevlex());

/// <x^{u+} - x^{u-} : u in a basis of ker_Z(A)>
std::vector<Polynomial> lattice_basis_ideal(const IntMatrix& a, const GradedRing& ring);

/// Reduced Gröbner basis (in the ring's order) of the toric ideal I_A,
/// obtained by saturating the lattice basis ideal one variable at a time.
std::vector<Polynomial> toric_ideal(const IntMatrix& a, const GradedRing& ring);

/// Same ideal, saturating once by x_1 * ... * x_n.
std::vector<Polynomial> toric_ideal_by_product(const IntMatrix& a, const GradedRing& ring);

/// Degree of R/I_A read off the top-dimensional standard pairs of its
/// grevlex initial ideal; equals d! vol(conv(A u {0})).
std::size_t normalized_volume(const IntMatrix& a);

}  // namespace qdeg

#endif
