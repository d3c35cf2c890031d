#pragma once
#include <cstddef>
#include <vector>

#include "syk/hamiltonian.hpp"

namespace syk {

// Eigenvalues of a Hermitian matrix given row-major; contents are destroyed.
// Ascending order.
std::vector<double> hermitian_eigenvalues_inplace(cplx* a, std::size_t dim);

// Same, but on return row k of `a` holds the (unit) eigenvector for value k.
std::vector<double> hermitian_eigenpairs_inplace(cplx* a, std::size_t dim);

// Eigenvalues of a symmetric tridiagonal matrix (diag d, off-diagonal e).
std::vector<double> tridiag_eigenvalues(std::vector<double> d, std::vector<double> e);

// Eigenvalues plus, for each, the last component of its eigenvector — the
// piece Lanczos needs for residual bounds.
struct TridiagPairs {
    std::vector<double> values;
    std::vector<double> last_components;
};
TridiagPairs tridiag_eigenpairs(std::vector<double> d, std::vector<double> e);

// Even-q Hamiltonians commute with the fermion parity (every term flips an
// even number of occupation bits), so the basis splits into two popcount
// parity sectors of dimension dim/2 indexed by dropping bit 0.
bool parity_sector_applicable(const Hamiltonian& h);

// Dense eigenvalues of one parity sector (parity = popcount(w) & 1), ascending.
std::vector<double> parity_sector_eigenvalues(const Hamiltonian& h, int parity);

} // namespace syk
