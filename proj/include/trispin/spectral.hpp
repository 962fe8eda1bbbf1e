#pragma once

#include <vector>

#include "trispin/hamiltonian.hpp"
#include "trispin/krawtchouk.hpp"
#include "trispin/matrix.hpp"

namespace trispin {

struct SpectralDecomposition {
    std::vector<double> eigenvalues;  // ascending
    Matrix eigenvectors;              // column k pairs with eigenvalues[k]
};

// Cyclic Jacobi for real symmetric matrices.  Converged when every
// off-diagonal magnitude drops below tol_eig * ||H||_F; throws
// NoConvergence after max_sweeps sweeps.  This is the brute-force oracle
// and deliberately shares no code with the analytic path.
SpectralDecomposition diagonalize(const HamiltonianMatrix& h, double tol_eig = 1e-13,
                                  int max_sweeps = 100);

// x_{s,t} = R21*R22*s - R11*R12*t on the triangle, lattice index order.
std::vector<double> analytic_spectrum(const RotationMatrix& r, int n);

struct SpectralReport {
    double eigenvalue_deviation = 0.0;  // max |sorted numeric - sorted analytic|
    double projector_deviation = 0.0;   // max entry diff of cluster projectors
    int clusters = 0;
};

// Compares the Jacobi decomposition against the analytic eigenvalues and
// the eigenvectors encoded in M.  Degenerate eigenvalues are matched by
// spectral projectors over clusters (tolerance cluster_tol * spread).
SpectralReport compare(const SpectralDecomposition& d, const KrawtchoukTable& table,
                       const std::vector<double>& spectrum, double cluster_tol = 1e-8);

} // namespace trispin
