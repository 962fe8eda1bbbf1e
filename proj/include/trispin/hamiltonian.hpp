#pragma once

#include <vector>

#include "trispin/lattice.hpp"
#include "trispin/matrix.hpp"
#include "trispin/rotation.hpp"

namespace trispin {

// Exchange couplings I_{i,j} (horizontal bonds), J_{i,j} (vertical bonds)
// and on-site fields B_{i,j} on the triangle.  Stored as (N+1)x(N+1)
// rectangles indexed [j][i]; entries outside the triangle are kept at 0.
// Boundary convention: I_{0,j} = 0 and J_{i,0} = 0.
struct CouplingSet {
    int n = 0;
    std::vector<std::vector<double>> I, J, B;

    static CouplingSet zeros(int n);
};

struct HamiltonianMatrix {
    TriangularLattice lattice;
    Matrix entries;  // dim x dim, real symmetric
};

// The exactly solvable family: couplings determined by the rotation
// matrix so that the transition matrix M diagonalizes H.
CouplingSet couplings_from_rotation(const RotationMatrix& r, int n);

// 1-excitation block: diagonal B_{i,j}, bond (i-1,j)-(i,j) carries I_{i,j},
// bond (i,j-1)-(i,j) carries J_{i,j}.
HamiltonianMatrix assemble(const CouplingSet& c);

// Validates shapes and finiteness, and zeroes any value that violates the
// boundary convention or lies outside the triangle.  Returns the number of
// values that had to be zeroed (callers may warn on nonzero).
int enforce_boundary(CouplingSet& c);

} // namespace trispin
