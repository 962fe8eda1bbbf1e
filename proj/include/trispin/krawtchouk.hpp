#pragma once

#include <utility>

#include "trispin/lattice.hpp"
#include "trispin/matrix.hpp"
#include "trispin/rotation.hpp"

namespace trispin {

// Tabulated weight amplitudes W_{s,t;N}, bivariate Krawtchouk polynomials
// P_{i,j}(s,t;N) and their product M_{i,j}(s,t) = W * P on the triangular
// grid.  M is a real orthogonal dim x dim matrix with rows labeled (s,t)
// and columns labeled (i,j), both in lattice enumeration order.
struct KrawtchoukTable {
    int n = 0;
    RotationMatrix rotation;
    TriangularLattice lattice;
    std::vector<double> weights;  // W_{s,t;N}, indexed by lattice index of (s,t)
    Matrix poly;                  // P(index(i,j), index(s,t))
    Matrix transition;            // M(index(s,t), index(i,j)) = W * P

    double weight_at(int s, int t) const {
        return weights[static_cast<size_t>(lattice.site_to_index(s, t))];
    }
    double poly_at(int i, int j, int s, int t) const {
        return poly(lattice.site_to_index(i, j), lattice.site_to_index(s, t));
    }
    double m_at(int s, int t, int i, int j) const {
        return transition(lattice.site_to_index(s, t), lattice.site_to_index(i, j));
    }
};

// W_{s,t;N} = multinomial(N; s,t)^{1/2} R13^s R23^t R33^{N-s-t}.
// Uses log-factorials, stable for N up to at least 60.  Zero rotation
// entries are allowed here (0^0 = 1).
double weight(const RotationMatrix& r, int n, int s, int t);

// Builds the full table by sweeping the raising relations through orders
// 0..N starting from P_{0,0} = 1.  Requires |R13|, |R23|, |R33| >= 1e-12
// (the relations divide by these entries); throws DegenerateRotation
// otherwise.
KrawtchoukTable polynomial_table(const RotationMatrix& r, int n);

// max |sum_{s+t<=N} W^2 P_{i,j} P_{i',j'} - delta| over all pairs.
double verify_orthogonality(const KrawtchoukTable& table);

// Maximum absolute residuals of the two three-term-in-each-direction
// recurrences (the s- and t-eigenvalue relations), out-of-range P = 0.
std::pair<double, double> verify_recurrences(const KrawtchoukTable& table);

} // namespace trispin
