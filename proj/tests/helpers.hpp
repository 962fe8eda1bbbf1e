#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "trispin/krawtchouk.hpp"
#include "trispin/rotation.hpp"

namespace trispin::testing {

// Euler-sampled O(3) matrix with |R13|, |R23|, |R33| >= min_entry so the
// raising relations stay well-conditioned.  Half the samples are improper.
inline RotationMatrix random_rotation(std::mt19937& rng, double min_entry = 1e-3) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    std::bernoulli_distribution flip(0.5);
    for (;;) {
        RotationMatrix r = RotationMatrix::from_euler(angle(rng), angle(rng), angle(rng), flip(rng));
        if (std::fabs(r.entry(1, 3)) >= min_entry && std::fabs(r.entry(2, 3)) >= min_entry
            && std::fabs(r.entry(3, 3)) >= min_entry)
            return r;
    }
}

// Least-squares fit of the grid values of P_{i,j} by a bivariate polynomial
// of total degree i+j, via twice-reorthogonalized Gram-Schmidt on scaled
// monomials.  Returns the max absolute residual over the grid.  This is an
// oracle for the degree property and is independent of how P was built.
inline double degree_fit_residual(const KrawtchoukTable& table, int i, int j) {
    const int n = table.n;
    const int d = i + j;
    const int m = table.lattice.dim();
    if (n == 0) return 0.0;

    // columns: (s/N)^a (t/N)^b over grid rows, a+b <= d
    std::vector<std::vector<double>> q;
    for (int a = 0; a <= d; ++a)
        for (int b = 0; b <= d - a; ++b) {
            std::vector<double> col(static_cast<size_t>(m));
            for (int k = 0; k < m; ++k) {
                const Site g = table.lattice.index_to_site(k);
                col[static_cast<size_t>(k)] = std::pow(static_cast<double>(g.i) / n, a)
                                            * std::pow(static_cast<double>(g.j) / n, b);
            }
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& prev : q) {
                    double dot = 0.0;
                    for (int k = 0; k < m; ++k) dot += prev[static_cast<size_t>(k)] * col[static_cast<size_t>(k)];
                    for (int k = 0; k < m; ++k) col[static_cast<size_t>(k)] -= dot * prev[static_cast<size_t>(k)];
                }
            double norm = 0.0;
            for (double v : col) norm += v * v;
            norm = std::sqrt(norm);
            for (double& v : col) v /= norm;
            q.push_back(std::move(col));
        }

    std::vector<double> res(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k)
        res[static_cast<size_t>(k)] = table.poly_at(i, j, table.lattice.index_to_site(k).i,
                                                    table.lattice.index_to_site(k).j);
    for (const auto& col : q) {
        double dot = 0.0;
        for (int k = 0; k < m; ++k) dot += col[static_cast<size_t>(k)] * res[static_cast<size_t>(k)];
        for (int k = 0; k < m; ++k) res[static_cast<size_t>(k)] -= dot * col[static_cast<size_t>(k)];
    }
    double worst = 0.0;
    for (double v : res) worst = std::max(worst, std::fabs(v));
    return worst;
}

} // namespace trispin::testing
