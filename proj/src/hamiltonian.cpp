#include "trispin/hamiltonian.hpp"

#include <cmath>

#include "trispin/errors.hpp"

namespace trispin {

CouplingSet CouplingSet::zeros(int n) {
    if (n < 0) throw OutOfDomain("coupling order must be non-negative");
    std::vector<std::vector<double>> z(static_cast<size_t>(n) + 1,
                                       std::vector<double>(static_cast<size_t>(n) + 1, 0.0));
    return CouplingSet{n, z, z, z};
}

CouplingSet couplings_from_rotation(const RotationMatrix& r, int n) {
    CouplingSet c = CouplingSet::zeros(n);

    const double r11 = r.entry(1, 1), r12 = r.entry(1, 2), r13 = r.entry(1, 3);
    const double r21 = r.entry(2, 1), r22 = r.entry(2, 2), r23 = r.entry(2, 3);

    const double ci = r21 * r22 * r11 * r13 - r11 * r12 * r21 * r23;
    const double cj = r21 * r22 * r12 * r13 - r11 * r12 * r22 * r23;
    const double bi = r21 * r22 * (r11 * r11 - r13 * r13) - r11 * r12 * (r21 * r21 - r23 * r23);
    const double bj = r21 * r22 * (r12 * r12 - r13 * r13) - r11 * r12 * (r22 * r22 - r23 * r23);
    const double bn = r21 * r22 * r13 * r13 - r11 * r12 * r23 * r23;

    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n - j; ++i) {
            c.B[j][i] = bi * i + bj * j + bn * n;
            if (i > 0) c.I[j][i] = ci * std::sqrt(static_cast<double>(i) * (n - i - j + 1));
            if (j > 0) c.J[j][i] = cj * std::sqrt(static_cast<double>(j) * (n - i - j + 1));
        }
    return c;
}

HamiltonianMatrix assemble(const CouplingSet& c) {
    TriangularLattice lat(c.n);
    Matrix h(lat.dim(), lat.dim());
    for (int j = 0; j <= c.n; ++j)
        for (int i = 0; i <= c.n - j; ++i) {
            const int a = lat.site_to_index(i, j);
            h(a, a) = c.B[j][i];
            if (i > 0) {
                const int b = lat.site_to_index(i - 1, j);
                h(a, b) = h(b, a) = c.I[j][i];
            }
            if (j > 0) {
                const int b = lat.site_to_index(i, j - 1);
                h(a, b) = h(b, a) = c.J[j][i];
            }
        }
    return HamiltonianMatrix{lat, std::move(h)};
}

int enforce_boundary(CouplingSet& c) {
    const size_t m = static_cast<size_t>(c.n) + 1;
    if (c.I.size() != m || c.J.size() != m || c.B.size() != m)
        throw ShapeMismatch("coupling tables must have N+1 rows");
    for (const auto* tab : {&c.I, &c.J, &c.B})
        for (const auto& row : *tab) {
            if (row.size() != m) throw ShapeMismatch("coupling rows must have N+1 columns");
            for (double v : row)
                if (!std::isfinite(v)) throw NonFinite("coupling table");
        }

    int zeroed = 0;
    for (int j = 0; j <= c.n; ++j)
        for (int i = 0; i <= c.n; ++i) {
            const bool outside = i + j > c.n;
            if ((outside || i == 0) && c.I[j][i] != 0.0) { c.I[j][i] = 0.0; ++zeroed; }
            if ((outside || j == 0) && c.J[j][i] != 0.0) { c.J[j][i] = 0.0; ++zeroed; }
            if (outside && c.B[j][i] != 0.0) { c.B[j][i] = 0.0; ++zeroed; }
        }
    return zeroed;
}

} // namespace trispin
