#include "trispin/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "trispin/errors.hpp"

namespace trispin {

SpectralDecomposition diagonalize(const HamiltonianMatrix& h, double tol_eig,
                                  int max_sweeps) {
    const int n = h.entries.rows();
    Matrix a = h.entries;
    Matrix v = Matrix::identity(n);

    double frob = 0.0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) frob += a(r, c) * a(r, c);
    frob = std::sqrt(frob);
    const double threshold = tol_eig * std::max(frob, 1e-300);

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::fabs(a(p, q)));
        if (off <= threshold) break;

        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::fabs(apq) <= threshold * 1e-2) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0)
                                 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a(r, p), arq = a(r, q);
                        a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
                        a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
                    }
                    const double vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
    }
    if (sweep == max_sweeps) throw NoConvergence(max_sweeps);

    // sort ascending, index order breaking ties
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int x, int y) { return a(x, x) < a(y, y); });

    SpectralDecomposition d;
    d.eigenvalues.resize(static_cast<size_t>(n));
    d.eigenvectors = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        d.eigenvalues[static_cast<size_t>(k)] = a(perm[static_cast<size_t>(k)], perm[static_cast<size_t>(k)]);
        for (int r = 0; r < n; ++r) d.eigenvectors(r, k) = v(r, perm[static_cast<size_t>(k)]);
    }
    return d;
}

std::vector<double> analytic_spectrum(const RotationMatrix& r, int n) {
    TriangularLattice lat(n);
    const double cs = r.entry(2, 1) * r.entry(2, 2);
    const double ct = r.entry(1, 1) * r.entry(1, 2);
    std::vector<double> x(static_cast<size_t>(lat.dim()));
    for (int k = 0; k < lat.dim(); ++k) {
        const Site q = lat.index_to_site(k);
        x[static_cast<size_t>(k)] = cs * q.i - ct * q.j;
    }
    return x;
}

SpectralReport compare(const SpectralDecomposition& d, const KrawtchoukTable& table,
                       const std::vector<double>& spectrum, double cluster_tol) {
    const int dim = table.lattice.dim();
    if (static_cast<int>(d.eigenvalues.size()) != dim
        || static_cast<int>(spectrum.size()) != dim)
        throw DimensionMismatch("spectral comparison requires matching dimensions");

    // sort the analytic labels by eigenvalue, matching the oracle's order
    std::vector<int> perm(static_cast<size_t>(dim));
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
        return spectrum[static_cast<size_t>(x)] < spectrum[static_cast<size_t>(y)];
    });

    SpectralReport rep;
    double scale = 0.0;
    for (double x : spectrum) scale = std::max(scale, std::fabs(x));
    for (int k = 0; k < dim; ++k)
        rep.eigenvalue_deviation =
            std::max(rep.eigenvalue_deviation,
                     std::fabs(d.eigenvalues[static_cast<size_t>(k)]
                               - spectrum[static_cast<size_t>(perm[static_cast<size_t>(k)])]));

    // degenerate clusters from gaps in the sorted analytic spectrum
    const double gap = cluster_tol * std::max(scale, 1e-300);
    int k0 = 0;
    while (k0 < dim) {
        int k1 = k0 + 1;
        while (k1 < dim
               && spectrum[static_cast<size_t>(perm[static_cast<size_t>(k1)])]
                      - spectrum[static_cast<size_t>(perm[static_cast<size_t>(k1 - 1)])] <= gap)
            ++k1;

        // projectors over the cluster, numeric vs analytic rows of M
        Matrix pn(dim, dim), pa(dim, dim);
        for (int k = k0; k < k1; ++k) {
            const int st = perm[static_cast<size_t>(k)];
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c) {
                    pn(r, c) += d.eigenvectors(r, k) * d.eigenvectors(c, k);
                    pa(r, c) += table.transition(st, r) * table.transition(st, c);
                }
        }
        rep.projector_deviation = std::max(rep.projector_deviation, max_abs_diff(pn, pa));
        ++rep.clusters;
        k0 = k1;
    }
    return rep;
}

} // namespace trispin
