#include "trispin/krawtchouk.hpp"

#include <cmath>

#include "trispin/errors.hpp"

namespace trispin {

namespace {

constexpr double kDegenerateEntry = 1e-12;

// log(n!) via lgamma
double log_fact(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// base^e for integer e >= 0 with 0^0 = 1, sign carried exactly.
double signed_pow(double base, int e) {
    if (e == 0) return 1.0;
    if (base == 0.0) return 0.0;
    double sign = (base < 0 && (e % 2 != 0)) ? -1.0 : 1.0;
    return sign * std::exp(e * std::log(std::fabs(base)));
}

} // namespace

double weight(const RotationMatrix& r, int n, int s, int t) {
    if (n < 0 || s < 0 || t < 0 || s + t > n)
        throw OutOfDomain("weight: (s,t) outside triangle");
    const int u = n - s - t;
    const double log_multi = 0.5 * (log_fact(n) - log_fact(s) - log_fact(t) - log_fact(u));
    const double r13 = r.entry(1, 3), r23 = r.entry(2, 3), r33 = r.entry(3, 3);
    // fold the multinomial square root into whichever factors are nonzero
    double value = signed_pow(r13, s) * signed_pow(r23, t) * signed_pow(r33, u);
    return value * std::exp(log_multi);
}

KrawtchoukTable polynomial_table(const RotationMatrix& r, int n) {
    if (n < 0) throw OutOfDomain("polynomial_table: order must be non-negative");
    const double r13 = r.entry(1, 3), r23 = r.entry(2, 3), r33 = r.entry(3, 3);
    if (std::fabs(r13) < kDegenerateEntry || std::fabs(r23) < kDegenerateEntry
        || std::fabs(r33) < kDegenerateEntry)
        throw DegenerateRotation("raising relations require R13, R23, R33 nonzero");

    const double a1 = r.entry(1, 1) / r13, b1 = r.entry(2, 1) / r23, c1 = r.entry(3, 1) / r33;
    const double a2 = r.entry(1, 2) / r13, b2 = r.entry(2, 2) / r23, c2 = r.entry(3, 2) / r33;

    // Sweep orders 0..n, keeping only the previous and current order.
    // prev(index(i,j), index(s,t)) holds P at order m-1.
    Matrix prev(1, 1, 1.0);
    for (int m = 1; m <= n; ++m) {
        TriangularLattice cur_lat(m), prev_lat(m - 1);
        Matrix cur(cur_lat.dim(), cur_lat.dim());

        // value of P_{i,j}(s,t; m-1), 0 outside the smaller triangle
        auto pm1 = [&](int i, int j, int s, int t) -> double {
            if (s < 0 || t < 0 || s + t > m - 1) return 0.0;
            return prev(prev_lat.site_to_index(i, j), prev_lat.site_to_index(s, t));
        };

        for (int st = 0; st < cur_lat.dim(); ++st) {
            const Site q = cur_lat.index_to_site(st);
            const int s = q.i, t = q.j;
            for (int ij = 0; ij < cur_lat.dim(); ++ij) {
                const Site p = cur_lat.index_to_site(ij);
                const int i = p.i, j = p.j;
                double v;
                if (i == 0 && j == 0) {
                    v = 1.0;
                } else if (i > 0) {
                    // raise in i from order m-1
                    v = (a1 * s * pm1(i - 1, j, s - 1, t)
                         + b1 * t * pm1(i - 1, j, s, t - 1)
                         + c1 * (m - s - t) * pm1(i - 1, j, s, t))
                        / std::sqrt(static_cast<double>(m) * i);
                } else {
                    // i == 0, j > 0: raise in j
                    v = (a2 * s * pm1(0, j - 1, s - 1, t)
                         + b2 * t * pm1(0, j - 1, s, t - 1)
                         + c2 * (m - s - t) * pm1(0, j - 1, s, t))
                        / std::sqrt(static_cast<double>(m) * j);
                }
                cur(ij, st) = v;
            }
        }
        prev = std::move(cur);
    }

    KrawtchoukTable table{n, r, TriangularLattice(n), {}, std::move(prev), {}};
    const int dim = table.lattice.dim();
    table.weights.resize(static_cast<size_t>(dim));
    for (int st = 0; st < dim; ++st) {
        const Site q = table.lattice.index_to_site(st);
        table.weights[static_cast<size_t>(st)] = weight(r, n, q.i, q.j);
    }
    table.transition = Matrix(dim, dim);
    for (int st = 0; st < dim; ++st)
        for (int ij = 0; ij < dim; ++ij)
            table.transition(st, ij) = table.weights[static_cast<size_t>(st)] * table.poly(ij, st);
    return table;
}

double verify_orthogonality(const KrawtchoukTable& table) {
    const int dim = table.lattice.dim();
    double worst = 0.0;
    for (int a = 0; a < dim; ++a)
        for (int b = a; b < dim; ++b) {
            double sum = 0.0;
            for (int st = 0; st < dim; ++st) {
                const double w2 = table.weights[static_cast<size_t>(st)]
                                * table.weights[static_cast<size_t>(st)];
                sum += w2 * table.poly(a, st) * table.poly(b, st);
            }
            const double d = std::fabs(sum - (a == b ? 1.0 : 0.0));
            if (d > worst) worst = d;
        }
    return worst;
}

std::pair<double, double> verify_recurrences(const KrawtchoukTable& table) {
    const int n = table.n;
    const TriangularLattice& lat = table.lattice;
    const RotationMatrix& r = table.rotation;

    auto P = [&](int i, int j, int s, int t) -> double {
        if (i < 0 || j < 0 || i + j > n) return 0.0;
        return table.poly(lat.site_to_index(i, j), lat.site_to_index(s, t));
    };
    auto alpha = [n](int i, int j) { return std::sqrt(static_cast<double>(i) * (n - i - j + 1)); };
    auto beta = [n](int i, int j) { return std::sqrt(static_cast<double>(j) * (n - i - j + 1)); };
    auto gamma = [](int i, int j) { return std::sqrt(static_cast<double>(i) * j); };

    double res1 = 0.0, res2 = 0.0;
    for (int ij = 0; ij < lat.dim(); ++ij) {
        const Site p = lat.index_to_site(ij);
        const int i = p.i, j = p.j;
        for (int st = 0; st < lat.dim(); ++st) {
            const Site q = lat.index_to_site(st);
            const int s = q.i, t = q.j;
            for (int which = 0; which < 2; ++which) {
                // which==0: the s-relation uses row 1 of R; which==1: row 2 and t.
                const int row = which + 1;
                const double ra = r.entry(row, 1), rb = r.entry(row, 2), rc = r.entry(row, 3);
                const double diag = ra * ra * i + rb * rb * j + rc * rc * (n - i - j);
                const double rhs =
                    diag * P(i, j, s, t)
                    + ra * rc * (alpha(i + 1, j) * P(i + 1, j, s, t) + alpha(i, j) * P(i - 1, j, s, t))
                    + rb * rc * (beta(i, j + 1) * P(i, j + 1, s, t) + beta(i, j) * P(i, j - 1, s, t))
                    + ra * rb * (gamma(i, j + 1) * P(i - 1, j + 1, s, t)
                                 + gamma(i + 1, j) * P(i + 1, j - 1, s, t));
                const double lhs = (which == 0 ? s : t) * P(i, j, s, t);
                const double d = std::fabs(lhs - rhs);
                (which == 0 ? res1 : res2) = std::max(which == 0 ? res1 : res2, d);
            }
        }
    }
    return {res1, res2};
}

} // namespace trispin
