#include "trispin/transfer.hpp"

#include <cmath>

#include "trispin/errors.hpp"

namespace trispin {

namespace {

// z^e for small integer e >= 0, with z^0 = 1 even for z = 0.
Complex cpow_int(Complex z, int e) {
    Complex acc(1.0, 0.0);
    for (int k = 0; k < e; ++k) acc *= z;
    return acc;
}

double sqrt_multinomial(int n, int i, int j) {
    return std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(i + 1.0)
                           - std::lgamma(j + 1.0) - std::lgamma(n - i - j + 1.0)));
}

} // namespace

Complex amplitude_spectral(const KrawtchoukTable& table, const std::vector<double>& spectrum,
                           Site from, Site to, double time) {
    const TriangularLattice& lat = table.lattice;
    const int a = lat.site_to_index(from.i, from.j);
    const int b = lat.site_to_index(to.i, to.j);
    if (static_cast<int>(spectrum.size()) != lat.dim())
        throw DimensionMismatch("spectrum size does not match table");

    Complex f(0.0, 0.0);
    for (int st = 0; st < lat.dim(); ++st) {
        const double phase = -time * spectrum[static_cast<size_t>(st)];
        f += table.transition(st, a) * table.transition(st, b)
             * Complex(std::cos(phase), std::sin(phase));
    }
    return f;
}

Complex amplitude_closed_form(const RotationMatrix& r, int n, Site to, double time) {
    TriangularLattice lat(n);
    if (!lat.contains(to.i, to.j))
        throw OutOfDomain("target site outside triangle");

    const double cz1 = -r.entry(2, 1) * r.entry(2, 2) * time;
    const double cz2 = r.entry(1, 1) * r.entry(1, 2) * time;
    const Complex z1(std::cos(cz1), std::sin(cz1));
    const Complex z2(std::cos(cz2), std::sin(cz2));

    const Complex f1 = r.entry(1, 1) * r.entry(1, 3) * z1
                     + r.entry(2, 1) * r.entry(2, 3) * z2
                     + r.entry(3, 1) * r.entry(3, 3);
    const Complex f2 = r.entry(1, 2) * r.entry(1, 3) * z1
                     + r.entry(2, 2) * r.entry(2, 3) * z2
                     + r.entry(3, 2) * r.entry(3, 3);
    const Complex f3 = r.entry(1, 3) * r.entry(1, 3) * z1
                     + r.entry(2, 3) * r.entry(2, 3) * z2
                     + r.entry(3, 3) * r.entry(3, 3);

    return sqrt_multinomial(n, to.i, to.j)
           * cpow_int(f1, to.i) * cpow_int(f2, to.j) * cpow_int(f3, n - to.i - to.j);
}

Complex generating_function(const RotationMatrix& r, int n, Site to,
                            Complex a1, Complex a2, Complex a3) {
    TriangularLattice lat(n);
    if (!lat.contains(to.i, to.j))
        throw OutOfDomain("target site outside triangle");

    Complex b[3];
    for (int p = 0; p < 3; ++p)
        b[p] = r.entry(1, p + 1) * a1 + r.entry(2, p + 1) * a2 + r.entry(3, p + 1) * a3;
    return sqrt_multinomial(n, to.i, to.j)
           * cpow_int(b[0], to.i) * cpow_int(b[1], to.j) * cpow_int(b[2], n - to.i - to.j);
}

PstReport pst_check(const RotationMatrix& r, int n, double tol) {
    PstReport rep;
    const double r1112 = r.entry(1, 1) * r.entry(1, 2);
    rep.cond_a_defect = std::fabs(r.entry(2, 1) * r.entry(2, 2) - r1112);
    rep.cond_b_defect = std::fabs(r.entry(3, 3) - std::sqrt(2.0) / 2.0);
    rep.pst_family = rep.cond_a_defect <= tol && rep.cond_b_defect <= tol;
    if (!rep.pst_family) return rep;

    if (r1112 == 0.0)
        throw DegenerateRotation("R11*R12 = 0: transfer time undefined");
    rep.transfer_time = M_PI / r1112;
    // under condition A the spectrum is (s-t)*R11*R12, hence commensurate
    rep.period = 2.0 * M_PI / std::fabs(r1112);

    const double sqrt2 = std::sqrt(2.0);
    for (int i = n; i >= 0; --i) {
        rep.hypotenuse.push_back(Site{i, n - i});
        rep.predicted.push_back(sqrt_multinomial(n, i, n - i)
                                * cpow_int(Complex(sqrt2 * r.entry(3, 1), 0.0), i)
                                * cpow_int(Complex(sqrt2 * r.entry(3, 2), 0.0), n - i));
    }

    const KrawtchoukTable table = polynomial_table(r, n);
    const std::vector<double> spectrum = [&] {
        TriangularLattice lat(n);
        std::vector<double> x(static_cast<size_t>(lat.dim()));
        for (int k = 0; k < lat.dim(); ++k) {
            const Site q = lat.index_to_site(k);
            x[static_cast<size_t>(k)] = r.entry(2, 1) * r.entry(2, 2) * q.i - r1112 * q.j;
        }
        return x;
    }();

    for (const Site& s : rep.hypotenuse)
        rep.probabilities.push_back(std::norm(
            amplitude_spectral(table, spectrum, Site{0, 0}, s, rep.transfer_time)));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i + j < n; ++i) {
            const double mag = std::abs(amplitude_spectral(table, spectrum, Site{0, 0},
                                                           Site{i, j}, rep.transfer_time));
            rep.max_leakage = std::max(rep.max_leakage, mag);
        }
    return rep;
}

AmplitudeSeries fidelity_series(const KrawtchoukTable& table, const std::vector<double>& spectrum,
                                Site from, Site to, double t_min, double t_max, int steps) {
    if (steps < 2) throw BadRange("fidelity_series requires at least 2 steps");
    if (!(t_min < t_max)) throw BadRange("fidelity_series requires t_min < t_max");

    AmplitudeSeries series;
    series.from = from;
    series.to = to;
    for (int k = 0; k < steps; ++k) {
        const double t = t_min + (t_max - t_min) * k / (steps - 1);
        const Complex f = amplitude_spectral(table, spectrum, from, to, t);
        series.times.push_back(t);
        series.amplitudes.push_back(f);
        series.fidelities.push_back(std::norm(f));
    }
    return series;
}

} // namespace trispin
