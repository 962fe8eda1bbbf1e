#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "trispin/errors.hpp"
#include "trispin/spectral.hpp"
#include "trispin/transfer.hpp"

using namespace trispin;

namespace {

const double kPi = 3.14159265358979323846;

double binom(int n, int k) {
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

} // namespace

TEST_CASE("amplitudes at T=0 are Kronecker deltas") {
    auto r = RotationMatrix::paper_example();
    const int n = 4;
    auto table = polynomial_table(r, n);
    auto x = analytic_spectrum(r, n);
    TriangularLattice lat(n);
    for (int a = 0; a < lat.dim(); ++a)
        for (int b = 0; b < lat.dim(); ++b) {
            const Complex f = amplitude_spectral(table, x, lat.index_to_site(a),
                                                 lat.index_to_site(b), 0.0);
            CHECK(std::abs(f - Complex(a == b ? 1.0 : 0.0, 0.0)) < 1e-12);
        }
    for (int b = 0; b < lat.dim(); ++b) {
        const Site to = lat.index_to_site(b);
        const Complex f = amplitude_closed_form(r, n, to, 0.0);
        const bool origin = to.i == 0 && to.j == 0;
        CHECK(std::abs(f - Complex(origin ? 1.0 : 0.0, 0.0)) < 1e-12);
    }
}

TEST_CASE("spectral and closed-form paths agree from the origin") {
    auto r = RotationMatrix::paper_example();
    auto table = polynomial_table(r, 1);
    auto x = analytic_spectrum(r, 1);
    for (double t : {0.3, -2.0, 17.5}) {
        const Complex fs = amplitude_spectral(table, x, {0, 0}, {1, 0}, t);
        const Complex fc = amplitude_closed_form(r, 1, {1, 0}, t);
        CHECK(std::abs(fs - fc) < 1e-12);
    }

    std::mt19937 rng(555);
    std::uniform_int_distribution<int> order(1, 10);
    std::uniform_real_distribution<double> time(-50.0, 50.0);
    for (int rep = 0; rep < 100; ++rep) {
        auto rr = testing::random_rotation(rng, 1e-2);
        const int n = order(rng);
        auto tt = polynomial_table(rr, n);
        auto xx = analytic_spectrum(rr, n);
        const double t = time(rng);
        TriangularLattice lat(n);
        std::uniform_int_distribution<int> pick(0, lat.dim() - 1);
        const Site to = lat.index_to_site(pick(rng));
        CHECK(std::abs(amplitude_spectral(tt, xx, {0, 0}, to, t)
                       - amplitude_closed_form(rr, n, to, t))
              < 1e-10);
    }

    CHECK_THROWS_AS(amplitude_closed_form(r, 1, {5, 5}, 1.0), OutOfDomain);
    CHECK_THROWS_AS(amplitude_spectral(table, x, {0, 0}, {5, 5}, 1.0), OutOfDomain);
}

TEST_CASE("unitarity and time reversal") {
    std::mt19937 rng(808);
    std::uniform_real_distribution<double> time(-30.0, 30.0);
    auto r = testing::random_rotation(rng, 1e-2);
    const int n = 6;
    auto table = polynomial_table(r, n);
    auto x = analytic_spectrum(r, n);
    TriangularLattice lat(n);
    for (int rep = 0; rep < 20; ++rep) {
        const double t = time(rng);
        double prob = 0.0;
        for (int b = 0; b < lat.dim(); ++b) {
            const Complex f = amplitude_spectral(table, x, {0, 0}, lat.index_to_site(b), t);
            prob += std::norm(f);
            CHECK(std::abs(amplitude_spectral(table, x, {0, 0}, lat.index_to_site(b), -t)
                           - std::conj(f))
                  < 1e-12);
        }
        CHECK(std::fabs(prob - 1.0) < 1e-10);
    }
}

TEST_CASE("generating function closed form") {
    auto r = RotationMatrix::paper_example();
    const int n = 5;
    auto table = polynomial_table(r, n);
    TriangularLattice lat(n);

    // alpha = third column of R makes beta = (0,0,1)
    const Complex a1(r.entry(1, 3), 0), a2(r.entry(2, 3), 0), a3(r.entry(3, 3), 0);
    for (int b = 0; b < lat.dim(); ++b) {
        const Site to = lat.index_to_site(b);
        const Complex g = generating_function(r, n, to, a1, a2, a3);
        const bool origin = to.i == 0 && to.j == 0;
        CHECK(std::abs(g - Complex(origin ? 1.0 : 0.0, 0.0)) < 1e-12);
    }

    // defining sum over matrix elements vs closed form, random complex alpha
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int rep = 0; rep < 25; ++rep) {
        auto rr = testing::random_rotation(rng, 1e-2);
        const int m = 1 + rep % 8;
        auto tt = polynomial_table(rr, m);
        TriangularLattice ml(m);
        const Complex b1(unit(rng), unit(rng)), b2(unit(rng), unit(rng)), b3(unit(rng), unit(rng));
        for (int idx = 0; idx < ml.dim(); ++idx) {
            const Site to = ml.index_to_site(idx);
            Complex sum(0, 0);
            for (int st = 0; st < ml.dim(); ++st) {
                const Site q = ml.index_to_site(st);
                const double c = std::exp(0.5 * (std::lgamma(m + 1.0) - std::lgamma(q.i + 1.0)
                                                 - std::lgamma(q.j + 1.0)
                                                 - std::lgamma(m - q.i - q.j + 1.0)));
                Complex mono(1, 0);
                for (int k = 0; k < q.i; ++k) mono *= b1;
                for (int k = 0; k < q.j; ++k) mono *= b2;
                for (int k = 0; k < m - q.i - q.j; ++k) mono *= b3;
                sum += c * tt.m_at(q.i, q.j, to.i, to.j) * mono;
            }
            CHECK(std::abs(sum - generating_function(rr, m, to, b1, b2, b3)) < 1e-10);
        }
    }

    // the amplitude is the generating function at alpha = (R13 z1, R23 z2, R33)
    auto x = analytic_spectrum(r, n);
    for (double t : {0.7, -4.0}) {
        const Complex z1 = std::exp(Complex(0, -r.entry(2, 1) * r.entry(2, 2) * t));
        const Complex z2 = std::exp(Complex(0, r.entry(1, 1) * r.entry(1, 2) * t));
        for (int b = 0; b < lat.dim(); ++b) {
            const Site to = lat.index_to_site(b);
            CHECK(std::abs(generating_function(r, n, to, r.entry(1, 3) * z1, r.entry(2, 3) * z2,
                                               Complex(r.entry(3, 3), 0))
                           - amplitude_spectral(table, x, {0, 0}, to, t))
                  < 1e-12);
        }
    }
}

TEST_CASE("perfect transfer to the hypotenuse") {
    auto r = RotationMatrix::paper_example();
    auto rep = pst_check(r, 6);
    CHECK(rep.cond_a_defect == 0.0);
    CHECK(rep.cond_b_defect < 1e-16);
    CHECK(rep.pst_family);
    CHECK(rep.transfer_time == doctest::Approx(-8.0 * kPi).epsilon(1e-14));
    CHECK(rep.period == doctest::Approx(16.0 * kPi).epsilon(1e-14));
    CHECK(rep.max_leakage < 1e-10);

    auto rep2 = pst_check(r, 2);
    REQUIRE(rep2.probabilities.size() == 3);
    // hypotenuse sites in order (2,0),(1,1),(0,2)
    CHECK(rep2.hypotenuse[0] == Site{2, 0});
    CHECK(rep2.probabilities[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(rep2.probabilities[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rep2.probabilities[2] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(rep2.probabilities[0] + rep2.probabilities[1] + rep2.probabilities[2]
          == doctest::Approx(1.0).epsilon(1e-12));

    auto id = RotationMatrix::from_entries({1, 0, 0, 0, 1, 0, 0, 0, 1}, 1e-10);
    auto not_pst = pst_check(id, 4);
    CHECK_FALSE(not_pst.pst_family);
    CHECK(not_pst.cond_b_defect == doctest::Approx(1.0 - std::sqrt(2.0) / 2.0));
}

TEST_CASE("fidelity series") {
    auto r = RotationMatrix::paper_example();
    const int n = 4;
    auto table = polynomial_table(r, n);
    auto x = analytic_spectrum(r, n);

    auto self = fidelity_series(table, x, {0, 0}, {0, 0}, -1.0, 1.0, 5);
    REQUIRE(self.times.size() == 5);
    CHECK(self.times[2] == doctest::Approx(0.0));
    CHECK(self.fidelities[2] == doctest::Approx(1.0).epsilon(1e-12));
    for (double f : self.fidelities) {
        CHECK(f >= 0.0);
        CHECK(f <= 1.0 + 1e-12);
    }

    // window hitting T* = -8*pi: site (4,0) carries binom(4,0)/2^4 = 1/16
    auto series = fidelity_series(table, x, {0, 0}, {4, 0}, -8.0 * kPi - 1.0, -8.0 * kPi + 1.0, 3);
    CHECK(series.fidelities[1] == doctest::Approx(binom(4, 0) / 16.0).epsilon(1e-10));

    CHECK_THROWS_AS(fidelity_series(table, x, {0, 0}, {1, 0}, 0.0, 1.0, 1), BadRange);
    CHECK_THROWS_AS(fidelity_series(table, x, {0, 0}, {1, 0}, 1.0, 0.0, 4), BadRange);
    CHECK_THROWS_AS(fidelity_series(table, x, {9, 9}, {1, 0}, 0.0, 1.0, 4), OutOfDomain);
}

TEST_CASE("commensurate spectrum makes the evolution 16*pi periodic") {
    auto r = RotationMatrix::paper_example();
    const int n = 5;
    auto table = polynomial_table(r, n);
    auto x = analytic_spectrum(r, n);
    TriangularLattice lat(n);
    for (double t : {0.0, 1.3, -7.7}) {
        for (int b = 0; b < lat.dim(); ++b) {
            const Site to = lat.index_to_site(b);
            CHECK(std::abs(amplitude_spectral(table, x, {0, 0}, to, t + 16.0 * kPi)
                           - amplitude_spectral(table, x, {0, 0}, to, t))
                  < 1e-10);
        }
    }
}
