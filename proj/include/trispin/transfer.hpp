#pragma once

#include <complex>
#include <vector>

#include "trispin/krawtchouk.hpp"
#include "trispin/lattice.hpp"
#include "trispin/rotation.hpp"

namespace trispin {

using Complex = std::complex<double>;

struct AmplitudeSeries {
    Site from, to;
    std::vector<double> times;
    std::vector<Complex> amplitudes;
    std::vector<double> fidelities;  // |amplitude|^2
};

// f_{from,to}(T) = sum_{s+t<=N} M_from(s,t) M_to(s,t) exp(-i T x_{s,t}).
Complex amplitude_spectral(const KrawtchoukTable& table, const std::vector<double>& spectrum,
                           Site from, Site to, double time);

// Closed form for source (0,0):
//   sqrt(multinomial(N;i,j)) * (R11 R13 z1 + R21 R23 z2 + R31 R33)^i
//     * (R12 R13 z1 + R22 R23 z2 + R32 R33)^j
//     * (R13^2 z1 + R23^2 z2 + R33^2)^{N-i-j},
// z1 = exp(-i R21 R22 T), z2 = exp(i R11 R12 T).
Complex amplitude_closed_form(const RotationMatrix& r, int n, Site to, double time);

// G_{i,j;N}(a1,a2,a3) = sqrt(multinomial(N;i,j)) b1^i b2^j b3^{N-i-j}
// with b_p = sum_l R_lp a_l.
Complex generating_function(const RotationMatrix& r, int n, Site to,
                            Complex a1, Complex a2, Complex a3);

struct PstReport {
    double cond_a_defect = 0.0;   // |R21 R22 - R11 R12|
    double cond_b_defect = 0.0;   // |R33 - sqrt(2)/2|
    bool pst_family = false;
    double transfer_time = 0.0;   // pi / (R11 R12), valid when pst_family
    double period = 0.0;          // equivalent positive time offset, 0 if unknown
    std::vector<Site> hypotenuse;
    std::vector<Complex> predicted;  // sqrt(multinomial) (sqrt2 R31)^i (sqrt2 R32)^j
    std::vector<double> probabilities;  // |f|^2 at the hypotenuse, spectral path
    double max_leakage = 0.0;     // max_{i+j<N} |f_{(0,0),(i,j)}(T*)|
};

PstReport pst_check(const RotationMatrix& r, int n, double tol = 1e-12);

AmplitudeSeries fidelity_series(const KrawtchoukTable& table, const std::vector<double>& spectrum,
                                Site from, Site to, double t_min, double t_max, int steps);

} // namespace trispin
