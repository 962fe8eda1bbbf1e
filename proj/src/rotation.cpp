#include "trispin/rotation.hpp"

#include <cmath>

#include "trispin/errors.hpp"

namespace trispin {

double RotationMatrix::orthogonality_defect() const {
    double worst = 0.0;
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) {
            double dot = 0.0;
            for (int k = 0; k < 3; ++k) dot += e_[k * 3 + s] * e_[k * 3 + t];
            double d = std::fabs(dot - (s == t ? 1.0 : 0.0));
            if (d > worst) worst = d;
        }
    return worst;
}

RotationMatrix RotationMatrix::from_entries(const std::array<double, 9>& entries,
                                            double tol_ortho) {
    for (double v : entries)
        if (!std::isfinite(v)) throw NonFinite("rotation entries");
    if (!(tol_ortho > 0)) throw BadConfig("tol_ortho must be positive");

    const std::array<double, 9>& e = entries;
    double det = e[0] * (e[4] * e[8] - e[5] * e[7])
               - e[1] * (e[3] * e[8] - e[5] * e[6])
               + e[2] * (e[3] * e[7] - e[4] * e[6]);

    RotationMatrix r(entries, det < 0 ? -1 : +1);
    double defect = r.orthogonality_defect();
    if (defect > tol_ortho) throw NotOrthogonal(defect);
    if (std::fabs(std::fabs(det) - 1.0) > tol_ortho) throw NotOrthogonal(std::fabs(std::fabs(det) - 1.0));
    return r;
}

RotationMatrix RotationMatrix::from_euler(double alpha, double beta, double gamma,
                                          bool improper) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma))
        throw NonFinite("euler angles");

    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double cb = std::cos(beta), sb = std::sin(beta);
    const double cg = std::cos(gamma), sg = std::sin(gamma);

    // R = Rz(alpha) Ry(beta) Rz(gamma)
    std::array<double, 9> e = {
        ca * cb * cg - sa * sg, -ca * cb * sg - sa * cg, ca * sb,
        sa * cb * cg + ca * sg, -sa * cb * sg + ca * cg, sa * sb,
        -sb * cg,               sb * sg,                 cb,
    };
    if (improper) {
        // compose with diag(1,1,-1) on the right: negate the third column
        e[2] = -e[2];
        e[5] = -e[5];
        e[8] = -e[8];
    }
    return from_entries(e, 1e-12);
}

RotationMatrix RotationMatrix::paper_example() {
    const double q = std::sqrt(2.0) / 4.0;
    std::array<double, 9> e = {
        0.5 - q,  -0.5 - q,  0.5,
        -0.5 - q, 0.5 - q,   0.5,
        0.5,      0.5,       std::sqrt(2.0) / 2.0,
    };
    return from_entries(e, 1e-14);
}

} // namespace trispin
