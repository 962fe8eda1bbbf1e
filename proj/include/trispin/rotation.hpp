#pragma once

#include <array>

namespace trispin {

// Real 3x3 orthogonal matrix. Improper matrices (det = -1) are allowed;
// the sign of the determinant is cached at construction.
class RotationMatrix {
public:
    static constexpr double kDefaultTolOrtho = 1e-10;

    // Validates orthogonality of `entries` (row-major) to tol_ortho.
    // Throws NotOrthogonal or NonFinite.
    static RotationMatrix from_entries(const std::array<double, 9>& entries,
                                       double tol_ortho = kDefaultTolOrtho);

    // Proper rotation from z-y-z Euler angles (radians):
    //   R = Rz(alpha) * Ry(beta) * Rz(gamma),
    // composed with diag(1,1,-1) on the right when `improper` is set.
    static RotationMatrix from_euler(double alpha, double beta, double gamma,
                                     bool improper = false);

    // The worked example instance: an improper matrix with
    // R13 = R23 = 1/2, R33 = sqrt(2)/2 and R11*R12 = R21*R22 = -1/8.
    static RotationMatrix paper_example();

    // 1-based entry access matching the usual R_{kl} notation.
    double entry(int k, int l) const { return e_[(k - 1) * 3 + (l - 1)]; }
    const std::array<double, 9>& entries() const { return e_; }
    int det_sign() const { return det_sign_; }

    // max_{s,t} |sum_k R_ks R_kt - delta_st|
    double orthogonality_defect() const;

private:
    RotationMatrix(const std::array<double, 9>& e, int det_sign)
        : e_(e), det_sign_(det_sign) {}

    std::array<double, 9> e_{};
    int det_sign_ = 1;
};

} // namespace trispin
