#pragma once

#include <stdexcept>
#include <string>

namespace trispin {

// All library errors carry a stable machine-readable code string in
// addition to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct NotOrthogonal : Error {
    double defect;
    explicit NotOrthogonal(double d)
        : Error("NotOrthogonal",
                "matrix is not orthogonal, defect = " + std::to_string(d)),
          defect(d) {}
};

struct NonFinite : Error {
    explicit NonFinite(const std::string& what)
        : Error("NonFinite", "non-finite value in " + what) {}
};

struct OutOfDomain : Error {
    explicit OutOfDomain(const std::string& what)
        : Error("OutOfDomain", what) {}
};

struct DegenerateRotation : Error {
    explicit DegenerateRotation(const std::string& what)
        : Error("DegenerateRotation", what) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what)
        : Error("ShapeMismatch", what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what)
        : Error("DimensionMismatch", what) {}
};

struct NoConvergence : Error {
    int sweeps;
    explicit NoConvergence(int n)
        : Error("NoConvergence",
                "Jacobi failed to converge after " + std::to_string(n) + " sweeps"),
          sweeps(n) {}
};

struct BadRange : Error {
    explicit BadRange(const std::string& what)
        : Error("BadRange", what) {}
};

struct BadConfig : Error {
    explicit BadConfig(const std::string& what)
        : Error("BadConfig", what) {}
};

} // namespace trispin
