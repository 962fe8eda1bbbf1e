#include "trispin/io.hpp"

#include <array>

#include "trispin/errors.hpp"

namespace trispin {

RotationMatrix rotation_from_json(const nlohmann::json& j, double tol_ortho) {
    if (j.contains("rotation")) {
        const auto& arr = j.at("rotation");
        if (!arr.is_array() || arr.size() != 9)
            throw BadConfig("\"rotation\" must be an array of 9 numbers (row-major)");
        std::array<double, 9> e{};
        for (size_t k = 0; k < 9; ++k) e[k] = arr[k].get<double>();
        return RotationMatrix::from_entries(e, tol_ortho);
    }
    if (j.contains("euler")) {
        const auto& arr = j.at("euler");
        if (!arr.is_array() || arr.size() != 3)
            throw BadConfig("\"euler\" must be an array of 3 angles (radians, z-y-z)");
        const bool improper = j.value("improper", false);
        return RotationMatrix::from_euler(arr[0].get<double>(), arr[1].get<double>(),
                                          arr[2].get<double>(), improper);
    }
    throw BadConfig("rotation config needs a \"rotation\" or \"euler\" key");
}

namespace {

std::vector<std::vector<double>> read_table(const nlohmann::json& j, const char* key, int n) {
    const auto& arr = j.at(key);
    const size_t m = static_cast<size_t>(n) + 1;
    if (!arr.is_array() || arr.size() != m)
        throw ShapeMismatch(std::string(key) + " must have N+1 rows");
    std::vector<std::vector<double>> out(m);
    for (size_t r = 0; r < m; ++r) {
        if (!arr[r].is_array() || arr[r].size() != m)
            throw ShapeMismatch(std::string(key) + " rows must have N+1 columns");
        out[r].reserve(m);
        for (size_t c = 0; c < m; ++c) out[r].push_back(arr[r][c].get<double>());
    }
    return out;
}

} // namespace

CouplingSet couplings_from_json(const nlohmann::json& j, std::vector<std::string>* warnings) {
    const int n = j.at("N").get<int>();
    if (n < 0) throw BadConfig("N must be non-negative");
    CouplingSet c{n, read_table(j, "I", n), read_table(j, "J", n), read_table(j, "B", n)};
    const int zeroed = enforce_boundary(c);
    if (zeroed > 0 && warnings != nullptr)
        warnings->push_back("zeroed " + std::to_string(zeroed)
                            + " coupling value(s) outside the triangle or on the boundary");
    return c;
}

nlohmann::json couplings_to_json(const CouplingSet& c) {
    return nlohmann::json{{"N", c.n}, {"I", c.I}, {"J", c.J}, {"B", c.B}};
}

} // namespace trispin
