#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "trispin/hamiltonian.hpp"
#include "trispin/rotation.hpp"

namespace trispin {

// Accepts {"rotation": [9 numbers row-major]} or
// {"euler": [a,b,c], "improper": bool}.
RotationMatrix rotation_from_json(const nlohmann::json& j,
                                  double tol_ortho = RotationMatrix::kDefaultTolOrtho);

// Couplings format: {"N": n, "I": [[...]], "J": [[...]], "B": [[...]]},
// rectangular (N+1)x(N+1) tables with rows indexed by j and columns by i.
// Values violating the boundary convention are zeroed; a warning line is
// appended to `warnings` for each table that needed fixing.
CouplingSet couplings_from_json(const nlohmann::json& j,
                                std::vector<std::string>* warnings = nullptr);

nlohmann::json couplings_to_json(const CouplingSet& c);

} // namespace trispin
