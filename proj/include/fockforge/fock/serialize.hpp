#pragma once

#include "json.hpp"

#include "fockforge/fock/operator_matrix.hpp"

namespace fockforge::fock {

using Json = nlohmann::ordered_json;

Json to_json(const FockVector& v, const exact::VarSpec& vars);
Json to_json(const BosonLattice& L);
/// {"shift": s, "blocks": {"<degree>": [[entry, ...], ...]}}
Json to_json(const OperatorMatrix& op);

}  // namespace fockforge::fock
