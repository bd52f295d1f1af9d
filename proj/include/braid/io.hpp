#pragma once

#include <string>

#include <json.hpp>

#include "braid/gates.hpp"
#include "braid/state.hpp"

namespace braid {

// Matrix interchange: {"rows":R,"cols":C,"entries":[[re,im],...]} row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// State interchange: {"D":..,"n":..,"amplitudes":[[re,im],...]}.
nlohmann::json state_to_json(const QuditRegisterState& s);
QuditRegisterState state_from_json(const nlohmann::json& j);

// CSV alternative with columns index,digits,re,im,prob.
std::string state_to_csv(const QuditRegisterState& s);

// Gate description used by the CLI and the DSL backend.
nlohmann::json gate_to_json(const GateParams& params, const std::vector<Involution>& lambdas);
std::pair<GateParams, std::vector<Involution>> gate_from_json(const nlohmann::json& j);

QuditRegisterState load_state_file(const std::string& path);
void save_state_file(const QuditRegisterState& s, const std::string& path);

} // namespace braid
