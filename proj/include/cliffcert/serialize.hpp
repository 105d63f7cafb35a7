#pragma once

#include <string>

#include <json.hpp>

#include "cliffcert/clifford.hpp"

namespace cliffcert {

// Exact values travel as strings ("num/den" per coefficient) so that a
// round trip through JSON loses nothing.

nlohmann::ordered_json cyc_to_json(const CycCtx& ctx, const Cyc& z);
Cyc cyc_from_json(const CycCtx& ctx, const nlohmann::json& j);

nlohmann::ordered_json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const CycCtx& ctx, const nlohmann::json& j);

nlohmann::ordered_json group_to_json(const Group& g);

nlohmann::ordered_json report_to_json(const CliffordCodeReport& report);
bool validate_report_json(const nlohmann::json& j, std::string* error = nullptr);

std::string report_to_text(const CliffordCodeReport& report);

// Bases, projectors and the qupit/qubit index labels of both code spaces,
// ready for downstream consumption.
nlohmann::ordered_json export_code_data(Workspace& ws);

}  // namespace cliffcert
