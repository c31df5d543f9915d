// JSON/CSV serialization of report types, shared by the CLI and bindings.
// All floating-point text output uses 17 significant digits, '.' decimal
// separator, locale-independent; infinity round-trips as the string "inf".
#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "symcap/billiard.hpp"
#include "symcap/capacity.hpp"
#include "symcap/embed.hpp"
#include "symcap/products.hpp"
#include "symcap/region.hpp"

namespace symcap {

/// Shortest-width "%.17g" rendering (deterministic, round-trip exact).
std::string fmt17(double v);

/// Extended-real parsing/printing: a finite JSON number, or "inf".
double extended_real_from_json(const nlohmann::json& j, const char* what);
nlohmann::json extended_real_to_json(double v);

const char* to_string(CapacityMethod m);
const char* to_string(InclusionStatus s);
const char* to_string(TheoremCase c);
const char* to_string(EmbedAnswer a);
const char* to_string(Rigidity r);
const char* to_string(Side s);

nlohmann::json to_json(const CapacityValue& v);
nlohmann::json to_json(const CapacityReport& r);
nlohmann::json to_json(const CapacityObstruction& o);
nlohmann::json to_json(const InclusionResult& r);
nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const EmbedVerdict& v);
nlohmann::json to_json(const NonrigidityWitnesses& w);
nlohmann::json to_json(const ActionProfile& p);
nlohmann::json rigidity_table_json();

/// CSV renderings (header line + rows, '\n' separators).
std::string rigidity_table_csv();
std::string action_profiles_csv(const std::vector<ActionProfile>& profiles);
std::string bidisk_curve_csv(int samples);

}  // namespace symcap
