#pragma once

// JSON scenario configuration: parsing, strict validation with field-level
// messages, default filling, and deterministic serialization.

#include <stdexcept>
#include <string>
#include <vector>

#include "hatom/hybrid.hpp"
#include "hatom/packet.hpp"
#include "hatom/twobody.hpp"
#include "hatom/units.hpp"

namespace hatom::io {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ExperimentKind { quantum_reference, hybrid, oracle, compare };

std::string to_string(ExperimentKind kind);
std::string to_string(ForceLaw law);

struct ScenarioConfig {
    ExperimentKind kind = ExperimentKind::quantum_reference;
    double mass_ratio = kPhysicalMassRatio;
    PacketSpec packet{};                           // 3-d kinds
    ForceLaw force_law = ForceLaw::adiabatic_gradient;
    Vec3 r_p0{};
    Vec3 p_p0{};
    double horizon_kepler = 10.0;                  // 3-d kinds, in t_kepler units
    double dt = 0.0;                               // 0 = module default
    OracleScenario oracle{};                       // oracle / compare kinds
    std::string out_dir = "out";
    int stride = 64;
    unsigned long seed = 0;                        // reserved; runs are deterministic
    bool emit_density = false;
    int density_grid = 384;                        // heatmap grid points per axis
};

// Parse + validate + fill defaults from a JSON document. Malformed documents
// raise ParseError; schema violations raise ValidationError naming the field.
ScenarioConfig parse_scenario(const std::string& json_text);
ScenarioConfig load_scenario(const std::string& path);

// Dotted-path overrides ("packet.n_bar=40", "oracle.dt=0.02") applied to the
// JSON document before validation.
ScenarioConfig load_scenario(const std::string& path,
                             const std::vector<std::string>& overrides);

// Deterministic round-trip serialization of the validated config.
std::string serialize_scenario(const ScenarioConfig& config);

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b);

} // namespace hatom::io
