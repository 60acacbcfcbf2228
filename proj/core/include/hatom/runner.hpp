#pragma once

// Experiment orchestration: executes a validated ScenarioConfig, writes the
// artifact files (CSV series, SVG plots, binary snapshots, comparison
// report), and emits a manifest whose invariant checklist mirrors what the
// run actually verified.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hatom/scenario.hpp"
#include "hatom/twobody.hpp"

namespace hatom::io {

struct InvariantCheck {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
    // ">" checks pass when measured exceeds tolerance (e.g. momentum
    // excursions that must be large); "<" is the usual bound.
    char direction = '<';
};

struct RunManifest {
    std::string version;
    std::string kind;
    std::string units = "hartree-atomic";
    ScenarioConfig config{};
    std::vector<std::pair<std::string, double>> derived;
    std::vector<InvariantCheck> invariants;
    std::vector<std::string> artifacts;
    bool complete = false;
    std::string error;
    std::optional<ComparisonReport> compare;

    bool all_pass() const;
};

// Executes the scenario into config.out_dir. On a module error the partial
// manifest is written with complete=false before the exception propagates.
RunManifest run(const ScenarioConfig& config);

std::string manifest_json(const RunManifest& manifest);

// Merge manifests from run directories into one comparison table.
std::string report_table(const std::vector<std::string>& run_dirs);

} // namespace hatom::io
