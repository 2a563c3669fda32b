#pragma once

#include "esbp/verify.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace esbp {

using Json = nlohmann::json;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// full default configuration; builtin names overlay it
Json default_config();
bool is_builtin(const std::string& name);
// a builtin name or a path to a JSON file, merged over the defaults
Json load_config(const std::string& name_or_path);

Stencil parse_stencil(const std::string& s);
MMSProblem mms_problem_from(const Json& cfg);
AuditConfig audit_config_from(const Json& cfg);

struct SimulationOutput {
    int steps = 0;
    double dt = 0;
    double energy_drift_rel = 0;
    std::vector<std::string> files;
};

SimulationOutput run_simulation(const Json& cfg, const std::string& out_dir);

void write_manifest(const Json& cfg, const std::string& command, const std::string& out_dir);

}
