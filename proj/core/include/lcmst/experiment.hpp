#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcmst/assembler.hpp"
#include "lcmst/generator.hpp"
#include "lcmst/lp_shortcuts.hpp"
#include "lcmst/oracle.hpp"

namespace lcmst {

enum class AuditLevel { None, Basic, Full };

enum class AlgoChoice { Main, LpShortcuts, Exact, All };

struct ExperimentConfig {
    GeneratorConfig generator;
    AlgoChoice algo = AlgoChoice::Main;
    AssemblerParams params;
    double epsilon = 1.0;  // lp variant
    AuditLevel audit = AuditLevel::Basic;
    std::string instance_id;  // defaults to the generator description
};

struct ExperimentReport {
    std::string instance_id;
    Instance instance;
    std::optional<RunResult> main_result;
    std::optional<LpRunResult> lp_result;
    std::optional<ExactResult> exact_result;
    std::vector<std::string> violations;  // audit findings; empty means clean
    double wall_time_ms = 0;

    std::string to_json(bool include_timing = true) const;
    std::string csv_row() const;
    static std::string csv_header();
};

// Runs the selected algorithms on a generated or given instance, audits the
// module invariants at the configured level, and collects the report.
ExperimentReport run_experiment(const ExperimentConfig& config);
ExperimentReport run_experiment_on(const Instance& inst, const ExperimentConfig& config);

// Re-verifies separator/region/piece bounds on the instance's hierarchy;
// returns human-readable violation strings (empty = all checks passed).
std::vector<std::string> audit_instance(const Instance& inst, const AssemblerParams& params,
                                        AuditLevel level);

}  // namespace lcmst
