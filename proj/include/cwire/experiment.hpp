#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cwire/families.hpp"
#include "cwire/search.hpp"

namespace cwire {

enum class ExperimentMode {
    Oracle,      // materialize the pair and certify the lower bound by exhaustion
    Certificate, // large schedules: verify the arithmetic chains instead
};

/// One experiment row; every verdict is recomputable from its cells.
struct ExperimentRow {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    BigInt vol_x_value;
    BigInt lower_target;          // what the (k-1)-side evidence is held against
    std::string evidence_kind;    // how the lower bound was certified
    BigInt evidence_value;        // certified lower bound (0 when certification failed)
    std::string upper_construction;
    BigInt upper_volume;
    bool verdict = false;
};

struct ExperimentOptions {
    /// Oracle mode clamps the certified cap to
    /// min(girth target - 1, cap_horizon, |V host|); the binding term is
    /// recorded in evidence_kind.
    std::uint64_t cap_horizon = 12;
    std::uint64_t materialization_cap = kDefaultMaterializationCap;
    SearchLimits limits;
    unsigned jobs = 1;
};

/// Per n: the k = f(n) upper bound via the collapse construction (measured
/// in oracle mode, formula-level plus verified chain in certificate mode)
/// and the k-1 lower bound via an infeasibility certificate (oracle mode) or
/// the exact-integer verifiers (certificate mode). Rows never silently skip:
/// refusals and failures land in evidence_kind with verdict false.
std::vector<ExperimentRow> run_separation_experiment(const FamilyConfig& cfg,
                                                     const std::vector<std::uint64_t>& n_list,
                                                     ExperimentMode mode,
                                                     const ExperimentOptions& options = {});

/// Fixed columns:
/// n,k,vol_X,lower_target,evidence_kind,evidence_value,upper_construction,upper_volume,verdict
std::string experiment_csv(const std::vector<ExperimentRow>& rows);

} // namespace cwire
