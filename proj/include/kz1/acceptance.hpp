#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace kz1 {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    std::uint64_t seed = 20240601;
    std::vector<int> only;               ///< criteria to run; empty means all
    std::size_t identity_chains = 500;   ///< per dimension, criterion 1
    std::size_t admissibility_dim = 3;
    long admissibility_bound = 8;
    long critical_bound = 16;
    std::ostream* progress = nullptr;    ///< optional informative lines
};

/// Runs the selected acceptance criteria in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// "PASS [3] case catalogue (12.1 s): ..." style line.
std::string format_result(const CriterionResult& r);

}  // namespace kz1
