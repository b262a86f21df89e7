#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qfht {

/// One verified property: measured worst deviation against its tolerance.
/// Informational entries report a measurement without gating (tolerance NaN,
/// pass always true).
struct PropertyResult {
    std::string property;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool informational = false;
};

struct VerifyConfig {
    std::uint64_t seed = 42;
    int rule_size = 128; // Gauss-Laguerre size M
};

/// Runs the full property suite at desk scale and returns one row per
/// property, freezing every tolerance in code.
std::vector<PropertyResult> run_acceptance(const VerifyConfig& cfg);

bool all_pass(const std::vector<PropertyResult>& results);

} // namespace qfht
