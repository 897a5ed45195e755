#pragma once

#include <string>
#include <vector>

#include "dynzeta/json_io.hpp"

namespace dynzeta {

struct PropertyResult {
    std::string name;
    int instances = 0;        // instances actually evaluated
    bool pass = true;
    std::string counterexample;  // empty when passing
};

struct VerifyReport {
    int order = 0;
    unsigned long seed = 0;
    int count = 0;
    std::string mutation;
    std::vector<PropertyResult> properties;

    bool all_pass() const;
};

/// Deliberate corruptions for negative-control runs. They only affect the
/// arithmetic used inside the property runners, never the library itself.
enum class Mutation {
    None,
    MulTopCoeff,  // series products gain a spurious +1 on the top coefficient
};

/// Accepts "", "none" or "mul-top-coeff".
Mutation mutation_from_name(const std::string& name);

/// Runs every cross-module identity suite with deterministic generators:
/// identical (order, seed, count) always produce an identical report.
VerifyReport run_verify(int order, unsigned long seed, int count,
                        Mutation mutation = Mutation::None);

json verify_report_to_json(const VerifyReport& report);

}  // namespace dynzeta
