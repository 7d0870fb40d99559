#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "skipqn/model.hpp"

namespace skipqn::cli {

struct DeviationRow {
    std::string comparison;  // e.g. "mva vs convolution"
    std::string family;      // e.g. "total_throughput"
    std::optional<double> worst;  // empty when every population was exempt
};

struct VerificationSummary {
    double tolerance = 0.0;
    int population = 0;
    std::vector<DeviationRow> rows;
    std::vector<int> mva_exempt_populations;
    bool passed = false;
};

// Cross-checks convolution, mva and stable-mva against each other and the
// state-space oracle for populations 1..population. Scalars are compared by
// relative deviation, probabilities by absolute deviation and skipping
// throughputs relative to the station's total throughput. A family passes
// when its worst deviation is strictly below the tolerance, so exact
// agreement is never assumed. Throws Error(SizeLimit) from the oracle.
VerificationSummary verify_model(const NetworkModel& model, int population, double tolerance);

void write_verification(const VerificationSummary& summary, std::ostream& out);

}  // namespace skipqn::cli
