#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <string>

#include "output.hpp"
#include "skipqn/error.hpp"
#include "skipqn/metrics.hpp"
#include "skipqn/mva.hpp"
#include "skipqn/oracle.hpp"
#include "skipqn/stable_mva.hpp"

namespace skipqn::cli {

namespace {

double relative(double a, double b) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

double relative(ScaledValue a, ScaledValue b) {
    if (a.is_zero() && b.is_zero()) return 0.0;
    if (a.is_zero() || b.is_zero()) return 1.0;
    return std::fabs(ratio(a - b, a > b ? a : b));
}

double absolute(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k)
        worst = std::max(worst, std::fabs((k < a.size() ? a[k] : 0.0) - (k < b.size() ? b[k] : 0.0)));
    return worst;
}

class Tracker {
public:
    void touch(const std::string& comparison, const std::string& family) {
        if (!worst_.count({comparison, family})) {
            order_.emplace_back(comparison, family);
            worst_[{comparison, family}] = std::nullopt;
        }
    }
    void record(const std::string& comparison, const std::string& family, double deviation) {
        touch(comparison, family);
        auto& w = worst_[{comparison, family}];
        w = std::max(w.value_or(0.0), deviation);
    }
    std::vector<DeviationRow> rows() const {
        std::vector<DeviationRow> out;
        for (const auto& key : order_) out.push_back({key.first, key.second, worst_.at(key)});
        return out;
    }

private:
    std::vector<std::pair<std::string, std::string>> order_;
    std::map<std::pair<std::string, std::string>, std::optional<double>> worst_;
};

void compare_reports(Tracker& t, const std::string& comparison, const StationReport& got, const StationReport& want) {
    t.record(comparison, "distribution", absolute(got.distribution, want.distribution));
    t.record(comparison, "total_throughput", relative(got.total_throughput, want.total_throughput));
    t.record(comparison, "productive_throughput", relative(got.productive_throughput, want.productive_throughput));
    const double scale = std::max({std::fabs(got.skipping_throughput), std::fabs(want.skipping_throughput),
                                   std::fabs(want.total_throughput)});
    t.record(comparison, "skipping_throughput",
             scale == 0.0 ? 0.0 : std::fabs(got.skipping_throughput - want.skipping_throughput) / scale);
    t.record(comparison, "utilization", relative(got.utilization, want.utilization));
    t.record(comparison, "mean_queue_length", relative(got.mean_queue_length, want.mean_queue_length));
    t.record(comparison, "mean_waiting_time", relative(got.mean_waiting_time, want.mean_waiting_time));
}

void touch_all(Tracker& t, const std::string& comparison) {
    for (const char* family : {"distribution", "total_throughput", "productive_throughput", "skipping_throughput",
                               "utilization", "mean_queue_length", "mean_waiting_time"})
        t.touch(comparison, family);
}

}  // namespace

VerificationSummary verify_model(const NetworkModel& model, int population, double tolerance) {
    std::vector<int> capacities;
    for (const auto& s : model.stations) capacities.push_back(s.capacity);
    for (int n = 1; n <= population; ++n)
        if (const std::size_t count = count_states(capacities, n); count > kDefaultStateLimit)
            throw Error(ErrorCode::SizeLimit, "population " + std::to_string(n) + " has " + std::to_string(count) +
                                                  " states, above the oracle limit of " +
                                                  std::to_string(kDefaultStateLimit));

    const auto visits = solve_visit_ratios(model);
    const ConvolutionAnalysis conv(model, visits, population);
    const auto mva = run_mva(model, visits, population);
    const auto stable = solve_stable_mva(model, visits, population);

    VerificationSummary summary;
    summary.tolerance = tolerance;
    summary.population = population;
    Tracker t;
    t.touch("convolution vs oracle", "normalization");
    t.touch("convolution vs oracle", "distribution");
    touch_all(t, "mva vs convolution");
    touch_all(t, "stable-mva vs convolution");

    for (int n = 1; n <= population; ++n) {
        const auto oracle = direct_solution(model, visits, n);
        t.record("convolution vs oracle", "normalization", relative(conv.table().total(n), oracle.normalization));
        const MvaState& state = mva[static_cast<std::size_t>(n - 1)];
        if (!state.trustworthy()) summary.mva_exempt_populations.push_back(n);
        for (std::size_t i = 0; i < model.size(); ++i) {
            const auto reference = conv.report(i, n);
            t.record("convolution vs oracle", "distribution", absolute(reference.distribution, oracle.marginals[i]));
            if (state.trustworthy()) compare_reports(t, "mva vs convolution", state.report(i), reference);
            compare_reports(t, "stable-mva vs convolution", stable.reports[static_cast<std::size_t>(n)][i], reference);
        }
    }

    summary.rows = t.rows();
    summary.passed = std::all_of(summary.rows.begin(), summary.rows.end(),
                                 [&](const DeviationRow& r) { return !r.worst || *r.worst < tolerance; });
    return summary;
}

void write_verification(const VerificationSummary& summary, std::ostream& out) {
    out << std::left << std::setw(28) << "comparison" << std::setw(24) << "family" << "max deviation\n";
    for (const auto& row : summary.rows) {
        out << std::setw(28) << row.comparison << std::setw(24) << row.family;
        if (!row.worst)
            out << "n/a (all populations exempt)";
        else
            out << format_shortest(*row.worst) << (*row.worst < summary.tolerance ? "" : "  FAIL");
        out << '\n';
    }
    if (!summary.mva_exempt_populations.empty()) {
        out << "mva exempted at populations (stability flag tripped):";
        for (int n : summary.mva_exempt_populations) out << ' ' << n;
        out << '\n';
    }
    out << "verification " << (summary.passed ? "passed" : "failed") << " for n = 1.." << summary.population
        << " at tolerance " << format_shortest(summary.tolerance) << '\n';
}

}  // namespace skipqn::cli
