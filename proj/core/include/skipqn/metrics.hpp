#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "skipqn/convolution.hpp"
#include "skipqn/model.hpp"
#include "skipqn/report.hpp"

namespace skipqn {

// Performance indices derived from the normalization constants of one
// network, for every population 0..population_limit. Construction builds the
// g table, the split tables and every station-removed constant g^[-i]; the
// queries are then cheap ratios.
class ConvolutionAnalysis {
public:
    ConvolutionAnalysis(std::vector<StationParams> stations, int population_limit);
    ConvolutionAnalysis(const NetworkModel& model, const VisitRatios& visits, int population_limit);

    std::size_t stations() const noexcept { return stations_.size(); }
    int population_limit() const noexcept { return table_.population_limit(); }
    int n_max() const noexcept { return n_max_; }

    const GTable& table() const noexcept { return table_; }
    const GSplit& split() const noexcept { return split_; }
    std::span<const ScaledValue> complement(std::size_t i) const { return complements_[i]; }

    // p_i(k, n) for k = 0..min(n, C_i).
    std::vector<double> queue_length_distribution(std::size_t i, int n) const;

    double total_throughput(std::size_t i, int n) const;
    // Returned as U_i / S_i.
    double productive_throughput(std::size_t i, int n) const;
    // The same quantity through the truncated sum over g^[-i]; kept as an
    // independent route for cross-checking.
    double productive_throughput_by_summation(std::size_t i, int n) const;
    double skipping_throughput(std::size_t i, int n) const;
    double utilization(std::size_t i, int n) const;

    StationReport report(std::size_t i, int n) const;
    std::vector<StationReport> reports(int n) const;

private:
    void require_feasible(int n) const;

    std::vector<StationParams> stations_;
    int n_max_ = 0;
    GTable table_;
    GSplit split_;
    std::vector<std::vector<ScaledValue>> complements_;
};

double mean_queue_length(std::span<const double> distribution);

// Little's law. Throws Error(ZeroThroughput) when the throughput is not positive.
double mean_waiting_time(double mean_queue_length, double total_throughput);

}  // namespace skipqn
