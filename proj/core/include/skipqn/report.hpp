#pragma once

#include <cstddef>
#include <vector>

namespace skipqn {

// Steady-state indices of one station at one network population.
struct StationReport {
    std::size_t station = 0;
    int population = 0;
    std::vector<double> distribution;   // p_i(k, n), k = 0..min(n, C_i)
    double total_throughput = 0.0;      // X_i(n)
    double productive_throughput = 0.0; // customers served per unit time
    double skipping_throughput = 0.0;   // customers passing a full buffer
    double utilization = 0.0;
    double mean_queue_length = 0.0;
    double mean_waiting_time = 0.0;

    bool operator==(const StationReport&) const = default;
};

// Empty-network report: p_i(0, 0) = 1, every rate zero.
inline StationReport empty_report(std::size_t station) {
    StationReport r;
    r.station = station;
    r.distribution = {1.0};
    return r;
}

}  // namespace skipqn
