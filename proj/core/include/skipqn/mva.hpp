#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "skipqn/model.hpp"
#include "skipqn/report.hpp"

namespace skipqn {

// A complement-computed p_i(0, n) below this is untrustworthy.
inline constexpr double kMvaEmptyProbabilityThreshold = 1e-10;
// Distribution entries below this are rounding debris from the complement.
inline constexpr double kMvaNegativeTolerance = -1e-12;

struct MvaState {
    int population = 0;
    std::vector<std::vector<double>> distributions;  // p_i(k, n), k = 0..min(n, C_i)
    std::vector<double> waiting_times;
    std::vector<double> throughputs;
    std::vector<double> productive_throughputs;
    std::vector<double> skipping_throughputs;
    std::vector<double> utilizations;
    std::vector<double> mean_queue_lengths;
    // Per station: p_i(0, n) came out of 1 - U_i(n) below the threshold, or
    // the distribution picked up a negative entry.
    std::vector<bool> stability_flag;
    // Some station was flagged at an earlier population; the error is carried
    // forward by the recursion even where the current flags are clear.
    bool inherited_instability = false;

    bool flagged() const noexcept {
        for (bool f : stability_flag)
            if (f) return true;
        return false;
    }
    bool trustworthy() const noexcept { return !flagged() && !inherited_instability; }

    StationReport report(std::size_t i) const;
};

struct MvaOptions {
    // Use w_i(n) = S_i (1 + n_i(n-1)) while n <= min_i C_i.
    bool simplified_path = true;
};

// Exact MVA recursion for finite buffers with skip-over, n = 1..N.
// Throws Error(InfeasiblePopulation) when N exceeds the total capacity.
std::vector<MvaState> run_mva(std::span<const StationParams> stations, int population,
                              const MvaOptions& options = {});
std::vector<MvaState> run_mva(const NetworkModel& model, const VisitRatios& visits, int population,
                              const MvaOptions& options = {});

}  // namespace skipqn
