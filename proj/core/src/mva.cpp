#include "skipqn/mva.hpp"

#include <algorithm>
#include <string>

#include "skipqn/error.hpp"

namespace skipqn {

StationReport MvaState::report(std::size_t i) const {
    StationReport r;
    r.station = i;
    r.population = population;
    r.distribution = distributions[i];
    r.total_throughput = throughputs[i];
    r.productive_throughput = productive_throughputs[i];
    r.skipping_throughput = skipping_throughputs[i];
    r.utilization = utilizations[i];
    r.mean_queue_length = mean_queue_lengths[i];
    r.mean_waiting_time = population == 0 ? 0.0 : waiting_times[i];
    return r;
}

std::vector<MvaState> run_mva(std::span<const StationParams> stations, int population, const MvaOptions& options) {
    const int capacity_sum = n_max(stations);
    if (population > capacity_sum)
        throw Error(ErrorCode::InfeasiblePopulation, "population " + std::to_string(population) +
                                                         " exceeds the total capacity " + std::to_string(capacity_sum));
    if (population < 0) throw Error(ErrorCode::InfeasiblePopulation, "population must be non-negative");

    const std::size_t m = stations.size();
    int min_capacity = stations.empty() ? 0 : stations.front().capacity;
    for (const auto& s : stations) min_capacity = std::min(min_capacity, s.capacity);

    MvaState prev;
    prev.population = 0;
    prev.distributions.assign(m, std::vector<double>{1.0});
    prev.mean_queue_lengths.assign(m, 0.0);

    std::vector<MvaState> states;
    states.reserve(static_cast<std::size_t>(population));
    bool seen_instability = false;

    for (int n = 1; n <= population; ++n) {
        MvaState cur;
        cur.population = n;
        cur.inherited_instability = seen_instability;
        cur.distributions.resize(m);
        cur.waiting_times.resize(m);
        cur.throughputs.resize(m);
        cur.productive_throughputs.resize(m);
        cur.skipping_throughputs.resize(m);
        cur.utilizations.resize(m);
        cur.mean_queue_lengths.resize(m);
        cur.stability_flag.assign(m, false);

        const bool simplified = options.simplified_path && n <= min_capacity;
        double cycle = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const StationParams& s = stations[i];
            double w = 0.0;
            if (simplified) {
                w = s.service_time * (1.0 + prev.mean_queue_lengths[i]);
            } else {
                const auto& p_prev = prev.distributions[i];
                const int top = std::min(n, s.capacity);
                for (int k = 1; k <= top; ++k) {
                    const auto idx = static_cast<std::size_t>(k - 1);
                    if (idx < p_prev.size()) w += k * s.service_time * p_prev[idx];
                }
            }
            cur.waiting_times[i] = w;
            cycle += s.visit_ratio * w;
        }

        const double x_ref = n / cycle;
        for (std::size_t i = 0; i < m; ++i) {
            const StationParams& s = stations[i];
            const double x = s.visit_ratio * x_ref;
            const auto& p_prev = prev.distributions[i];
            const int top = std::min(n, s.capacity);
            auto& p = cur.distributions[i];
            p.assign(static_cast<std::size_t>(top + 1), 0.0);
            double busy = 0.0;
            for (int k = 1; k <= top; ++k) {
                const auto idx = static_cast<std::size_t>(k - 1);
                const double prev_k = idx < p_prev.size() ? p_prev[idx] : 0.0;
                p[static_cast<std::size_t>(k)] = x * s.service_time * prev_k;
                busy += p[static_cast<std::size_t>(k)];
            }
            p[0] = 1.0 - busy;

            bool unstable = p[0] < kMvaEmptyProbabilityThreshold;
            for (double v : p) unstable = unstable || v < kMvaNegativeTolerance;
            cur.stability_flag[i] = unstable;

            cur.throughputs[i] = x;
            cur.utilizations[i] = busy;
            cur.mean_queue_lengths[i] = cur.waiting_times[i] * x;
            if (n > s.capacity) {
                const auto c = static_cast<std::size_t>(s.capacity);
                cur.skipping_throughputs[i] = x * (c < p_prev.size() ? p_prev[c] : 0.0);
            }
            cur.productive_throughputs[i] =
                s.service_time == 0.0 ? x - cur.skipping_throughputs[i] : busy / s.service_time;
        }

        seen_instability = seen_instability || cur.flagged();
        states.push_back(cur);
        prev = std::move(cur);
    }
    return states;
}

std::vector<MvaState> run_mva(const NetworkModel& model, const VisitRatios& visits, int population,
                              const MvaOptions& options) {
    const auto params = station_params(model, visits);
    return run_mva(params, population, options);
}

}  // namespace skipqn
