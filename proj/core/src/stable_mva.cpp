#include "skipqn/stable_mva.hpp"

#include <algorithm>
#include <string>

#include "skipqn/error.hpp"

namespace skipqn {

namespace {

double entry(const std::vector<double>& v, int k) {
    return k >= 0 && static_cast<std::size_t>(k) < v.size() ? v[static_cast<std::size_t>(k)] : 0.0;
}

void check_inputs(std::span<const StationParams> stations, int population) {
    if (stations.empty()) throw Error(ErrorCode::DimensionMismatch, "network has no stations");
    for (std::size_t i = 0; i < stations.size(); ++i)
        if (!(stations[i].service_time > 0.0))
            throw Error(ErrorCode::BadStation,
                        "stable MVA needs positive service times (station " + std::to_string(i) + ")");
    const int capacity = n_max(stations);
    if (population < 0 || population > capacity)
        throw Error(ErrorCode::InfeasiblePopulation, "population " + std::to_string(population) +
                                                         " exceeds the total capacity " + std::to_string(capacity));
}

}  // namespace

std::vector<double> stable_qld_step(double throughput, double service_time, std::span<const double> shorted,
                                    std::span<const double> previous, int n, int capacity) {
    const int top = std::min(n, capacity);
    std::vector<double> p(static_cast<std::size_t>(top + 1), 0.0);
    const auto prev = [&](int k) {
        return k >= 0 && static_cast<std::size_t>(k) < previous.size() ? previous[static_cast<std::size_t>(k)] : 0.0;
    };
    const double y = static_cast<std::size_t>(n) < shorted.size() ? shorted[static_cast<std::size_t>(n)] : 0.0;
    if (y > 0.0) p[0] = throughput * prev(0) / y;
    for (int k = 1; k <= top; ++k) p[static_cast<std::size_t>(k)] = throughput * service_time * prev(k - 1);
    return p;
}

TandemChain solve_tandem_chain(std::span<const StationParams> stations, int population) {
    check_inputs(stations, population);
    const auto n_slots = static_cast<std::size_t>(population + 1);

    TandemChain chain;
    chain.population = population;

    FesProfile first;
    first.station_count = 1;
    first.capacity = stations[0].capacity;
    first.throughputs.assign(n_slots, 0.0);
    for (int k = 1; k <= std::min(population, first.capacity); ++k)
        first.throughputs[static_cast<std::size_t>(k)] = 1.0 / stations[0].service_time;
    chain.profiles.push_back(std::move(first));

    for (std::size_t i = 1; i < stations.size(); ++i) {
        FesProfile& agg = chain.profiles.back();
        const StationParams& st = stations[i];
        const double visit_scale = st.visit_ratio / stations[i - 1].visit_ratio;
        agg.shorted_throughputs.assign(n_slots, 0.0);
        for (std::size_t k = 0; k < n_slots; ++k) agg.shorted_throughputs[k] = agg.throughputs[k] * visit_scale;
        const auto& shorted = agg.shorted_throughputs;

        const int agg_capacity = agg.capacity;
        const int joint_capacity = agg_capacity + st.capacity;
        const int top_n = std::min(population, joint_capacity);

        CompositeDistributions step;
        step.added_station = i;
        step.station.resize(static_cast<std::size_t>(top_n + 1));
        step.aggregate.resize(static_cast<std::size_t>(top_n + 1));
        step.station[0] = {1.0};
        step.aggregate[0] = {1.0};

        FesProfile next;
        next.station_count = i + 1;
        next.capacity = joint_capacity;
        next.throughputs.assign(n_slots, 0.0);

        for (int n = 1; n <= top_n; ++n) {
            const auto& p_prev = step.station[static_cast<std::size_t>(n - 1)];

            // Residence time in the aggregate: the aggregate holds k customers
            // exactly when the added station holds n - k.
            double w_agg = 0.0;
            for (int k = 1; k <= std::min(n, agg_capacity); ++k)
                w_agg += k * entry(p_prev, n - k) / shorted[static_cast<std::size_t>(k)];
            double w_station = 0.0;
            for (int k = 1; k <= std::min(n, st.capacity); ++k) w_station += k * st.service_time * entry(p_prev, k - 1);

            const double x = n / (w_agg + w_station);
            next.throughputs[static_cast<std::size_t>(n)] = x;

            auto p = stable_qld_step(x, st.service_time, shorted, p_prev, n, st.capacity);
            std::vector<double> mirror(static_cast<std::size_t>(std::min(n, agg_capacity) + 1), 0.0);
            for (int l = 0; l < static_cast<int>(mirror.size()); ++l) mirror[static_cast<std::size_t>(l)] = entry(p, n - l);
            step.station[static_cast<std::size_t>(n)] = std::move(p);
            step.aggregate[static_cast<std::size_t>(n)] = std::move(mirror);
        }

        chain.history.push_back(std::move(step));
        chain.profiles.push_back(std::move(next));
    }
    return chain;
}

std::vector<std::vector<std::vector<double>>> back_propagate(const TandemChain& chain,
                                                             std::span<const StationParams> stations) {
    const int population = chain.population;
    const std::size_t m = stations.size();
    std::vector<std::vector<std::vector<double>>> dist(m);

    // Station 0 alone holds every customer of its (one-station) subnetwork.
    const int first_top = std::min(population, stations[0].capacity);
    dist[0].resize(static_cast<std::size_t>(first_top + 1));
    for (int l = 0; l <= first_top; ++l) {
        dist[0][static_cast<std::size_t>(l)].assign(static_cast<std::size_t>(l + 1), 0.0);
        dist[0][static_cast<std::size_t>(l)][static_cast<std::size_t>(l)] = 1.0;
    }

    for (const auto& step : chain.history) {
        const std::size_t added = step.added_station;
        const int top_n = static_cast<int>(step.station.size()) - 1;
        for (std::size_t j = 0; j < added; ++j) {
            const auto& old = dist[j];
            const int old_top = static_cast<int>(old.size()) - 1;
            const int c = stations[j].capacity;
            std::vector<std::vector<double>> updated(static_cast<std::size_t>(top_n + 1));
            for (int n = 0; n <= top_n; ++n) {
                const auto& agg = step.aggregate[static_cast<std::size_t>(n)];
                auto& out = updated[static_cast<std::size_t>(n)];
                out.assign(static_cast<std::size_t>(std::min(n, c) + 1), 0.0);
                // p_j(k, n) = sum_l p_j(k | l in the old aggregate) P(l in the old aggregate | n)
                for (int l = 0; l <= std::min(n, old_top); ++l) {
                    const double weight = entry(agg, l);
                    if (weight == 0.0) continue;
                    const auto& conditional = old[static_cast<std::size_t>(l)];
                    for (std::size_t k = 0; k < conditional.size() && k < out.size(); ++k)
                        out[k] += conditional[k] * weight;
                }
            }
            dist[j] = std::move(updated);
        }
        dist[added] = step.station;
    }
    return dist;
}

std::vector<std::vector<StationReport>> final_indices(
    const std::vector<std::vector<std::vector<double>>>& distributions, std::span<const double> network_throughputs,
    std::span<const StationParams> stations, int population) {
    const std::size_t m = stations.size();
    const double v_last = stations[m - 1].visit_ratio;
    std::vector<std::vector<StationReport>> reports(static_cast<std::size_t>(population + 1));

    for (std::size_t i = 0; i < m; ++i) reports[0].push_back(empty_report(i));
    for (int n = 1; n <= population; ++n) {
        auto& row = reports[static_cast<std::size_t>(n)];
        row.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            const StationParams& s = stations[i];
            const auto& p = distributions[i][static_cast<std::size_t>(n)];
            const auto& p_prev = distributions[i][static_cast<std::size_t>(n - 1)];

            StationReport r;
            r.station = i;
            r.population = n;
            r.distribution = p;
            r.total_throughput = network_throughputs[static_cast<std::size_t>(n)] * s.visit_ratio / v_last;
            double w = 0.0;
            for (int k = 1; k <= std::min(n, s.capacity); ++k) w += k * s.service_time * entry(p_prev, k - 1);
            r.mean_waiting_time = w;
            r.mean_queue_length = w * r.total_throughput;
            double busy = 0.0;
            for (std::size_t k = 1; k < p.size(); ++k) busy += p[k];
            r.utilization = busy;
            r.productive_throughput = busy / s.service_time;
            r.skipping_throughput = n <= s.capacity ? 0.0 : r.total_throughput * entry(p_prev, s.capacity);
            row.push_back(std::move(r));
        }
    }
    return reports;
}

StableMvaResult solve_stable_mva(std::span<const StationParams> stations, int population) {
    StableMvaResult result;
    result.chain = solve_tandem_chain(stations, population);
    result.distributions = back_propagate(result.chain, stations);
    result.reports = final_indices(result.distributions, result.chain.network_throughputs(), stations, population);
    return result;
}

StableMvaResult solve_stable_mva(const NetworkModel& model, const VisitRatios& visits, int population) {
    const auto params = station_params(model, visits);
    return solve_stable_mva(params, population);
}

}  // namespace skipqn
