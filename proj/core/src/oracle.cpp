#include "skipqn/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "skipqn/error.hpp"

namespace skipqn {

std::size_t count_states(std::span<const int> capacities, int n) {
    if (n < 0) return 0;
    constexpr std::size_t saturated = std::numeric_limits<std::size_t>::max();
    const auto add = [](std::size_t a, std::size_t b) { return a > saturated - b ? saturated : a + b; };
    // Coefficients of prod_i (1 + x + ... + x^{c_i}) up to x^n, by running window sums.
    std::vector<std::size_t> poly(static_cast<std::size_t>(n) + 1, 0);
    poly[0] = 1;
    for (int c : capacities) {
        std::vector<std::size_t> next(poly.size(), 0);
        std::size_t window = 0;
        for (std::size_t j = 0; j < poly.size(); ++j) {
            window = add(window, poly[j]);
            if (j > static_cast<std::size_t>(c) && window != saturated)
                window -= poly[j - static_cast<std::size_t>(c) - 1];
            next[j] = window;
        }
        poly = std::move(next);
    }
    return poly.back();
}

std::vector<StateVector> enumerate_states(std::span<const int> capacities, int n, std::size_t limit) {
    std::vector<StateVector> states;
    const std::size_t m = capacities.size();
    if (n < 0 || m == 0) return states;

    // remaining[i] = capacity of stations i..M-1, used to prune dead branches.
    std::vector<int> remaining(m + 1, 0);
    for (std::size_t i = m; i-- > 0;) remaining[i] = remaining[i + 1] + capacities[i];
    if (n > remaining[0]) return states;
    const std::size_t count = count_states(capacities, n);
    if (count > limit)
        throw Error(ErrorCode::SizeLimit, "state space of " + std::to_string(count) +
                                              " states exceeds the enumeration limit of " + std::to_string(limit));
    states.reserve(count);

    StateVector current(m, 0);
    auto recurse = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == m - 1) {
            current[i] = left;
            if (states.size() >= limit)
                throw Error(ErrorCode::SizeLimit,
                            "state space exceeds the enumeration limit of " + std::to_string(limit) + " states");
            states.push_back(current);
            return;
        }
        const int hi = std::min(left, capacities[i]);
        const int lo = std::max(0, left - remaining[i + 1]);
        for (int k = hi; k >= lo; --k) {
            current[i] = k;
            self(self, i + 1, left - k);
        }
    };
    recurse(recurse, 0, n);
    return states;
}

OracleResult direct_solution(std::span<const StationParams> stations, int n, std::size_t limit) {
    std::vector<int> capacities;
    capacities.reserve(stations.size());
    for (const auto& s : stations) capacities.push_back(s.capacity);

    OracleResult result;
    result.states = enumerate_states(capacities, n, limit);

    const std::size_t m = stations.size();
    std::vector<ScaledValue> demand(m);
    for (std::size_t i = 0; i < m; ++i) demand[i] = ScaledValue::from_double(stations[i].demand());

    // Unnormalized marginal mass per (station, k).
    std::vector<std::vector<ScaledValue>> mass(m);
    for (std::size_t i = 0; i < m; ++i)
        mass[i].resize(static_cast<std::size_t>(std::max(0, std::min(n, stations[i].capacity)) + 1));

    result.weights.reserve(result.states.size());
    for (const auto& state : result.states) {
        ScaledValue w = ScaledValue::one();
        for (std::size_t i = 0; i < m; ++i) w = w * ScaledValue::pow(demand[i], state[i]);
        result.weights.push_back(w);
        result.normalization += w;
        for (std::size_t i = 0; i < m; ++i) mass[i][static_cast<std::size_t>(state[i])] += w;
    }

    result.marginals.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        result.marginals[i].resize(mass[i].size());
        for (std::size_t k = 0; k < mass[i].size(); ++k)
            result.marginals[i][k] = result.normalization.is_zero() ? 0.0 : ratio(mass[i][k], result.normalization);
    }
    return result;
}

OracleResult direct_solution(const NetworkModel& model, const VisitRatios& visits, int n, std::size_t limit) {
    const auto params = station_params(model, visits);
    return direct_solution(params, n, limit);
}

}  // namespace skipqn
