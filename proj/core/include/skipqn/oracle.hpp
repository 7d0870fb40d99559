#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "skipqn/model.hpp"
#include "skipqn/scaled.hpp"

namespace skipqn {

using StateVector = std::vector<int>;

inline constexpr std::size_t kDefaultStateLimit = 10'000'000;

// Number of states with 0 <= n_i <= c_i and sum n_i = n, saturating at
// SIZE_MAX. Cheap, so callers can refuse oversized enumerations up front.
std::size_t count_states(std::span<const int> capacities, int n);

// Every state with 0 <= n_i <= c_i and sum n_i = n, in descending
// lexicographic order. Throws Error(SizeLimit) before enumerating when more
// than `limit` states would be produced.
std::vector<StateVector> enumerate_states(std::span<const int> capacities, int n,
                                          std::size_t limit = kDefaultStateLimit);

struct OracleResult {
    std::vector<StateVector> states;
    std::vector<ScaledValue> weights;             // prod_i f_i(n_i)
    ScaledValue normalization;                    // G
    std::vector<std::vector<double>> marginals;   // [i][k], k = 0..min(n, C_i)
};

// Brute-force product-form solution by summing over the whole state space.
OracleResult direct_solution(std::span<const StationParams> stations, int n,
                             std::size_t limit = kDefaultStateLimit);
OracleResult direct_solution(const NetworkModel& model, const VisitRatios& visits, int n,
                             std::size_t limit = kDefaultStateLimit);

}  // namespace skipqn
