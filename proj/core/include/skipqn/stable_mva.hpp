#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "skipqn/model.hpp"
#include "skipqn/report.hpp"

namespace skipqn {

// Flow-equivalent server of the station prefix 0..station_count-1 solved in
// isolation.
struct FesProfile {
    std::size_t station_count = 0;
    int capacity = 0;                          // sum of the prefix capacities
    std::vector<double> throughputs;           // X_EQ(k), k = 0..N; zero above capacity
    std::vector<double> shorted_throughputs;   // Y_EQ(k) seen by the next (shorted) station
};

// One aggregation step: the previous aggregate in tandem with station
// `added_station`. Populations run over 0..min(N, capacity of the new prefix).
struct CompositeDistributions {
    std::size_t added_station = 0;
    std::vector<std::vector<double>> station;    // [n][k] queue length of the added station
    std::vector<std::vector<double>> aggregate;  // [n][l] customers inside the previous aggregate
};

struct TandemChain {
    int population = 0;
    std::vector<FesProfile> profiles;              // profiles[i] covers stations 0..i
    std::vector<CompositeDistributions> history;   // history[i-1] adds station i

    // Throughput of the last station of the network for n = 0..N.
    const std::vector<double>& network_throughputs() const { return profiles.back().throughputs; }
};

// Queue length distribution of a station at population n without any
// complement: the empty entry is p(0, n-1) X(n) / Y(n), where Y(n) is the
// throughput the station sees when shorted with n customers in the rest of
// the network. Y(n) == 0 (or missing) means the rest cannot hold n customers
// and the empty entry is 0.
std::vector<double> stable_qld_step(double throughput, double service_time, std::span<const double> shorted,
                                    std::span<const double> previous, int n, int capacity);

// Solves the network as a chain of two-station tandems, aggregating one
// station at a time in input order.
TandemChain solve_tandem_chain(std::span<const StationParams> stations, int population);

// Marginals of every station in the full network: [j][n][k] for n = 0..N.
std::vector<std::vector<std::vector<double>>> back_propagate(const TandemChain& chain,
                                                             std::span<const StationParams> stations);

// Reports [n][i] for n = 0..N.
std::vector<std::vector<StationReport>> final_indices(
    const std::vector<std::vector<std::vector<double>>>& distributions, std::span<const double> network_throughputs,
    std::span<const StationParams> stations, int population);

struct StableMvaResult {
    TandemChain chain;
    std::vector<std::vector<std::vector<double>>> distributions;
    std::vector<std::vector<StationReport>> reports;
};

StableMvaResult solve_stable_mva(std::span<const StationParams> stations, int population);
StableMvaResult solve_stable_mva(const NetworkModel& model, const VisitRatios& visits, int population);

}  // namespace skipqn
