#pragma once

#include <cstdint>
#include <random>

#include "skipqn/model.hpp"

namespace skipqn {

struct RandomModelOptions {
    int min_stations = 2;
    int max_stations = 4;
    int min_capacity = 1;
    int max_capacity = 4;
    double min_service_time = 0.1;
    double max_service_time = 10.0;
    // Probability of each extra routing edge on top of the spanning cycle.
    double edge_density = 0.5;
};

// Random irreducible network: a shuffled cycle through every station keeps the
// routing graph strongly connected, extra edges and self-loops are sprinkled
// on top, and each row is normalized. The result is validated.
NetworkModel random_model(std::mt19937_64& rng, const RandomModelOptions& options = {});

inline NetworkModel random_model(std::uint64_t seed, const RandomModelOptions& options = {}) {
    std::mt19937_64 rng(seed);
    return random_model(rng, options);
}

}  // namespace skipqn
