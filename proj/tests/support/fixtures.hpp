#pragma once

#include <cstdint>
#include <vector>

#include "skipqn/model.hpp"
#include "skipqn/random_model.hpp"

namespace skipqn::testing {

inline NetworkModel make_model(std::vector<int> capacities, std::vector<double> service_times,
                               std::vector<std::vector<double>> routing, std::size_t reference = 0) {
    NetworkModel model;
    for (std::size_t i = 0; i < capacities.size(); ++i)
        model.stations.push_back({"S" + std::to_string(i + 1), capacities[i], service_times[i]});
    model.routing = RoutingMatrix::from_rows(routing);
    model.reference = reference;
    return validate_model(std::move(model));
}

// Two stations in a cycle, unit service, unit buffers.
inline NetworkModel net_a() { return make_model({1, 1}, {1.0, 1.0}, {{0, 1}, {1, 0}}); }
// Two stations in a cycle, S = (1, 2), C = (2, 1).
inline NetworkModel net_b() { return make_model({2, 1}, {1.0, 2.0}, {{0, 1}, {1, 0}}); }
// Symmetric three-station cycle with unit buffers.
inline NetworkModel net_c() {
    return make_model({1, 1, 1}, {1.0, 1.0, 1.0}, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
}
// Central station feeding two branches; unequal visits, capacities and speeds.
inline NetworkModel net_d() {
    return make_model({2, 1, 3}, {1.0, 2.0, 0.5}, {{0, 0.5, 0.5}, {1, 0, 0}, {1, 0, 0}});
}

// Seeded desk-scale corpus: M in 2..4, C_i in 1..4, S_i in [0.1, 10].
inline std::vector<NetworkModel> corpus(std::size_t count, std::uint64_t seed = 20240601) {
    std::mt19937_64 rng(seed);
    std::vector<NetworkModel> models;
    models.reserve(count);
    for (std::size_t k = 0; k < count; ++k) models.push_back(random_model(rng));
    return models;
}

// Same model with stations renumbered: new station k is old station perm[k].
inline NetworkModel permuted(const NetworkModel& model, const std::vector<std::size_t>& perm) {
    NetworkModel out;
    const std::size_t m = model.size();
    out.routing = RoutingMatrix(m);
    for (std::size_t a = 0; a < m; ++a) {
        out.stations.push_back(model.stations[perm[a]]);
        for (std::size_t b = 0; b < m; ++b) out.routing(a, b) = model.routing(perm[a], perm[b]);
    }
    for (std::size_t a = 0; a < m; ++a)
        if (perm[a] == model.reference) out.reference = a;
    return validate_model(std::move(out));
}

// Appends a zero-service station of the given capacity that every departure
// from station 0 passes through first, so the original visit ratios survive.
inline NetworkModel with_shorted_station(const NetworkModel& model, int capacity) {
    const std::size_t m = model.size();
    NetworkModel out;
    out.stations = model.stations;
    out.stations.push_back({"shorted", capacity, 0.0});
    out.routing = RoutingMatrix(m + 1);
    for (std::size_t a = 1; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) out.routing(a, b) = model.routing(a, b);
    for (std::size_t b = 0; b < m; ++b) out.routing(m, b) = model.routing(0, b);
    out.routing(0, m) = 1.0;
    out.reference = model.reference;
    ValidationOptions options;
    options.allow_zero_service = true;
    return validate_model(std::move(out), options);
}

}  // namespace skipqn::testing
