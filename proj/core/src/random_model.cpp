#include "skipqn/random_model.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace skipqn {

NetworkModel random_model(std::mt19937_64& rng, const RandomModelOptions& options) {
    std::uniform_int_distribution<int> station_count(options.min_stations, options.max_stations);
    std::uniform_int_distribution<int> capacity(options.min_capacity, options.max_capacity);
    std::uniform_real_distribution<double> service(options.min_service_time, options.max_service_time);
    std::uniform_real_distribution<double> weight(0.05, 1.0);
    std::bernoulli_distribution extra_edge(options.edge_density);

    const auto m = static_cast<std::size_t>(station_count(rng));
    NetworkModel model;
    model.stations.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        model.stations[i].name = "S" + std::to_string(i + 1);
        model.stations[i].capacity = capacity(rng);
        model.stations[i].service_time = service(rng);
    }

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);

    model.routing = RoutingMatrix(m);
    for (std::size_t k = 0; k < m; ++k) model.routing(order[k], order[(k + 1) % m]) = weight(rng);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (model.routing(i, j) == 0.0 && extra_edge(rng)) model.routing(i, j) = weight(rng);

    for (std::size_t i = 0; i < m; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < m; ++j) sum += model.routing(i, j);
        for (std::size_t j = 0; j < m; ++j) model.routing(i, j) /= sum;
    }
    return validate_model(std::move(model));
}

}  // namespace skipqn
