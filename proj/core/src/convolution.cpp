#include "skipqn/convolution.hpp"

#include <algorithm>

#include "skipqn/error.hpp"

namespace skipqn {

namespace {

void check_population(int population) {
    if (population < 0)
        throw Error(ErrorCode::InfeasiblePopulation, "population must be non-negative");
}

std::vector<ScaledValue> service_function_vector(const StationParams& s, int population) {
    std::vector<ScaledValue> f(static_cast<std::size_t>(population + 1));
    const ScaledValue y = ScaledValue::from_double(s.demand());
    ScaledValue power = ScaledValue::one();
    for (int k = 0; k <= std::min(population, s.capacity); ++k) {
        f[static_cast<std::size_t>(k)] = power;
        power = power * y;
    }
    return f;
}

// column_out(n) = sum_{k=0}^{min(n, c)} f(k) * column_in(n - k)
void truncated_convolution(std::span<const ScaledValue> f, int capacity, std::span<const ScaledValue> in,
                           std::span<ScaledValue> out) {
    const int population = static_cast<int>(out.size()) - 1;
    for (int n = 0; n <= population; ++n) {
        ScaledValue acc;
        const int limit = std::min(n, capacity);
        for (int k = 0; k <= limit; ++k) acc += f[static_cast<std::size_t>(k)] * in[static_cast<std::size_t>(n - k)];
        out[static_cast<std::size_t>(n)] = acc;
    }
}

}  // namespace

GTable compute_g(std::span<const StationParams> stations, int population) {
    check_population(population);
    GTable table(population, stations.size());
    std::uint64_t multiplications = 0;
    int prefix_capacity = 0;

    for (std::size_t m = 0; m < stations.size(); ++m) {
        const int c = stations[m].capacity;
        const ScaledValue y = ScaledValue::from_double(stations[m].demand());
        prefix_capacity += c;
        table.at(0, m) = ScaledValue::one();
        const int filled = std::min(population, prefix_capacity);

        // g(n, 0) = 0 for n >= 1, so the first column needs no previous one.
        auto previous = [&](int n) {
            return m == 0 ? ScaledValue::zero() : table.at(n, m - 1);
        };

        for (int n = 1; n <= filled; ++n) {
            if (n <= c) {
                // g(n, m) = g(n, m-1) + Y_m g(n-1, m)
                table.at(n, m) = previous(n) + y * table.at(n - 1, m);
                ++multiplications;
            } else {
                // g(n, m) = g(n, m-1) + Y_m sum_{h=0}^{c-1} Y_m^h g(n-1-h, m-1),
                // with the sum in nested form: c multiplications in total.
                ScaledValue nested = previous(n - c);
                for (int h = c - 1; h >= 1; --h) nested = previous(n - h) + y * nested;
                table.at(n, m) = previous(n) + y * nested;
                multiplications += static_cast<std::uint64_t>(c);
            }
        }
    }
    table.set_multiplications(multiplications);
    return table;
}

GTable compute_g(const NetworkModel& model, const VisitRatios& visits, int population) {
    const auto params = station_params(model, visits);
    return compute_g(params, population);
}

GSplit compute_g_split(std::span<const StationParams> stations, int population) {
    check_population(population);
    const std::size_t m_count = stations.size();
    GSplit split{GTable(population, m_count), GTable(population, m_count)};
    if (m_count == 0) return split;

    std::vector<std::vector<ScaledValue>> f(m_count);
    for (std::size_t m = 0; m < m_count; ++m) f[m] = service_function_vector(stations[m], population);

    const auto column = [&](GTable& t, std::size_t m) {
        return std::span<ScaledValue>(&t.at(0, m), static_cast<std::size_t>(population + 1));
    };

    std::copy(f.front().begin(), f.front().end(), column(split.up, 0).begin());
    for (std::size_t m = 1; m < m_count; ++m)
        truncated_convolution(f[m], stations[m].capacity, split.up.column(m - 1), column(split.up, m));

    std::copy(f.back().begin(), f.back().end(), column(split.down, m_count - 1).begin());
    for (std::size_t m = m_count - 1; m-- > 0;)
        truncated_convolution(f[m], stations[m].capacity, split.down.column(m + 1), column(split.down, m));
    return split;
}

GSplit compute_g_split(const NetworkModel& model, const VisitRatios& visits, int population) {
    const auto params = station_params(model, visits);
    return compute_g_split(params, population);
}

std::vector<ScaledValue> g_complement(const GSplit& split, std::size_t i) {
    const std::size_t m_count = split.up.stations();
    const int population = split.up.population_limit();
    std::vector<ScaledValue> out(static_cast<std::size_t>(population + 1));
    if (m_count <= 1) {
        out[0] = ScaledValue::one();
        return out;
    }
    if (i == 0) {
        const auto col = split.down.column(1);
        std::copy(col.begin(), col.end(), out.begin());
        return out;
    }
    if (i == m_count - 1) {
        const auto col = split.up.column(m_count - 2);
        std::copy(col.begin(), col.end(), out.begin());
        return out;
    }
    const auto before = split.up.column(i - 1);
    const auto after = split.down.column(i + 1);
    // Skip the zero tails beyond each side's capacity.
    int before_last = population;
    while (before_last > 0 && before[static_cast<std::size_t>(before_last)].is_zero()) --before_last;
    int after_last = population;
    while (after_last > 0 && after[static_cast<std::size_t>(after_last)].is_zero()) --after_last;

    for (int n = 0; n <= population; ++n) {
        ScaledValue acc;
        const int k_lo = std::max(0, n - after_last);
        const int k_hi = std::min(n, before_last);
        for (int k = k_lo; k <= k_hi; ++k)
            acc += before[static_cast<std::size_t>(k)] * after[static_cast<std::size_t>(n - k)];
        out[static_cast<std::size_t>(n)] = acc;
    }
    return out;
}

}  // namespace skipqn
