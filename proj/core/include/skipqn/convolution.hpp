#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "skipqn/model.hpp"
#include "skipqn/scaled.hpp"

namespace skipqn {

// (N+1) x M table of normalization constants stored column by column:
// at(n, m) is g(n, m+1), the constant of the station prefix 0..m holding
// n customers. Entries beyond the prefix capacity are exact zeros.
class GTable {
public:
    GTable() = default;
    GTable(int population_limit, std::size_t stations)
        : population_limit_(population_limit),
          stations_(stations),
          values_(static_cast<std::size_t>(population_limit + 1) * stations) {}

    int population_limit() const noexcept { return population_limit_; }
    std::size_t stations() const noexcept { return stations_; }

    ScaledValue& at(int n, std::size_t m) { return values_[index(n, m)]; }
    ScaledValue at(int n, std::size_t m) const { return values_[index(n, m)]; }

    // g(n, m+1) for n = 0..N.
    std::span<const ScaledValue> column(std::size_t m) const {
        return {values_.data() + m * static_cast<std::size_t>(population_limit_ + 1),
                static_cast<std::size_t>(population_limit_ + 1)};
    }

    // g(n, M) for the whole network; zero for n outside [0, N].
    ScaledValue total(int n) const {
        if (n < 0 || n > population_limit_ || stations_ == 0) return ScaledValue::zero();
        return at(n, stations_ - 1);
    }

    // Scaled multiplications performed while building the table.
    std::uint64_t multiplications() const noexcept { return multiplications_; }
    void set_multiplications(std::uint64_t count) noexcept { multiplications_ = count; }

private:
    std::size_t index(int n, std::size_t m) const {
        return m * static_cast<std::size_t>(population_limit_ + 1) + static_cast<std::size_t>(n);
    }

    int population_limit_ = 0;
    std::size_t stations_ = 0;
    std::vector<ScaledValue> values_;
    std::uint64_t multiplications_ = 0;
};

// Prefix and suffix convolutions over the same station order:
// up.at(n, m) = g_UP over stations 0..m, down.at(n, m) = g_DW over m..M-1.
struct GSplit {
    GTable up;
    GTable down;
};

// Normalization constants by the load-independent three-case recursion.
// Uses at most C_max multiplications per (n, m) entry.
GTable compute_g(std::span<const StationParams> stations, int population);
GTable compute_g(const NetworkModel& model, const VisitRatios& visits, int population);

// Both directions of the truncated convolution sum with limit min(n, c_m).
GSplit compute_g_split(std::span<const StationParams> stations, int population);
GSplit compute_g_split(const NetworkModel& model, const VisitRatios& visits, int population);

// g^[-i](n) for n = 0..N: the constant of the network with station i shorted,
// obtained from the split tables with one convolution step.
std::vector<ScaledValue> g_complement(const GSplit& split, std::size_t i);

}  // namespace skipqn
