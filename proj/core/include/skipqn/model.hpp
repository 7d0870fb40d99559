#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "skipqn/scaled.hpp"

namespace skipqn {

struct StationSpec {
    std::string name;
    int capacity = 1;           // customers, including the one in service
    double service_time = 1.0;  // mean of the exponential service time
};

// Dense row-major M x M matrix of routing probabilities q(i, j).
class RoutingMatrix {
public:
    RoutingMatrix() = default;
    explicit RoutingMatrix(std::size_t size) : size_(size), entries_(size * size, 0.0) {}
    RoutingMatrix(std::initializer_list<std::initializer_list<double>> rows);
    // Throws Error(DimensionMismatch) for ragged or non-square input.
    static RoutingMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return size_; }

    double& operator()(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

    std::span<const double> row(std::size_t i) const {
        return {entries_.data() + i * size_, size_};
    }

    std::vector<std::vector<double>> to_rows() const;

private:
    std::size_t size_ = 0;
    std::vector<double> entries_;
};

struct NetworkModel {
    std::vector<StationSpec> stations;
    RoutingMatrix routing;
    std::size_t reference = 0;

    std::size_t size() const noexcept { return stations.size(); }
};

struct ValidationOptions {
    // Stations with service time exactly 0 ("shorted" stations) are accepted
    // when set. They are only ever built internally, never read from input.
    bool allow_zero_service = false;
};

// Checks every structural invariant and returns the model with rows
// renormalized to sum to exactly 1. Throws Error on violation.
NetworkModel validate_model(NetworkModel raw, const ValidationOptions& options = {});

struct VisitRatios {
    std::vector<double> values;   // V_i, V_reference == 1
    std::vector<double> demands;  // Y_i = V_i * S_i
};

// Solves V = V Q with V_reference pinned to 1.
VisitRatios solve_visit_ratios(const NetworkModel& model);

// f_i(k): 1 at k = 0, Y_i^k up to the capacity, 0 beyond it.
double service_function(const NetworkModel& model, const VisitRatios& visits, std::size_t i,
                        int k);

int n_max(const NetworkModel& model) noexcept;

// Per-station inputs of the solution algorithms, detached from names and
// routing. Every algorithm in the library works on a span of these.
struct StationParams {
    int capacity = 1;
    double visit_ratio = 1.0;
    double service_time = 1.0;

    double demand() const noexcept { return visit_ratio * service_time; }

    ScaledValue service_function(int k) const noexcept {
        if (k < 0 || k > capacity) return ScaledValue::zero();
        return ScaledValue::pow(ScaledValue::from_double(demand()), k);
    }
};

std::vector<StationParams> station_params(const NetworkModel& model, const VisitRatios& visits);

int n_max(std::span<const StationParams> stations) noexcept;

}  // namespace skipqn
