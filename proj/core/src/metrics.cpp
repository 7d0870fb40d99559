#include "skipqn/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "skipqn/error.hpp"

namespace skipqn {

ConvolutionAnalysis::ConvolutionAnalysis(std::vector<StationParams> stations, int population_limit)
    : stations_(std::move(stations)),
      n_max_(skipqn::n_max(stations_)),
      table_(compute_g(stations_, population_limit)),
      split_(compute_g_split(stations_, population_limit)) {
    const std::size_t m = stations_.size();
    complements_.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (m >= 2 && i == m - 1) {
            // The last station reads g(., M-1) straight from the main table.
            const auto col = table_.column(m - 2);
            complements_.emplace_back(col.begin(), col.end());
        } else {
            complements_.push_back(g_complement(split_, i));
        }
    }
}

ConvolutionAnalysis::ConvolutionAnalysis(const NetworkModel& model, const VisitRatios& visits, int population_limit)
    : ConvolutionAnalysis(station_params(model, visits), population_limit) {}

void ConvolutionAnalysis::require_feasible(int n) const {
    if (n < 0 || n > n_max_)
        throw Error(ErrorCode::InfeasiblePopulation,
                    "population " + std::to_string(n) + " exceeds the total capacity " + std::to_string(n_max_));
    if (n > population_limit())
        throw std::out_of_range("population " + std::to_string(n) + " beyond the computed table limit " +
                                std::to_string(population_limit()));
}

std::vector<double> ConvolutionAnalysis::queue_length_distribution(std::size_t i, int n) const {
    require_feasible(n);
    const StationParams& s = stations_[i];
    const int top = std::min(n, s.capacity);
    std::vector<double> p(static_cast<std::size_t>(top + 1));
    const ScaledValue g = table_.total(n);
    const ScaledValue y = ScaledValue::from_double(s.demand());
    const auto& comp = complements_[i];
    ScaledValue f = ScaledValue::one();
    for (int k = 0; k <= top; ++k) {
        p[static_cast<std::size_t>(k)] = ratio(f * comp[static_cast<std::size_t>(n - k)], g);
        f = f * y;
    }
    return p;
}

double ConvolutionAnalysis::total_throughput(std::size_t i, int n) const {
    require_feasible(n);
    if (n == 0) return 0.0;
    return stations_[i].visit_ratio * ratio(table_.total(n - 1), table_.total(n));
}

double ConvolutionAnalysis::utilization(std::size_t i, int n) const {
    const auto p = queue_length_distribution(i, n);
    double busy = 0.0;
    for (std::size_t k = 1; k < p.size(); ++k) busy += p[k];
    return busy;
}

double ConvolutionAnalysis::productive_throughput(std::size_t i, int n) const {
    if (stations_[i].service_time == 0.0) return total_throughput(i, n) - skipping_throughput(i, n);
    return utilization(i, n) / stations_[i].service_time;
}

double ConvolutionAnalysis::productive_throughput_by_summation(std::size_t i, int n) const {
    require_feasible(n);
    if (n == 0) return 0.0;
    const StationParams& s = stations_[i];
    if (n <= s.capacity) return total_throughput(i, n);
    const ScaledValue y = ScaledValue::from_double(s.demand());
    const auto& comp = complements_[i];
    ScaledValue sum;
    ScaledValue power = ScaledValue::one();
    for (int h = 0; h < s.capacity; ++h) {
        sum += power * comp[static_cast<std::size_t>(n - 1 - h)];
        power = power * y;
    }
    return s.visit_ratio * ratio(sum, table_.total(n));
}

double ConvolutionAnalysis::skipping_throughput(std::size_t i, int n) const {
    require_feasible(n);
    const StationParams& s = stations_[i];
    if (n <= s.capacity) return 0.0;
    const ScaledValue y_to_c = ScaledValue::pow(ScaledValue::from_double(s.demand()), s.capacity);
    const ScaledValue numerator = y_to_c * complements_[i][static_cast<std::size_t>(n - 1 - s.capacity)];
    return s.visit_ratio * ratio(numerator, table_.total(n));
}

StationReport ConvolutionAnalysis::report(std::size_t i, int n) const {
    require_feasible(n);
    if (n == 0) return empty_report(i);
    StationReport r;
    r.station = i;
    r.population = n;
    r.distribution = queue_length_distribution(i, n);
    r.total_throughput = total_throughput(i, n);
    r.skipping_throughput = skipping_throughput(i, n);
    double busy = 0.0;
    for (std::size_t k = 1; k < r.distribution.size(); ++k) busy += r.distribution[k];
    r.utilization = busy;
    r.productive_throughput = stations_[i].service_time == 0.0 ? r.total_throughput - r.skipping_throughput
                                                               : busy / stations_[i].service_time;
    r.mean_queue_length = mean_queue_length(r.distribution);
    r.mean_waiting_time = mean_waiting_time(r.mean_queue_length, r.total_throughput);
    return r;
}

std::vector<StationReport> ConvolutionAnalysis::reports(int n) const {
    std::vector<StationReport> out;
    out.reserve(stations_.size());
    for (std::size_t i = 0; i < stations_.size(); ++i) out.push_back(report(i, n));
    return out;
}

double mean_queue_length(std::span<const double> distribution) {
    double sum = 0.0;
    for (std::size_t k = 1; k < distribution.size(); ++k) sum += static_cast<double>(k) * distribution[k];
    return sum;
}

double mean_waiting_time(double mean_queue_length, double total_throughput) {
    if (!(total_throughput > 0.0))
        throw Error(ErrorCode::ZeroThroughput, "mean waiting time is undefined at zero throughput");
    return mean_queue_length / total_throughput;
}

}  // namespace skipqn
