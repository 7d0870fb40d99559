#include "skipqn/model.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "skipqn/error.hpp"

namespace skipqn {

namespace {

constexpr double kRowSumTolerance = 1e-12;

std::string station_label(const NetworkModel& model, std::size_t i) {
    std::ostringstream os;
    os << "station " << i;
    if (i < model.stations.size() && !model.stations[i].name.empty())
        os << " ('" << model.stations[i].name << "')";
    return os.str();
}

// Vertices reachable from `start` following positive entries, optionally reversed.
std::vector<bool> reachable(const RoutingMatrix& q, std::size_t start, bool reversed) {
    const std::size_t m = q.size();
    std::vector<bool> seen(m, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < m; ++v) {
            const double w = reversed ? q(v, u) : q(u, v);
            if (w > 0.0 && !seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

}  // namespace

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonStochasticRow: return "NonStochasticRow";
        case ErrorCode::Reducible: return "Reducible";
        case ErrorCode::BadStation: return "BadStation";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::BadReference: return "BadReference";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::InfeasiblePopulation: return "InfeasiblePopulation";
        case ErrorCode::ZeroThroughput: return "ZeroThroughput";
        case ErrorCode::SizeLimit: return "SizeLimit";
    }
    return "Unknown";
}

RoutingMatrix::RoutingMatrix(std::initializer_list<std::initializer_list<double>> rows) {
    std::vector<std::vector<double>> copy;
    copy.reserve(rows.size());
    for (const auto& r : rows) copy.emplace_back(r);
    *this = from_rows(copy);
}

RoutingMatrix RoutingMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    RoutingMatrix q(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            std::ostringstream os;
            os << "routing row " << i << " has " << rows[i].size() << " entries, expected "
               << rows.size();
            throw Error(ErrorCode::DimensionMismatch, os.str());
        }
        std::copy(rows[i].begin(), rows[i].end(), q.entries_.begin() + i * rows.size());
    }
    return q;
}

std::vector<std::vector<double>> RoutingMatrix::to_rows() const {
    std::vector<std::vector<double>> rows(size_);
    for (std::size_t i = 0; i < size_; ++i) rows[i].assign(row(i).begin(), row(i).end());
    return rows;
}

NetworkModel validate_model(NetworkModel raw, const ValidationOptions& options) {
    const std::size_t m = raw.stations.size();
    if (m == 0) throw Error(ErrorCode::DimensionMismatch, "model has no stations");
    if (raw.routing.size() != m) {
        std::ostringstream os;
        os << "routing matrix is " << raw.routing.size() << "x" << raw.routing.size() << " but the model has "
           << m << " stations";
        throw Error(ErrorCode::DimensionMismatch, os.str());
    }
    if (raw.reference >= m) {
        std::ostringstream os;
        os << "reference station index " << raw.reference << " out of range [0, " << m << ")";
        throw Error(ErrorCode::BadReference, os.str());
    }

    for (std::size_t i = 0; i < m; ++i) {
        const StationSpec& s = raw.stations[i];
        if (s.capacity < 1)
            throw Error(ErrorCode::BadStation,
                        station_label(raw, i) + ": capacity must be >= 1, got " + std::to_string(s.capacity));
        const bool service_ok = std::isfinite(s.service_time) &&
                                (s.service_time > 0.0 || (options.allow_zero_service && s.service_time == 0.0));
        if (!service_ok) {
            std::ostringstream os;
            os << station_label(raw, i) << ": service_time must be positive and finite, got " << s.service_time;
            throw Error(ErrorCode::BadStation, os.str());
        }
    }

    long long total_capacity = 0;
    for (const auto& s : raw.stations) total_capacity += s.capacity;
    if (total_capacity > std::numeric_limits<int>::max())
        throw Error(ErrorCode::BadStation, "sum of capacities exceeds the supported range");

    for (std::size_t i = 0; i < m; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double q = raw.routing(i, j);
            if (!std::isfinite(q) || q < 0.0 || q > 1.0) {
                std::ostringstream os;
                os << "routing entry (" << i << ", " << j << ") = " << q << " is not a probability";
                throw Error(ErrorCode::NonStochasticRow, os.str());
            }
            sum += q;
        }
        if (std::fabs(sum - 1.0) > kRowSumTolerance) {
            std::ostringstream os;
            os.precision(17);
            os << "routing row of " << station_label(raw, i) << " sums to " << sum;
            throw Error(ErrorCode::NonStochasticRow, os.str());
        }
        for (std::size_t j = 0; j < m; ++j) raw.routing(i, j) /= sum;
    }

    const auto forward = reachable(raw.routing, 0, false);
    const auto backward = reachable(raw.routing, 0, true);
    for (std::size_t i = 0; i < m; ++i) {
        if (!forward[i] || !backward[i]) {
            throw Error(ErrorCode::Reducible, "routing graph is not strongly connected: " + station_label(raw, i) +
                                                  (forward[i] ? " cannot reach " : " is unreachable from ") +
                                                  station_label(raw, 0));
        }
    }
    return raw;
}

VisitRatios solve_visit_ratios(const NetworkModel& model) {
    const auto m = static_cast<Eigen::Index>(model.size());
    const auto ref = static_cast<Eigen::Index>(model.reference);

    // Balance equations (I - Q)^T V = 0; the reference row is redundant and
    // is replaced by V_ref = 1.
    Eigen::MatrixXd a(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            a(i, j) = (i == j ? 1.0 : 0.0) - model.routing(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
    Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
    a.row(ref).setZero();
    a(ref, ref) = 1.0;
    b(ref) = 1.0;

    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
    if (pivots.minCoeff() <= 1e-13 * std::max(1.0, pivots.maxCoeff()))
        throw Error(ErrorCode::SingularSystem, "visit-ratio system is numerically singular");
    const Eigen::VectorXd v = lu.solve(b);

    VisitRatios result;
    result.values.resize(model.size());
    result.demands.resize(model.size());
    for (std::size_t i = 0; i < model.size(); ++i) {
        const double vi = v(static_cast<Eigen::Index>(i));
        if (!std::isfinite(vi) || vi <= 0.0)
            throw Error(ErrorCode::SingularSystem, "visit ratio of " + station_label(model, i) + " is not positive");
        result.values[i] = vi;
        result.demands[i] = vi * model.stations[i].service_time;
    }
    result.values[model.reference] = 1.0;
    result.demands[model.reference] = model.stations[model.reference].service_time;
    return result;
}

double service_function(const NetworkModel& model, const VisitRatios& visits, std::size_t i, int k) {
    if (k < 0 || k > model.stations[i].capacity) return 0.0;
    return std::pow(visits.demands[i], k);
}

int n_max(const NetworkModel& model) noexcept {
    int total = 0;
    for (const auto& s : model.stations) total += s.capacity;
    return total;
}

std::vector<StationParams> station_params(const NetworkModel& model, const VisitRatios& visits) {
    std::vector<StationParams> out(model.size());
    for (std::size_t i = 0; i < model.size(); ++i)
        out[i] = {model.stations[i].capacity, visits.values[i], model.stations[i].service_time};
    return out;
}

int n_max(std::span<const StationParams> stations) noexcept {
    return std::accumulate(stations.begin(), stations.end(), 0,
                           [](int acc, const StationParams& s) { return acc + s.capacity; });
}

}  // namespace skipqn
