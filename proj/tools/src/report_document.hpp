#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "skipqn/model.hpp"
#include "skipqn/report.hpp"

namespace skipqn::cli {

enum class Method { Convolution, Mva, StableMva };

std::string_view to_string(Method method) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

struct StationEcho {
    std::string name;
    int capacity = 0;
    double service_time = 0.0;
    double visit_ratio = 0.0;
    double demand = 0.0;

    bool operator==(const StationEcho&) const = default;
};

struct PopulationRows {
    int population = 0;
    std::vector<StationReport> stations;
    // Present only for the mva solver.
    std::optional<std::vector<bool>> stability_flags;
    std::optional<bool> inherited_instability;

    bool operator==(const PopulationRows&) const = default;
};

struct ReportDocument {
    std::string solver;
    std::string version;
    std::size_t reference = 0;
    std::vector<StationEcho> stations;
    std::vector<PopulationRows> populations;
    std::optional<double> elapsed_seconds;

    bool operator==(const ReportDocument&) const = default;

    bool any_stability_flag() const;
};

// Solves populations first..last (0 <= first <= last <= n_max) in one pass.
ReportDocument build_report(const NetworkModel& model, Method method, int first, int last);

// Keys keep a fixed, documented order.
nlohmann::ordered_json to_json(const ReportDocument& report);
ReportDocument report_from_json(const nlohmann::json& document);

}  // namespace skipqn::cli
