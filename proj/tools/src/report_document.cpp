#include "report_document.hpp"

#include "skipqn/metrics.hpp"
#include "skipqn/mva.hpp"
#include "skipqn/stable_mva.hpp"
#include "skipqn/version.hpp"

namespace skipqn::cli {

std::string_view to_string(Method method) noexcept {
    switch (method) {
        case Method::Convolution: return "convolution";
        case Method::Mva: return "mva";
        case Method::StableMva: return "stable-mva";
    }
    return "convolution";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
    for (Method m : {Method::Convolution, Method::Mva, Method::StableMva})
        if (to_string(m) == name) return m;
    return std::nullopt;
}

bool ReportDocument::any_stability_flag() const {
    for (const auto& row : populations)
        if (row.stability_flags)
            for (bool f : *row.stability_flags)
                if (f) return true;
    return false;
}

ReportDocument build_report(const NetworkModel& model, Method method, int first, int last) {
    const auto visits = solve_visit_ratios(model);
    ReportDocument doc;
    doc.solver = std::string(to_string(method));
    doc.version = kVersion;
    doc.reference = model.reference;
    for (std::size_t i = 0; i < model.size(); ++i)
        doc.stations.push_back({model.stations[i].name, model.stations[i].capacity, model.stations[i].service_time,
                                visits.values[i], visits.demands[i]});

    const std::size_t m = model.size();
    const auto empty_rows = [m](int n) {
        PopulationRows rows;
        rows.population = n;
        for (std::size_t i = 0; i < m; ++i) rows.stations.push_back(empty_report(i));
        return rows;
    };

    switch (method) {
        case Method::Convolution: {
            const ConvolutionAnalysis analysis(model, visits, last);
            for (int n = first; n <= last; ++n) doc.populations.push_back({n, analysis.reports(n), {}, {}});
            break;
        }
        case Method::Mva: {
            const auto states = run_mva(model, visits, last);
            for (int n = first; n <= last; ++n) {
                if (n == 0) {
                    auto rows = empty_rows(0);
                    rows.stability_flags = std::vector<bool>(m, false);
                    rows.inherited_instability = false;
                    doc.populations.push_back(std::move(rows));
                    continue;
                }
                const MvaState& state = states[static_cast<std::size_t>(n - 1)];
                PopulationRows rows;
                rows.population = n;
                for (std::size_t i = 0; i < m; ++i) rows.stations.push_back(state.report(i));
                rows.stability_flags = state.stability_flag;
                rows.inherited_instability = state.inherited_instability;
                doc.populations.push_back(std::move(rows));
            }
            break;
        }
        case Method::StableMva: {
            const auto result = solve_stable_mva(model, visits, last);
            for (int n = first; n <= last; ++n)
                doc.populations.push_back({n, result.reports[static_cast<std::size_t>(n)], {}, {}});
            break;
        }
    }
    return doc;
}

nlohmann::ordered_json to_json(const ReportDocument& report) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["solver"] = {{"name", report.solver}, {"version", report.version}};

    json stations = json::array();
    for (const auto& s : report.stations)
        stations.push_back({{"name", s.name},
                            {"capacity", s.capacity},
                            {"service_time", s.service_time},
                            {"visit_ratio", s.visit_ratio},
                            {"demand", s.demand}});
    doc["model"] = {{"reference", report.reference}, {"stations", std::move(stations)}};

    json populations = json::array();
    for (const auto& row : report.populations) {
        json rows = json::array();
        for (std::size_t i = 0; i < row.stations.size(); ++i) {
            const auto& r = row.stations[i];
            json entry = {{"station", r.station},
                          {"distribution", r.distribution},
                          {"total_throughput", r.total_throughput},
                          {"productive_throughput", r.productive_throughput},
                          {"skipping_throughput", r.skipping_throughput},
                          {"utilization", r.utilization},
                          {"mean_queue_length", r.mean_queue_length},
                          {"mean_waiting_time", r.mean_waiting_time}};
            if (row.stability_flags) entry["stability_flag"] = static_cast<bool>((*row.stability_flags)[i]);
            rows.push_back(std::move(entry));
        }
        json population = {{"population", row.population}, {"stations", std::move(rows)}};
        if (row.inherited_instability) population["inherited_instability"] = *row.inherited_instability;
        populations.push_back(std::move(population));
    }
    doc["populations"] = std::move(populations);
    if (report.elapsed_seconds) doc["timing"] = {{"elapsed_seconds", *report.elapsed_seconds}};
    return doc;
}

ReportDocument report_from_json(const nlohmann::json& document) {
    ReportDocument report;
    report.solver = document.at("solver").at("name").get<std::string>();
    report.version = document.at("solver").at("version").get<std::string>();
    const auto& model = document.at("model");
    report.reference = model.at("reference").get<std::size_t>();
    for (const auto& s : model.at("stations"))
        report.stations.push_back({s.at("name").get<std::string>(), s.at("capacity").get<int>(),
                                   s.at("service_time").get<double>(), s.at("visit_ratio").get<double>(),
                                   s.at("demand").get<double>()});

    for (const auto& population : document.at("populations")) {
        PopulationRows row;
        row.population = population.at("population").get<int>();
        std::vector<bool> flags;
        for (const auto& entry : population.at("stations")) {
            StationReport r;
            r.station = entry.at("station").get<std::size_t>();
            r.population = row.population;
            r.distribution = entry.at("distribution").get<std::vector<double>>();
            r.total_throughput = entry.at("total_throughput").get<double>();
            r.productive_throughput = entry.at("productive_throughput").get<double>();
            r.skipping_throughput = entry.at("skipping_throughput").get<double>();
            r.utilization = entry.at("utilization").get<double>();
            r.mean_queue_length = entry.at("mean_queue_length").get<double>();
            r.mean_waiting_time = entry.at("mean_waiting_time").get<double>();
            if (entry.contains("stability_flag")) flags.push_back(entry.at("stability_flag").get<bool>());
            row.stations.push_back(std::move(r));
        }
        if (!flags.empty()) row.stability_flags = std::move(flags);
        if (population.contains("inherited_instability"))
            row.inherited_instability = population.at("inherited_instability").get<bool>();
        report.populations.push_back(std::move(row));
    }
    if (document.contains("timing")) report.elapsed_seconds = document.at("timing").at("elapsed_seconds").get<double>();
    return report;
}

}  // namespace skipqn::cli
