#include "output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <iomanip>

namespace skipqn::cli {

namespace {

std::string to_chars_string(double value, std::optional<int> precision) {
    std::array<char, 64> buffer{};
    const auto result = precision ? std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                                  std::chars_format::general, *precision)
                                  : std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), result.ptr);
}

std::string flag_text(const PopulationRows& row, std::size_t i) {
    if (!row.stability_flags) return "";
    return (*row.stability_flags)[i] ? "unstable" : (row.inherited_instability.value_or(false) ? "inherited" : "ok");
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) noexcept {
    if (name == "table") return Format::Table;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    return std::nullopt;
}

std::string format_fixed_digits(double value) { return to_chars_string(value, 12); }

std::string format_shortest(double value) { return to_chars_string(value, std::nullopt); }

void write_table(const ReportDocument& report, std::ostream& out) {
    std::size_t name_width = 7;
    for (const auto& s : report.stations) name_width = std::max(name_width, s.name.size());
    const bool flags = !report.populations.empty() && report.populations.front().stability_flags.has_value();

    out << "solver " << report.solver << " (skipqn " << report.version << ")\n";
    out << std::left << std::setw(static_cast<int>(name_width)) << "station" << std::right << std::setw(6) << "C"
        << std::setw(20) << "service_time" << std::setw(20) << "visit_ratio" << std::setw(20) << "demand" << '\n';
    for (const auto& s : report.stations)
        out << std::left << std::setw(static_cast<int>(name_width)) << s.name << std::right << std::setw(6)
            << s.capacity << std::setw(20) << format_fixed_digits(s.service_time) << std::setw(20)
            << format_fixed_digits(s.visit_ratio) << std::setw(20) << format_fixed_digits(s.demand) << '\n';

    for (const auto& row : report.populations) {
        out << "\npopulation " << row.population << '\n';
        out << std::left << std::setw(static_cast<int>(name_width)) << "station" << std::right;
        for (const char* h : {"X", "X_productive", "X_skipping", "U", "mean_queue", "mean_wait"})
            out << std::setw(20) << h;
        if (flags) out << std::setw(11) << "stability";
        out << '\n';
        for (std::size_t i = 0; i < row.stations.size(); ++i) {
            const auto& r = row.stations[i];
            out << std::left << std::setw(static_cast<int>(name_width)) << report.stations[i].name << std::right;
            for (double v : {r.total_throughput, r.productive_throughput, r.skipping_throughput, r.utilization,
                             r.mean_queue_length, r.mean_waiting_time})
                out << std::setw(20) << format_fixed_digits(v);
            if (flags) out << std::setw(11) << flag_text(row, i);
            out << '\n';
        }
        for (std::size_t i = 0; i < row.stations.size(); ++i) {
            out << "  p[" << report.stations[i].name << "] =";
            for (double p : row.stations[i].distribution) out << ' ' << format_fixed_digits(p);
            out << '\n';
        }
    }
}

void write_csv(const ReportDocument& report, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& row : report.populations) {
        for (std::size_t i = 0; i < row.stations.size(); ++i) {
            const auto& r = row.stations[i];
            out << row.population << ',' << i << ',' << report.stations[i].name;
            for (double v : {r.total_throughput, r.productive_throughput, r.skipping_throughput, r.utilization,
                             r.mean_queue_length, r.mean_waiting_time})
                out << ',' << format_shortest(v);
            out << ',' << flag_text(row, i) << ',';
            for (std::size_t k = 0; k < r.distribution.size(); ++k)
                out << (k ? ";" : "") << format_shortest(r.distribution[k]);
            out << '\n';
        }
    }
}

void write_json(const ReportDocument& report, std::ostream& out) { out << to_json(report).dump(2) << '\n'; }

void write_report(const ReportDocument& report, Format format, std::ostream& out) {
    switch (format) {
        case Format::Table: write_table(report, out); break;
        case Format::Json: write_json(report, out); break;
        case Format::Csv: write_csv(report, out); break;
    }
}

}  // namespace skipqn::cli
