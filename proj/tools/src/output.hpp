#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "report_document.hpp"

namespace skipqn::cli {

enum class Format { Table, Json, Csv };

std::optional<Format> parse_format(std::string_view name) noexcept;

// Twelve significant digits.
std::string format_fixed_digits(double value);
// Shortest text that parses back to the same double.
std::string format_shortest(double value);

void write_table(const ReportDocument& report, std::ostream& out);
void write_csv(const ReportDocument& report, std::ostream& out);
void write_json(const ReportDocument& report, std::ostream& out);
void write_report(const ReportDocument& report, Format format, std::ostream& out);

// Column order of the CSV output.
inline constexpr std::string_view kCsvHeader =
    "population,station,name,total_throughput,productive_throughput,skipping_throughput,utilization,"
    "mean_queue_length,mean_waiting_time,stability_flag,distribution";

}  // namespace skipqn::cli
