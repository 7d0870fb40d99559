#include "model_file.hpp"

#include <fstream>

#include "cli_error.hpp"
#include "skipqn/error.hpp"

namespace skipqn::cli {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
    throw CliError(ExitCode::InvalidModel, "invalid model file: " + what);
}

const nlohmann::json& require(const nlohmann::json& object, const char* key, const std::string& where) {
    const auto it = object.find(key);
    if (it == object.end()) schema_error(where + " is missing \"" + key + "\"");
    return *it;
}

std::size_t resolve_reference(const nlohmann::json& ref, const NetworkModel& model) {
    if (ref.is_string()) {
        const auto name = ref.get<std::string>();
        for (std::size_t i = 0; i < model.stations.size(); ++i)
            if (model.stations[i].name == name) return i;
        throw Error(ErrorCode::BadReference, "reference station \"" + name + "\" does not exist");
    }
    if (ref.is_number_integer()) {
        const auto index = ref.get<long long>();
        if (index < 0 || static_cast<std::size_t>(index) >= model.stations.size())
            throw Error(ErrorCode::BadReference, "reference index " + std::to_string(index) + " is out of range");
        return static_cast<std::size_t>(index);
    }
    schema_error("\"reference\" must be a station name or a zero-based index");
}

}  // namespace

NetworkModel parse_model(const nlohmann::json& document) {
    if (!document.is_object()) schema_error("top level must be an object");
    const auto& stations = require(document, "stations", "model");
    if (!stations.is_array()) schema_error("\"stations\" must be an array");

    NetworkModel model;
    for (std::size_t i = 0; i < stations.size(); ++i) {
        const auto& s = stations[i];
        const std::string where = "station " + std::to_string(i);
        if (!s.is_object()) schema_error(where + " must be an object");
        StationSpec spec;
        spec.name = s.contains("name") ? s.at("name").get<std::string>() : "S" + std::to_string(i + 1);
        const auto& capacity = require(s, "capacity", where);
        const auto& service = require(s, "service_time", where);
        if (!capacity.is_number_integer()) schema_error(where + ": \"capacity\" must be an integer");
        if (!service.is_number()) schema_error(where + ": \"service_time\" must be a number");
        spec.capacity = capacity.get<int>();
        spec.service_time = service.get<double>();
        model.stations.push_back(std::move(spec));
    }

    const auto& routing = require(document, "routing", "model");
    if (!routing.is_array()) schema_error("\"routing\" must be an array of rows");
    std::vector<std::vector<double>> rows;
    for (const auto& row : routing) {
        if (!row.is_array()) schema_error("\"routing\" must be an array of rows");
        std::vector<double> values;
        for (const auto& v : row) {
            if (!v.is_number()) schema_error("routing entries must be numbers");
            values.push_back(v.get<double>());
        }
        rows.push_back(std::move(values));
    }
    model.routing = RoutingMatrix::from_rows(rows);

    if (const auto it = document.find("reference"); it != document.end() && !it->is_null())
        model.reference = resolve_reference(*it, model);

    return validate_model(std::move(model));
}

NetworkModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CliError(ExitCode::Usage, "cannot open model file " + path.string());
    nlohmann::json document;
    try {
        document = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        schema_error(path.string() + ": " + e.what());
    }
    try {
        return parse_model(document);
    } catch (const nlohmann::json::exception& e) {
        schema_error(e.what());
    }
}

nlohmann::json model_to_json(const NetworkModel& model) {
    nlohmann::json doc;
    doc["stations"] = nlohmann::json::array();
    for (const auto& s : model.stations)
        doc["stations"].push_back({{"name", s.name}, {"capacity", s.capacity}, {"service_time", s.service_time}});
    doc["routing"] = model.routing.to_rows();
    doc["reference"] = model.reference;
    return doc;
}

}  // namespace skipqn::cli
