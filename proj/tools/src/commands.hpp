#pragma once

#include <filesystem>
#include <functional>
#include <ostream>

#include "output.hpp"
#include "report_document.hpp"

namespace skipqn::cli {

struct SolveRequest {
    std::filesystem::path model;
    int population = 0;
    Method method = Method::Convolution;
    Format format = Format::Table;
};

struct SweepRequest {
    std::filesystem::path model;
    int from = 1;
    int to = 1;
    Method method = Method::Convolution;
    Format format = Format::Table;
};

struct VerifyRequest {
    std::filesystem::path model;
    int population = 0;
    double tolerance = 1e-9;
};

// Each command returns its process exit code; failures are described on err.
int cmd_solve(const SolveRequest& request, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepRequest& request, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyRequest& request, std::ostream& out, std::ostream& err);

// Runs body and maps skipqn::Error / CliError to the documented exit codes.
int guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace skipqn::cli
