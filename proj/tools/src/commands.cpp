#include "commands.hpp"

#include <chrono>
#include <string>

#include "cli_error.hpp"
#include "model_file.hpp"
#include "skipqn/error.hpp"
#include "verify.hpp"

namespace skipqn::cli {

namespace {

void require_feasible(const NetworkModel& model, int population) {
    const int capacity = n_max(model);
    if (population > capacity)
        throw Error(ErrorCode::InfeasiblePopulation,
                    "population " + std::to_string(population) + " exceeds n_max = " + std::to_string(capacity) +
                        ", the sum of the station capacities");
}

int emit(const NetworkModel& model, Method method, Format format, int first, int last, std::ostream& out,
         std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    ReportDocument report = build_report(model, method, first, last);
    // Timing is the one nondeterministic field, so only JSON carries it.
    if (format == Format::Json)
        report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    write_report(report, format, out);

    if (report.any_stability_flag()) {
        err << "warning: the mva stability flag tripped at population(s)";
        for (const auto& row : report.populations) {
            bool flagged = false;
            for (bool f : *row.stability_flags) flagged = flagged || f;
            if (flagged) err << ' ' << row.population;
        }
        err << "; results from there on may be inaccurate, consider --method stable-mva\n";
    }
    return static_cast<int>(ExitCode::Ok);
}

}  // namespace

int cmd_solve(const SolveRequest& request, std::ostream& out, std::ostream& err) {
    if (request.population < 0) throw CliError(ExitCode::Usage, "population must be non-negative");
    const auto model = load_model(request.model);
    require_feasible(model, request.population);
    return emit(model, request.method, request.format, request.population, request.population, out, err);
}

int cmd_sweep(const SweepRequest& request, std::ostream& out, std::ostream& err) {
    if (request.from < 1) throw CliError(ExitCode::Usage, "--from must be at least 1");
    if (request.from > request.to)
        throw CliError(ExitCode::Usage, "--from (" + std::to_string(request.from) + ") is greater than --to (" +
                                            std::to_string(request.to) + ")");
    const auto model = load_model(request.model);
    require_feasible(model, request.to);
    return emit(model, request.method, request.format, request.from, request.to, out, err);
}

int cmd_verify(const VerifyRequest& request, std::ostream& out, std::ostream& err) {
    if (request.population < 1) throw CliError(ExitCode::Usage, "population must be at least 1");
    const auto model = load_model(request.model);
    require_feasible(model, request.population);
    const auto summary = verify_model(model, request.population, request.tolerance);
    write_verification(summary, out);
    if (!summary.passed) {
        err << "error: verification failed at tolerance " << format_shortest(request.tolerance) << '\n';
        return static_cast<int>(ExitCode::VerificationFailed);
    }
    return static_cast<int>(ExitCode::Ok);
}

int guarded(const std::function<int()>& body, std::ostream& err) {
    try {
        return body();
    } catch (const CliError& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(e.code());
    } catch (const Error& e) {
        switch (e.code()) {
            case ErrorCode::InfeasiblePopulation:
                err << "error: infeasible population: " << e.what() << '\n';
                return static_cast<int>(ExitCode::InfeasiblePopulation);
            case ErrorCode::SizeLimit:
                err << "error: oracle state space too large: " << e.what() << '\n';
                return static_cast<int>(ExitCode::SizeLimit);
            case ErrorCode::ZeroThroughput:
                err << "error: " << e.what() << '\n';
                return static_cast<int>(ExitCode::Usage);
            default:
                err << "error: model validation failed (" << to_string(e.code()) << "): " << e.what() << '\n';
                return static_cast<int>(ExitCode::InvalidModel);
        }
    }
}

}  // namespace skipqn::cli
