#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_error.hpp"
#include "commands.hpp"
#include "skipqn/version.hpp"

using namespace skipqn::cli;

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for closed queueing networks with finite buffers and skip-over routing", "skipqn"};
    app.set_version_flag("--version", std::string(skipqn::kVersion));
    app.require_subcommand(1);

    const std::vector<std::string> methods{"convolution", "mva", "stable-mva"};
    const std::vector<std::string> formats{"table", "json", "csv"};
    std::string method = "convolution";
    std::string format = "table";

    SolveRequest solve;
    auto* solve_cmd = app.add_subcommand("solve", "Solve the network at one population");
    solve_cmd->add_option("-m,--model", solve.model, "Model JSON file")->required();
    solve_cmd->add_option("-n,--population", solve.population, "Number of customers")->required();
    solve_cmd->add_option("--method", method, "Solver")->check(CLI::IsMember(methods))->capture_default_str();
    solve_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();

    SweepRequest sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Solve every population in a range");
    sweep_cmd->add_option("-m,--model", sweep.model, "Model JSON file")->required();
    sweep_cmd->add_option("--from", sweep.from, "First population")->required();
    sweep_cmd->add_option("--to", sweep.to, "Last population")->required();
    sweep_cmd->add_option("--method", method, "Solver")->check(CLI::IsMember(methods))->capture_default_str();
    sweep_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();

    VerifyRequest verify;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check all solvers against state-space enumeration");
    verify_cmd->add_option("-m,--model", verify.model, "Model JSON file")->required();
    verify_cmd->add_option("-n,--population", verify.population, "Check populations 1..n")->required();
    verify_cmd->add_option("--tolerance", verify.tolerance, "Largest accepted deviation")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(ExitCode::Usage);
    }

    return guarded(
        [&] {
            if (solve_cmd->parsed()) {
                solve.method = *parse_method(method);
                solve.format = *parse_format(format);
                return cmd_solve(solve, std::cout, std::cerr);
            }
            if (sweep_cmd->parsed()) {
                sweep.method = *parse_method(method);
                sweep.format = *parse_format(format);
                return cmd_sweep(sweep, std::cout, std::cerr);
            }
            return cmd_verify(verify, std::cout, std::cerr);
        },
        std::cerr);
}
