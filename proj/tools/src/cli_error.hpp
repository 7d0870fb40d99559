#pragma once

#include <stdexcept>
#include <string>

namespace skipqn::cli {

enum class ExitCode : int {
    Ok = 0,
    Usage = 1,
    InvalidModel = 2,
    InfeasiblePopulation = 3,
    SizeLimit = 4,
    VerificationFailed = 5,
};

class CliError : public std::runtime_error {
public:
    CliError(ExitCode code, const std::string& message) : std::runtime_error(message), code_(code) {}
    ExitCode code() const noexcept { return code_; }

private:
    ExitCode code_;
};

}  // namespace skipqn::cli
