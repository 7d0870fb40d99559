#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skipqn {

enum class ErrorCode {
    NonStochasticRow,
    Reducible,
    BadStation,
    DimensionMismatch,
    BadReference,
    SingularSystem,
    InfeasiblePopulation,
    ZeroThroughput,
    SizeLimit,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace skipqn
