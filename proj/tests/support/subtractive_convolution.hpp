#pragma once

#include <span>

#include "skipqn/convolution.hpp"

namespace skipqn::testing {

// g(n, m) = g(n, m-1) + Y_m g(n-1, m) - Y_m^{c_m+1} g(n-1-c_m, m-1) for n > c_m.
// Prone to cancellation, so it only exists to cross-check compute_g.
GTable compute_g_subtractive(std::span<const StationParams> stations, int population);

}  // namespace skipqn::testing
