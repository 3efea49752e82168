#pragma once

#include <string_view>

#include "janowski/types.hpp"

namespace janowski::cli {

// Reals: "0.5", "-2e-3", "pi", "0.25pi".
double parse_real(std::string_view text);

// "a", "bi", "a+bi", "a-bi", "i", "-i", polar "r@theta"; every real part may carry "pi".
Complex parse_complex(std::string_view text);

}  // namespace janowski::cli
