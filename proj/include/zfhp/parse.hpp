#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "zfhp/special.hpp"

namespace zfhp {

// Text forms used on the command line and in manifests. All throw
// InvalidArgument on malformed input.

/// "2", "2+1i", "0.75-5i", "3i", "2+i".
FunctionalPoint parse_point(std::string_view text);

/// Comma-separated points: "2+0i,1.5+0i".
std::vector<FunctionalPoint> parse_point_list(std::string_view text);

/// "RE1,RE2,... x IM1,IM2,...": every re + im*i, real parts outermost.
std::vector<FunctionalPoint> parse_s_grid(std::string_view text);

/// "10,100,1000" or "2..10" (inclusive) or a mix: "2..4,10".
std::vector<std::uint64_t> parse_index_list(std::string_view text);

double parse_real(std::string_view text);

/// "0.25,0.5,0.75".
std::vector<double> parse_real_list(std::string_view text);

}  // namespace zfhp
