#pragma once

#include <string>

namespace zfhp {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double x);

}  // namespace zfhp
