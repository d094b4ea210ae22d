#pragma once

#include <string>

namespace univalence {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double x);

}  // namespace univalence
