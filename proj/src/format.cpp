#include "univalence/format.hpp"

#include <array>
#include <charconv>

namespace univalence {

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), result.ptr);
}

}  // namespace univalence
