#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace agl {

/// A polynomial indeterminate. Triangle variables x_ki have 1 <= col <= row;
/// the single variable x of the one-variable ring is row = col = 0.
/// Ordering is row-major, so x sorts before every triangle variable.
struct VarId {
  std::uint8_t row = 0;
  std::uint8_t col = 0;

  static constexpr VarId triangle(int k, int i)
  {
    if (k < 1 || i < 1 || i > k || k > 255)
      throw std::out_of_range("triangle variable index out of range");
    return VarId{static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(i)};
  }
  static constexpr VarId toy() { return VarId{0, 0}; }

  constexpr bool is_toy() const { return row == 0; }

  friend constexpr auto operator<=>(const VarId&, const VarId&) = default;
};

inline std::string to_string(VarId v)
{
  if (v.is_toy())
    return "x";
  if (v.row < 10)
    return "x" + std::to_string(v.row) + std::to_string(v.col);
  return "x_" + std::to_string(v.row) + "," + std::to_string(v.col);
}

/// Inverse of to_string: "x", "x21", "x_12,3".
inline VarId parse_var(std::string_view s)
{
  if (s == "x")
    return VarId::toy();
  if (s.size() == 3 && s[0] == 'x' && s[1] >= '1' && s[1] <= '9' && s[2] >= '1' && s[2] <= '9')
    return VarId::triangle(s[1] - '0', s[2] - '0');
  if (s.size() > 2 && s.substr(0, 2) == "x_") {
    auto comma = s.find(',');
    if (comma != std::string_view::npos) {
      int k = std::stoi(std::string(s.substr(2, comma - 2)));
      int i = std::stoi(std::string(s.substr(comma + 1)));
      return VarId::triangle(k, i);
    }
  }
  throw std::invalid_argument("unknown variable '" + std::string(s) + "'");
}

}  // namespace agl
