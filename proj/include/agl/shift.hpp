#pragma once

#include "agl/var.hpp"

#include <algorithm>
#include <compare>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace agl {

/// Element of the free abelian shift group: prod (delta^v)^{s(v)}, where
/// delta^v sends x_v to x_v - 1 and fixes every other variable.
class ShiftVector {
public:
  using Entry = std::pair<VarId, long>;

  ShiftVector() = default;

  static ShiftVector unit(VarId v, long power = 1)
  {
    ShiftVector s;
    if (power != 0)
      s.entries_.emplace_back(v, power);
    return s;
  }

  static ShiftVector from_entries(std::vector<Entry> entries)
  {
    std::sort(entries.begin(), entries.end());
    ShiftVector s;
    for (const auto& [v, p] : entries) {
      if (!s.entries_.empty() && s.entries_.back().first == v)
        s.entries_.back().second += p;
      else
        s.entries_.emplace_back(v, p);
    }
    std::erase_if(s.entries_, [](const Entry& e) { return e.second == 0; });
    return s;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_identity() const { return entries_.empty(); }

  long operator[](VarId v) const
  {
    for (const auto& [w, p] : entries_)
      if (w == v)
        return p;
    return 0;
  }

  friend ShiftVector operator+(const ShiftVector& a, const ShiftVector& b)
  {
    std::vector<Entry> all = a.entries_;
    all.insert(all.end(), b.entries_.begin(), b.entries_.end());
    return from_entries(std::move(all));
  }
  friend ShiftVector operator-(ShiftVector a)
  {
    for (auto& e : a.entries_)
      e.second = -e.second;
    return a;
  }
  friend ShiftVector operator-(const ShiftVector& a, const ShiftVector& b) { return a + (-b); }

  friend auto operator<=>(const ShiftVector&, const ShiftVector&) = default;
  friend bool operator==(const ShiftVector&, const ShiftVector&) = default;

  /// "e" for the identity, else "d21*d22^-1" (toy shift renders as "d").
  std::string to_string() const
  {
    if (entries_.empty())
      return "e";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, p] : entries_) {
      if (!first)
        os << "*";
      first = false;
      os << "d" << agl::to_string(v).substr(1);
      if (p != 1)
        os << "^" << p;
    }
    return os.str();
  }

  /// JSON key "k,i" (or "x" for the one-variable ring).
  static std::string key_of(VarId v)
  {
    if (v.is_toy())
      return "x";
    return std::to_string(v.row) + "," + std::to_string(v.col);
  }
  static VarId var_of_key(const std::string& key)
  {
    if (key == "x")
      return VarId::toy();
    auto comma = key.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("malformed shift key '" + key + "'");
    return VarId::triangle(std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1)));
  }

private:
  std::vector<Entry> entries_;
};

}  // namespace agl
