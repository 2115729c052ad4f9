#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace qlab::ring {

// The fixed variable alphabet. Declaration order is the global variable order
// used by the monomial ordering and by canonical printing.
//   q  : base of the q-series
//   t  : stands for q^nu
//   u  : stands for [nu]_q in positivity certificates
//   x,y: column/row markers of skew shapes
//   z  : series variable
//   a,b,c : 2phi1 parameters
//   nu : the classical Bessel parameter
enum class Var : std::uint8_t { q, t, u, x, y, z, a, b, c, nu };

inline constexpr std::size_t kNumVars = 10;

inline constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "q", "t", "u", "x", "y", "z", "a", "b", "c", "nu"};

constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }

constexpr std::string_view name(Var v) { return kVarNames[index(v)]; }

inline std::optional<Var> parse_var(std::string_view s) {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (kVarNames[i] == s) return static_cast<Var>(i);
  return std::nullopt;
}

}  // namespace qlab::ring
