#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace witt {

/// Index of a symbol in the process-wide symbol registry. Smaller indices are
/// more significant in the monomial order.
using Var = std::uint16_t;

namespace var {
inline constexpr Var a = 0;
inline constexpr Var b = 1;
inline constexpr int kMaxGenerators = 8;
/// Grading generator g_i, 1 <= i <= kMaxGenerators.
constexpr Var g(int i) { return static_cast<Var>(1 + i); }
inline constexpr Var alpha = 10;
inline constexpr Var beta = 11;
inline constexpr Var x = 12;
inline constexpr Var y = 13;
inline constexpr Var aprime = 14;
inline constexpr Var mu = 15;
inline constexpr Var nu = 16;
inline constexpr Var lambda = 17;
}  // namespace var

// The registry is append-only and safe to use from several threads.
Var intern(std::string_view name);
std::optional<Var> find_symbol(std::string_view name);
std::string symbol_name(Var v);

}  // namespace witt
