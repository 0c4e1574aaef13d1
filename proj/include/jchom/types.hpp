#pragma once

#include <complex>
#include <numbers>

namespace jchom {

using complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr complex ii{0.0, 1.0};

} // namespace jchom
