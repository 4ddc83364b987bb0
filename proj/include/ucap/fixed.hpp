#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ucap {

// Penalties, credits, and scores use fixed-point arithmetic with four decimal
// digits. Integer units keep elitist score comparisons and the delta
// evaluation path exact; binary floating point would make strict-improvement
// tie behavior platform-dependent.
inline constexpr std::int64_t kFixedScale = 10000;

struct Fixed {
  std::int64_t units = 0;

  static constexpr Fixed from_units(std::int64_t u) { return Fixed{u}; }

  // Parses a non-negative decimal literal with at most four fractional
  // digits ("3", "0.3", "1.25"). Throws std::invalid_argument otherwise.
  static Fixed parse(std::string_view text);

  constexpr double value() const {
    return static_cast<double>(units) / static_cast<double>(kFixedScale);
  }

  // Canonical decimal form with trailing zeros trimmed; parse(str())
  // round-trips exactly.
  std::string str() const;

  constexpr auto operator<=>(const Fixed&) const = default;
  constexpr Fixed operator+(Fixed o) const { return Fixed{units + o.units}; }
  constexpr Fixed operator-(Fixed o) const { return Fixed{units - o.units}; }
  constexpr Fixed operator*(std::int64_t k) const { return Fixed{units * k}; }
  constexpr Fixed& operator+=(Fixed o) {
    units += o.units;
    return *this;
  }
};

// Solution score as an exact rational: numer is the summed clamped
// per-faculty units, denom is kFixedScale * n_f. Comparisons cross-multiply
// in 128-bit so scores over different instances stay exact too.
struct Score {
  std::int64_t numer = 0;
  std::int64_t denom = kFixedScale;

  constexpr double value() const {
    return denom == 0 ? 0.0
                      : static_cast<double>(numer) / static_cast<double>(denom);
  }

  friend constexpr bool operator==(const Score& a, const Score& b) {
    return static_cast<__int128>(a.numer) * b.denom ==
           static_cast<__int128>(b.numer) * a.denom;
  }
  friend constexpr std::strong_ordering operator<=>(const Score& a,
                                                    const Score& b) {
    const __int128 l = static_cast<__int128>(a.numer) * b.denom;
    const __int128 r = static_cast<__int128>(b.numer) * a.denom;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

}  // namespace ucap
