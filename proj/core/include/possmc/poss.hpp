#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace possmc {

/// A possibility degree in [0,1], stored exactly as an integer count of
/// millionths. min, max and 1-x never round.
class Poss {
 public:
  static constexpr std::uint32_t kScale = 1'000'000;

  constexpr Poss() noexcept = default;

  /// Throws Error(Range) when `micros` exceeds kScale.
  static Poss from_micros(std::uint32_t micros);

  static constexpr Poss zero() noexcept { return Poss{}; }
  static constexpr Poss one() noexcept {
    Poss p;
    p.micros_ = kScale;
    return p;
  }

  constexpr std::uint32_t micros() const noexcept { return micros_; }
  constexpr bool is_zero() const noexcept { return micros_ == 0; }
  constexpr bool is_one() const noexcept { return micros_ == kScale; }

  /// 1 - x.
  friend constexpr Poss complement(Poss x) noexcept {
    Poss c;
    c.micros_ = kScale - x.micros_;
    return c;
  }

  friend constexpr bool operator==(Poss, Poss) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(Poss, Poss) noexcept = default;

 private:
  std::uint32_t micros_ = 0;
};

/// Parses a decimal numeral such as "0.8" or "1". At most six fractional
/// digits are accepted; throws Error(Parse|Range|Precision).
Poss parse_poss(std::string_view text);

/// Shortest decimal that parses back to the same value ("0.6", "1", "0").
std::string to_string(Poss x);

std::ostream& operator<<(std::ostream& os, Poss x);

namespace literals {
/// 0.5_p; only for values with at most six fractional digits.
Poss operator""_p(long double value);
}  // namespace literals

}  // namespace possmc
