#pragma once

#include <compare>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

namespace rterm::exact {

// Half-integer quantum number stored as twice its value, so 3/2 is exact.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int integer_value) : twice_(2 * integer_value) {}

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr int integer_value() const { return twice_ / 2; }
  constexpr double value() const { return twice_ / 2.0; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ - b.twice_);
  }
  constexpr HalfInt operator-() const { return from_twice(-twice_); }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  // "2", "-1" or "3/2"
  std::string to_string() const {
    if (is_integer()) return std::to_string(integer_value());
    return std::to_string(twice_) + "/2";
  }

  // Accepts "2", "-1", "3/2", "-5/2". Rejects anything else.
  static std::optional<HalfInt> parse(std::string_view text);

 private:
  int twice_ = 0;
};

// True when |2m| <= 2j and m - j is an integer, i.e. m is a valid projection.
constexpr bool valid_projection(HalfInt j, HalfInt m) {
  return j.twice() >= 0 && std::abs(m.twice()) <= j.twice() &&
         (j.twice() - m.twice()) % 2 == 0;
}

// Triangle rule |a-b| <= c <= a+b with integer perimeter.
constexpr bool triangle(HalfInt a, HalfInt b, HalfInt c) {
  if (a.twice() < 0 || b.twice() < 0 || c.twice() < 0) return false;
  if ((a.twice() + b.twice() + c.twice()) % 2 != 0) return false;
  return std::abs(a.twice() - b.twice()) <= c.twice() &&
         c.twice() <= a.twice() + b.twice();
}

}  // namespace rterm::exact
