#include "exact/half_int.hpp"

#include <charconv>

namespace rterm::exact {

namespace {

std::optional<int> parse_int(std::string_view text) {
  if (text.empty()) return std::nullopt;
  int value = 0;
  const char *first = text.data();
  const char *last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

std::optional<HalfInt> HalfInt::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (auto n = parse_int(text)) return HalfInt(*n);
    return std::nullopt;
  }
  const auto num = parse_int(text.substr(0, slash));
  const auto den = parse_int(text.substr(slash + 1));
  if (!num || !den) return std::nullopt;
  if (*den == 2) return from_twice(*num);
  if (*den == 1) return HalfInt(*num);
  return std::nullopt;
}

}  // namespace rterm::exact
