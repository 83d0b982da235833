#include "tempfair/rational.hpp"

#include <algorithm>
#include <cctype>

namespace tempfair {

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(text)) return std::nullopt;
    return Rational(BigInt(std::string(text)));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
  BigInt d{std::string(den)};
  if (d == 0) return std::nullopt;
  // cpp_rational normalizes sign and reduces to lowest terms on construction.
  return Rational(BigInt(std::string(num)), d);
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace tempfair
