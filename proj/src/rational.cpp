#include "realstruct/rational.hpp"

#include <cctype>

namespace realstruct {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (!text.empty() && text.front() == '-')
    throw std::invalid_argument("rational '" + std::string(text) + "': negative value");
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!all_digits(num))
    throw std::invalid_argument("rational '" + std::string(text) + "': malformed");
  if (slash == std::string_view::npos)
    return Rational(mp::cpp_int(std::string(num)), mp::cpp_int(1));
  std::string_view den = text.substr(slash + 1);
  if (!all_digits(den))
    throw std::invalid_argument("rational '" + std::string(text) + "': malformed");
  mp::cpp_int d{std::string(den)};
  if (d == 0)
    throw std::invalid_argument("rational '" + std::string(text) + "': zero denominator");
  return Rational(mp::cpp_int(std::string(num)), d);
}

std::string to_string(const Rational& r) {
  const auto num = numerator(r.value());
  const auto den = denominator(r.value());
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace realstruct
