#include "qga/core/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <system_error>

#include "qga/core/error.hpp"

namespace qga {

namespace {

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::InvalidArgument, "not a number: '" + std::string(text) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    s = s.substr(0, e);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size()) bad_number(text);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      bad_number(text);
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) bad_number(text);
    digits = std::string(s);
  }
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  boost::multiprecision::mpz_int mantissa(digits);
  boost::multiprecision::mpz_int ten_pow = boost::multiprecision::pow(
      boost::multiprecision::mpz_int(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  Rational value = exponent >= 0 ? Rational(mantissa * ten_pow) : Rational(mantissa, ten_pow);
  return negative ? Rational(-value) : value;
}

}  // namespace

std::string ScalarTraits<double>::to_string(double v) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
  return std::string(buffer, ptr);
}

double ScalarTraits<double>::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    return ScalarTraits<Rational>::parse(s).convert_to<double>();
  }
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) bad_number(text);
  return value;
}

Rational ScalarTraits<Rational>::from_double(double v) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::InvalidArgument, "non-finite value cannot be made exact");
  }
  return Rational(v);
}

std::string ScalarTraits<Rational>::to_string(const Rational& v) {
  return v.str();
}

Rational ScalarTraits<Rational>::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad_number(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(trim(s.substr(0, slash)));
    Rational den = parse_decimal(trim(s.substr(slash + 1)));
    if (den == 0) bad_number(text);
    return num / den;
  }
  return parse_decimal(s);
}

}  // namespace qga
