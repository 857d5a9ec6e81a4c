#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace qga {

// Exact rationals; expression templates are off so generic code can use auto.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Float-mode thresholds. `zero` drops coefficients after every operation,
// `compare` is used by equality and proportionality predicates.
struct Tolerance {
  double zero = 1e-12;
  double compare = 1e-9;
};

struct ScalarMode {
  enum class Kind { Float64, ExactRational };
  Kind kind = Kind::Float64;
  Tolerance tolerance{};
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr ScalarMode::Kind kind = ScalarMode::Kind::Float64;

  static bool is_zero(double v, double eps) { return std::abs(v) <= eps; }
  static double to_double(double v) { return v; }
  static double from_double(double v) { return v; }
  // Shortest representation that round-trips.
  static std::string to_string(double v);
  static double parse(std::string_view text);
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr ScalarMode::Kind kind = ScalarMode::Kind::ExactRational;

  static bool is_zero(const Rational& v, double) { return v == 0; }
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
  // Exact binary value of the double.
  static Rational from_double(double v);
  // "p/q", or "p" for integers.
  static std::string to_string(const Rational& v);
  // Accepts "p/q", integers and decimal notation ("0.25", "-1.5e-3"), all exactly.
  static Rational parse(std::string_view text);
};

template <class S>
S abs_value(const S& v) {
  return v < 0 ? S(-v) : v;
}

}  // namespace qga
