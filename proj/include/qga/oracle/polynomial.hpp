#pragma once

#include <map>
#include <string>
#include <vector>

#include "qga/core/basis.hpp"
#include "qga/core/scalar.hpp"

namespace qga {

// Sparse polynomial in x1..xn: exponent tuple -> coefficient.
template <class S>
class ImplicitPolynomial {
 public:
  using Exponents = std::vector<int>;

  explicit ImplicitPolynomial(int vars = 0) : vars_(vars) {}

  static ImplicitPolynomial constant(int vars, const S& c);
  static ImplicitPolynomial variable(int vars, int index, const S& c = S(1));
  // c * x_index^2
  static ImplicitPolynomial square(int vars, int index, const S& c = S(1));

  int vars() const noexcept { return vars_; }
  const std::map<Exponents, S>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  S coefficient(const Exponents& e) const;
  int degree_in(int index) const;
  S max_abs_coefficient() const;

  void add_term(const Exponents& e, const S& c);

  ImplicitPolynomial& operator+=(const ImplicitPolynomial& rhs);
  ImplicitPolynomial& operator-=(const ImplicitPolynomial& rhs);
  ImplicitPolynomial& operator*=(const S& c);
  ImplicitPolynomial operator*(const ImplicitPolynomial& rhs) const;
  friend ImplicitPolynomial operator+(ImplicitPolynomial a, const ImplicitPolynomial& b) { return a += b; }
  friend ImplicitPolynomial operator-(ImplicitPolynomial a, const ImplicitPolynomial& b) { return a -= b; }
  friend ImplicitPolynomial operator*(ImplicitPolynomial a, const S& c) { return a *= c; }
  bool operator==(const ImplicitPolynomial&) const = default;

  S evaluate(const std::vector<S>& x) const;
  double evaluate_double(const std::vector<double>& x) const;

  // "x^2 + y^2 - 1"; variables are x, y, z for n <= 3 and x1, x2, ... beyond.
  std::string to_string() const;

 private:
  int vars_;
  std::map<Exponents, S> terms_;
};

// a = lambda b for a nonzero lambda (exact in rational mode, 1e-9 otherwise).
template <class S>
bool proportional(const ImplicitPolynomial<S>& a, const ImplicitPolynomial<S>& b);

std::string variable_name(int index, int vars);

template <class S>
struct PolynomialSystem {
  int vars = 0;
  std::vector<std::pair<BasisMonomial, ImplicitPolynomial<S>>> components;

  std::vector<S> evaluate(const std::vector<S>& x) const;
  // The nonzero components up to scale: the span dimension.
  std::size_t rank() const;
};

extern template class ImplicitPolynomial<double>;
extern template class ImplicitPolynomial<Rational>;

}  // namespace qga
