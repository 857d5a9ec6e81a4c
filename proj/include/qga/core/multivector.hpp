#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qga/core/algebra.hpp"
#include "qga/core/basis.hpp"
#include "qga/core/scalar.hpp"

namespace qga {

// Sparse element of a Clifford algebra: basis monomial -> coefficient. No
// negligible coefficient is ever stored. Values are immutable in spirit;
// the compound operators exist for building them up.
template <class S>
class Multivector {
 public:
  using Scalar = S;
  using TermMap = std::map<BasisMonomial, S>;

  explicit Multivector(AlgebraPtr<S> algebra);
  Multivector(AlgebraPtr<S> algebra, TermMap terms);

  static Multivector scalar(AlgebraPtr<S> algebra, S value);
  // e_index (1-based) scaled by `coeff`.
  static Multivector generator(AlgebraPtr<S> algebra, int index, S coeff = S(1));
  static Multivector monomial(AlgebraPtr<S> algebra, BasisMonomial m, S coeff = S(1));
  // Grade-1 element sum_i coeffs[i] e_{i+1}.
  static Multivector vector(AlgebraPtr<S> algebra, std::span<const S> coeffs);

  const AlgebraPtr<S>& algebra() const noexcept { return algebra_; }
  const TermMap& terms() const noexcept { return terms_; }
  S coefficient(BasisMonomial m) const;
  S coefficient(std::initializer_list<int> indices) const {
    return coefficient(BasisMonomial::from_indices(indices));
  }
  S scalar_part() const { return coefficient(BasisMonomial{}); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_scalar() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.mask() == 0);
  }
  // The single grade present, if homogeneous (zero has no grade).
  std::optional<int> homogeneous_grade() const;
  bool is_even() const;
  bool is_odd() const;
  // Coefficients of e_1..e_dim; requires nothing, ignores other grades.
  std::vector<S> vector_coefficients() const;
  S max_abs_coefficient() const;

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(const S& factor);
  Multivector& operator/=(const S& divisor);

  // Exact term-wise equality (same algebra metric).
  bool operator==(const Multivector& rhs) const;

  std::string to_string() const;

 private:
  void prune();

  AlgebraPtr<S> algebra_;
  TermMap terms_;
};

template <class S>
Multivector<S> operator+(Multivector<S> lhs, const Multivector<S>& rhs) { return lhs += rhs; }
template <class S>
Multivector<S> operator-(Multivector<S> lhs, const Multivector<S>& rhs) { return lhs -= rhs; }
template <class S>
Multivector<S> operator*(Multivector<S> lhs, const S& rhs) { return lhs *= rhs; }
template <class S>
Multivector<S> operator*(const S& lhs, Multivector<S> rhs) { return rhs *= lhs; }
template <class S>
Multivector<S> operator/(Multivector<S> lhs, const S& rhs) { return lhs /= rhs; }

// Throws MetricMismatch unless both operands live over the same metric.
template <class S>
void require_same_algebra(const Multivector<S>& a, const Multivector<S>& b);

// Geometric product of two basis monomials by normal ordering, without the
// Cayley cache. Recurses from the right, A (R ^ e_j) = (A R) e_j - A (R _| e_j),
// the mirror image of the recursion that fills the table.
template <class S>
Multivector<S> monomial_product(BasisMonomial a, BasisMonomial b, const AlgebraPtr<S>& algebra);

template <class S>
Multivector<S> geometric_product(const Multivector<S>& a, const Multivector<S>& b);
template <class S>
Multivector<S> operator*(const Multivector<S>& a, const Multivector<S>& b) {
  return geometric_product(a, b);
}

template <class S>
Multivector<S> grade_project(const Multivector<S>& a, int grade);

// Sum over grade parts of [A_k B_l]_{k+l}. Computed combinatorially; the
// outer product does not depend on the metric.
template <class S>
Multivector<S> outer_product(const Multivector<S>& a, const Multivector<S>& b);

// Sum over grade parts of [A_k B_l]_{|k-l|}.
template <class S>
Multivector<S> inner_product(const Multivector<S>& a, const Multivector<S>& b);

// Anti-automorphism with e_i* = -e_i.
template <class S>
Multivector<S> conjugate(const Multivector<S>& a);
template <class S>
Multivector<S> main_involution(const Multivector<S>& a);
template <class S>
Multivector<S> reverse(const Multivector<S>& a);

// N(v) = v v*. Throws NotScalar when the product has a non-scalar part,
// i.e. when v is not a versor.
template <class S>
S norm(const Multivector<S>& v);

// v* / N(v) for 1-blades and versors. Throws NullElement when N(v) = 0.
template <class S>
Multivector<S> versor_inverse(const Multivector<S>& v);

// |a - b| <= compare * max(1, |a|, |b|) coefficient-wise; exact for rationals.
template <class S>
bool approx_equal(const Multivector<S>& a, const Multivector<S>& b);

// Nonzero lambda with a = lambda b, when one exists (within tolerance in
// float mode). Two zero multivectors are not proportional.
template <class S>
std::optional<S> proportionality_factor(const Multivector<S>& a, const Multivector<S>& b);

template <class S>
bool proportional(const Multivector<S>& a, const Multivector<S>& b) {
  return proportionality_factor(a, b).has_value();
}

// Within the compare tolerance, relative to `scale`.
template <class S>
bool approx_zero(const Multivector<S>& a, const S& scale);

}  // namespace qga
