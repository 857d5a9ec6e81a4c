#include "qga/core/multivector.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "qga/core/error.hpp"

namespace qga {

namespace {

// (-1)^(k(k-1)/2)
int reversion_sign(int grade) { return ((grade * (grade - 1) / 2) & 1) ? -1 : 1; }

template <class S>
void accumulate(std::map<Mask, S>& acc, const Terms<S>& terms, const S& factor) {
  for (const auto& [m, c] : terms) acc[m] += factor * c;
}

}  // namespace

template <class S>
Multivector<S>::Multivector(AlgebraPtr<S> algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw Error(ErrorCode::InvalidArgument, "multivector needs an algebra");
}

template <class S>
Multivector<S>::Multivector(AlgebraPtr<S> algebra, TermMap terms)
    : algebra_(std::move(algebra)), terms_(std::move(terms)) {
  if (!algebra_) throw Error(ErrorCode::InvalidArgument, "multivector needs an algebra");
  const std::size_t dim = algebra_->dim();
  for (const auto& [m, c] : terms_) {
    if (dim < 64 && (m.mask() >> dim) != 0) {
      throw Error(ErrorCode::InvalidArgument, "basis monomial " + m.name() + " exceeds the algebra dimension");
    }
  }
  prune();
}

template <class S>
Multivector<S> Multivector<S>::scalar(AlgebraPtr<S> algebra, S value) {
  return Multivector(std::move(algebra), TermMap{{BasisMonomial{}, std::move(value)}});
}

template <class S>
Multivector<S> Multivector<S>::generator(AlgebraPtr<S> algebra, int index, S coeff) {
  if (index < 1 || static_cast<std::size_t>(index) > algebra->dim()) {
    throw Error(ErrorCode::InvalidArgument, "generator index out of range: " + std::to_string(index));
  }
  return Multivector(std::move(algebra), TermMap{{BasisMonomial(bit(index - 1)), std::move(coeff)}});
}

template <class S>
Multivector<S> Multivector<S>::monomial(AlgebraPtr<S> algebra, BasisMonomial m, S coeff) {
  return Multivector(std::move(algebra), TermMap{{m, std::move(coeff)}});
}

template <class S>
Multivector<S> Multivector<S>::vector(AlgebraPtr<S> algebra, std::span<const S> coeffs) {
  if (coeffs.size() > algebra->dim()) {
    throw Error(ErrorCode::DimensionMismatch, "too many vector coefficients");
  }
  TermMap terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    terms.emplace(BasisMonomial(bit(static_cast<int>(i))), coeffs[i]);
  }
  return Multivector(std::move(algebra), std::move(terms));
}

template <class S>
S Multivector<S>::coefficient(BasisMonomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? S(0) : it->second;
}

template <class S>
std::optional<int> Multivector<S>::homogeneous_grade() const {
  if (terms_.empty()) return std::nullopt;
  const int g = terms_.begin()->first.grade();
  for (const auto& [m, c] : terms_) {
    if (m.grade() != g) return std::nullopt;
  }
  return g;
}

template <class S>
bool Multivector<S>::is_even() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.grade() % 2 == 0; });
}

template <class S>
bool Multivector<S>::is_odd() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.grade() % 2 == 1; });
}

template <class S>
std::vector<S> Multivector<S>::vector_coefficients() const {
  std::vector<S> out(algebra_->dim(), S(0));
  for (const auto& [m, c] : terms_) {
    if (m.grade() == 1) out[static_cast<std::size_t>(std::countr_zero(m.mask()))] = c;
  }
  return out;
}

template <class S>
S Multivector<S>::max_abs_coefficient() const {
  S best(0);
  for (const auto& [m, c] : terms_) best = std::max(best, abs_value(c));
  return best;
}

template <class S>
Multivector<S> Multivector<S>::operator-() const {
  Multivector out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

template <class S>
Multivector<S>& Multivector<S>::operator+=(const Multivector& rhs) {
  require_same_algebra(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) terms_[m] += c;
  prune();
  return *this;
}

template <class S>
Multivector<S>& Multivector<S>::operator-=(const Multivector& rhs) {
  require_same_algebra(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) terms_[m] -= c;
  prune();
  return *this;
}

template <class S>
Multivector<S>& Multivector<S>::operator*=(const S& factor) {
  for (auto& [m, c] : terms_) c *= factor;
  prune();
  return *this;
}

template <class S>
Multivector<S>& Multivector<S>::operator/=(const S& divisor) {
  if (divisor == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  for (auto& [m, c] : terms_) c /= divisor;
  prune();
  return *this;
}

template <class S>
bool Multivector<S>::operator==(const Multivector& rhs) const {
  return algebra_->metric() == rhs.algebra_->metric() && terms_ == rhs.terms_;
}

template <class S>
std::string Multivector<S>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff = ScalarTraits<S>::to_string(c);
    const bool negative = !coeff.empty() && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (m.mask() == 0) {
      out << coeff;
    } else if (coeff == "1") {
      out << m.name();
    } else {
      out << coeff << '*' << m.name();
    }
  }
  return out.str();
}

template <class S>
void Multivector<S>::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (algebra_->negligible(it->second)) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

template <class S>
void require_same_algebra(const Multivector<S>& a, const Multivector<S>& b) {
  if (a.algebra() == b.algebra()) return;
  if (!(a.algebra()->metric() == b.algebra()->metric())) {
    throw Error(ErrorCode::MetricMismatch, "operands belong to algebras with different metrics");
  }
}

template <class S>
Multivector<S> monomial_product(BasisMonomial a, BasisMonomial b, const AlgebraPtr<S>& algebra) {
  const Metric<S>& g = algebra->metric();
  // Right recursion on b; returns an accumulation map.
  auto rec = [&](auto&& self, Mask am, Mask bm) -> std::map<Mask, S> {
    if (bm == 0) return {{am, S(1)}};
    const int j = 63 - std::countl_zero(bm);
    const Mask rest = bm ^ bit(j);
    std::map<Mask, S> acc;
    for (const auto& [m, c] : self(self, am, rest)) {
      if (c == 0) continue;
      // m _| e_j, sign counts generators of m after k
      for (int k : algebra->partners(j)) {
        if (!(m & bit(k))) continue;
        const int after = std::popcount(m >> k >> 1);
        const S term = g(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) * c;
        acc[m ^ bit(k)] += (after & 1) ? S(-term) : term;
      }
      // m ^ e_j
      if (!(m & bit(j))) {
        const int after = std::popcount(m >> j >> 1);
        acc[m | bit(j)] += (after & 1) ? S(-c) : c;
      }
    }
    for (int k : algebra->partners(j)) {
      if (!(rest & bit(k))) continue;
      const int after = std::popcount(rest >> k >> 1);
      const S& bkj = g(static_cast<std::size_t>(k), static_cast<std::size_t>(j));
      const S factor = (after & 1) ? S(-bkj) : bkj;
      for (const auto& [m, c] : self(self, am, rest ^ bit(k))) acc[m] -= factor * c;
    }
    return acc;
  };
  typename Multivector<S>::TermMap terms;
  for (auto& [m, c] : rec(rec, a.mask(), b.mask())) terms.emplace(BasisMonomial(m), std::move(c));
  return Multivector<S>(algebra, std::move(terms));
}

template <class S>
Multivector<S> geometric_product(const Multivector<S>& a, const Multivector<S>& b) {
  require_same_algebra(a, b);
  const Algebra<S>& alg = *a.algebra();
  std::map<Mask, S> acc;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      accumulate(acc, alg.product(ma.mask(), mb.mask()), S(ca * cb));
    }
  }
  typename Multivector<S>::TermMap terms;
  for (auto& [m, c] : acc) terms.emplace_hint(terms.end(), BasisMonomial(m), std::move(c));
  return Multivector<S>(a.algebra(), std::move(terms));
}

template <class S>
Multivector<S> grade_project(const Multivector<S>& a, int grade) {
  if (grade < 0 || static_cast<std::size_t>(grade) > a.algebra()->dim()) {
    throw Error(ErrorCode::GradeOutOfRange, "grade " + std::to_string(grade) + " out of range");
  }
  typename Multivector<S>::TermMap terms;
  for (const auto& [m, c] : a.terms()) {
    if (m.grade() == grade) terms.emplace_hint(terms.end(), m, c);
  }
  return Multivector<S>(a.algebra(), std::move(terms));
}

template <class S>
Multivector<S> outer_product(const Multivector<S>& a, const Multivector<S>& b) {
  require_same_algebra(a, b);
  typename Multivector<S>::TermMap terms;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.mask() & mb.mask()) continue;
      const S c = ca * cb;
      terms[BasisMonomial(ma.mask() | mb.mask())] += reorder_sign(ma.mask(), mb.mask()) < 0 ? S(-c) : c;
    }
  }
  return Multivector<S>(a.algebra(), std::move(terms));
}

template <class S>
Multivector<S> inner_product(const Multivector<S>& a, const Multivector<S>& b) {
  require_same_algebra(a, b);
  const Algebra<S>& alg = *a.algebra();
  std::map<Mask, S> acc;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int target = std::abs(ma.grade() - mb.grade());
      const S f = ca * cb;
      for (const auto& [m, c] : alg.product(ma.mask(), mb.mask())) {
        if (std::popcount(m) == target) acc[m] += f * c;
      }
    }
  }
  typename Multivector<S>::TermMap terms;
  for (auto& [m, c] : acc) terms.emplace_hint(terms.end(), BasisMonomial(m), std::move(c));
  return Multivector<S>(a.algebra(), std::move(terms));
}

template <class S>
Multivector<S> conjugate(const Multivector<S>& a) {
  typename Multivector<S>::TermMap terms;
  for (const auto& [m, c] : a.terms()) {
    const int k = m.grade();
    const int sign = ((k & 1) ? -1 : 1) * reversion_sign(k);
    terms.emplace_hint(terms.end(), m, sign < 0 ? S(-c) : c);
  }
  return Multivector<S>(a.algebra(), std::move(terms));
}

template <class S>
Multivector<S> main_involution(const Multivector<S>& a) {
  typename Multivector<S>::TermMap terms;
  for (const auto& [m, c] : a.terms()) {
    terms.emplace_hint(terms.end(), m, (m.grade() & 1) ? S(-c) : c);
  }
  return Multivector<S>(a.algebra(), std::move(terms));
}

template <class S>
Multivector<S> reverse(const Multivector<S>& a) {
  typename Multivector<S>::TermMap terms;
  for (const auto& [m, c] : a.terms()) {
    terms.emplace_hint(terms.end(), m, reversion_sign(m.grade()) < 0 ? S(-c) : c);
  }
  return Multivector<S>(a.algebra(), std::move(terms));
}

template <class S>
S norm(const Multivector<S>& v) {
  const Multivector<S> n = geometric_product(v, conjugate(v));
  const Multivector<S> rest = n - Multivector<S>::scalar(v.algebra(), n.scalar_part());
  if (!approx_zero(rest, std::max(S(1), v.max_abs_coefficient() * v.max_abs_coefficient()))) {
    throw Error(ErrorCode::NotScalar, "v v* is not a scalar: " + n.to_string());
  }
  return n.scalar_part();
}

template <class S>
Multivector<S> versor_inverse(const Multivector<S>& v) {
  const S n = norm(v);
  const S scale = std::max(S(1), v.max_abs_coefficient() * v.max_abs_coefficient());
  if (ScalarTraits<S>::is_zero(n, v.algebra()->tolerance().compare * ScalarTraits<S>::to_double(scale))) {
    throw Error(ErrorCode::NullElement, "element with zero norm is not invertible: " + v.to_string());
  }
  return conjugate(v) / n;
}

template <class S>
bool approx_zero(const Multivector<S>& a, const S& scale) {
  if constexpr (ScalarTraits<S>::exact) {
    return a.is_zero();
  } else {
    const double eps = a.algebra()->tolerance().compare * std::max(1.0, std::abs(scale));
    for (const auto& [m, c] : a.terms()) {
      if (std::abs(c) > eps) return false;
    }
    return true;
  }
}

template <class S>
bool approx_equal(const Multivector<S>& a, const Multivector<S>& b) {
  require_same_algebra(a, b);
  return approx_zero(a - b, std::max(a.max_abs_coefficient(), b.max_abs_coefficient()));
}

template <class S>
std::optional<S> proportionality_factor(const Multivector<S>& a, const Multivector<S>& b) {
  require_same_algebra(a, b);
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  // Normalize on the largest coefficient of b.
  auto pivot = b.terms().begin();
  for (auto it = b.terms().begin(); it != b.terms().end(); ++it) {
    if (abs_value(it->second) > abs_value(pivot->second)) pivot = it;
  }
  const S lambda = a.coefficient(pivot->first) / pivot->second;
  if (lambda == 0) return std::nullopt;
  if constexpr (ScalarTraits<S>::exact) {
    if (a == b * lambda) return lambda;
    return std::nullopt;
  } else {
    const Multivector<S> diff = a - b * lambda;
    const double eps = a.algebra()->tolerance().compare * a.max_abs_coefficient();
    for (const auto& [m, c] : diff.terms()) {
      if (std::abs(c) > eps) return std::nullopt;
    }
    return lambda;
  }
}

#define QGA_INSTANTIATE_MV(S)                                                              \
  template class Multivector<S>;                                                           \
  template void require_same_algebra(const Multivector<S>&, const Multivector<S>&);        \
  template Multivector<S> monomial_product(BasisMonomial, BasisMonomial, const AlgebraPtr<S>&); \
  template Multivector<S> geometric_product(const Multivector<S>&, const Multivector<S>&); \
  template Multivector<S> grade_project(const Multivector<S>&, int);                       \
  template Multivector<S> outer_product(const Multivector<S>&, const Multivector<S>&);     \
  template Multivector<S> inner_product(const Multivector<S>&, const Multivector<S>&);     \
  template Multivector<S> conjugate(const Multivector<S>&);                                \
  template Multivector<S> main_involution(const Multivector<S>&);                          \
  template Multivector<S> reverse(const Multivector<S>&);                                  \
  template S norm(const Multivector<S>&);                                                  \
  template Multivector<S> versor_inverse(const Multivector<S>&);                           \
  template bool approx_zero(const Multivector<S>&, const S&);                              \
  template bool approx_equal(const Multivector<S>&, const Multivector<S>&);                \
  template std::optional<S> proportionality_factor(const Multivector<S>&, const Multivector<S>&);

QGA_INSTANTIATE_MV(double)
QGA_INSTANTIATE_MV(Rational)

}  // namespace qga
