#include "qga/transform/versor.hpp"

#include <cmath>

#include "qga/core/error.hpp"

namespace qga {

std::string_view to_string(Parity p) noexcept { return p == Parity::Even ? "even" : "odd"; }

std::string_view to_string(SandwichVariant v) noexcept {
  return v == SandwichVariant::Conjugate ? "conjugate" : "inverse";
}

namespace {

template <class S>
bool is_null_norm(const S& n, const Multivector<S>& v) {
  const S scale = std::max(S(1), S(v.max_abs_coefficient() * v.max_abs_coefficient()));
  return ScalarTraits<S>::is_zero(n, v.algebra()->tolerance().compare * ScalarTraits<S>::to_double(scale));
}

template <class S>
Parity parity_of(const Multivector<S>& v) {
  if (v.is_even()) return Parity::Even;
  if (v.is_odd()) return Parity::Odd;
  throw Error(ErrorCode::NotAVersor, "element mixes even and odd grades: " + v.to_string());
}

}  // namespace

template <class S>
Versor<S>::Versor(Multivector<S> value) : value_(std::move(value)), parity_(Parity::Even), norm_(0) {
  if (value_.is_zero()) throw Error(ErrorCode::NullVersor, "zero is not a versor");
  parity_ = parity_of(value_);
  try {
    norm_ = qga::norm(value_);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotScalar) throw;
    throw Error(ErrorCode::NotAVersor, e.what());
  }
  if (is_null_norm(norm_, value_)) throw Error(ErrorCode::NullVersor, "versor has zero norm: " + value_.to_string());
}

template <class S>
Multivector<S> sandwich(const Versor<S>& g, const Multivector<S>& x, SandwichVariant variant) {
  require_same_algebra(g.value(), x);
  const Multivector<S> right = variant == SandwichVariant::Inverse ? g.inverse() : conjugate(g.value());
  return main_involution(g.value()) * x * right;
}

template <class S>
Multivector<S> sandwich(const Multivector<S>& g, const Multivector<S>& x, SandwichVariant variant) {
  require_same_algebra(g, x);
  if (variant == SandwichVariant::Conjugate) return main_involution(g) * x * conjugate(g);
  Multivector<S> inverse = g;
  try {
    inverse = versor_inverse(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NullElement) throw;
    throw Error(ErrorCode::NullVersor, e.what());
  }
  return main_involution(g) * x * inverse;
}

template <class S>
Multivector<S> self_action_check(const Multivector<S>& a) {
  if (a.homogeneous_grade() != 1) throw Error(ErrorCode::NotGradeOne, "expected a grade-1 element: " + a.to_string());
  return sandwich(a, a, SandwichVariant::Inverse);
}

template <class S>
bool pin_membership(const Multivector<S>& g) {
  if (g.is_zero()) return false;
  const Multivector<S> n = g * conjugate(g);
  const S scale = std::max(S(1), S(g.max_abs_coefficient() * g.max_abs_coefficient()));
  if (!approx_zero(n - Multivector<S>::scalar(g.algebra(), n.scalar_part()), scale)) return false;
  const S value = abs_value(n.scalar_part());
  if constexpr (ScalarTraits<S>::exact) {
    if (value != 1) return false;
  } else {
    if (std::abs(value - 1.0) > g.algebra()->tolerance().compare) return false;
  }
  const Multivector<S> left = main_involution(g);
  const Multivector<S> right = conjugate(g);
  for (std::size_t i = 1; i <= g.algebra()->dim(); ++i) {
    const Multivector<S> image = left * Multivector<S>::generator(g.algebra(), static_cast<int>(i)) * right;
    if (!approx_zero(image - grade_project(image, 1), scale)) return false;
  }
  return true;
}

template class Versor<double>;
template class Versor<Rational>;

#define QGA_INSTANTIATE_VERSOR(S)                                                                 \
  template Multivector<S> sandwich(const Versor<S>&, const Multivector<S>&, SandwichVariant);     \
  template Multivector<S> sandwich(const Multivector<S>&, const Multivector<S>&, SandwichVariant); \
  template Multivector<S> self_action_check(const Multivector<S>&);                               \
  template bool pin_membership(const Multivector<S>&);

QGA_INSTANTIATE_VERSOR(double)
QGA_INSTANTIATE_VERSOR(Rational)

}  // namespace qga
