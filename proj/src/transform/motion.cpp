#include "qga/transform/motion.hpp"

#include <cmath>
#include <vector>

#include "qga/core/error.hpp"

namespace qga {

namespace {

template <class S>
void require_plane(const QgaContext<S>& ctx) {
  if (ctx.n() != 2) throw Error(ErrorCode::DimensionMismatch, "planar motions need n = 2");
}

template <class S>
void require_unit(const Direction<S>& d) {
  const S r = d.cos * d.cos + d.sin * d.sin - S(1);
  bool unit;
  if constexpr (ScalarTraits<S>::exact) {
    unit = r == 0;
  } else {
    unit = std::abs(r) <= 1e-9;
  }
  if (!unit) throw Error(ErrorCode::InvalidArgument, "direction is not a unit vector");
}

template <class S>
Multivector<S> e(const QgaContext<S>& ctx, std::initializer_list<int> indices, S coeff = S(1)) {
  return Multivector<S>::monomial(ctx.algebra(), BasisMonomial::from_indices(indices), std::move(coeff));
}

}  // namespace

template <class S>
Direction<S> Direction<S>::from_angle(double radians) {
  return {ScalarTraits<S>::from_double(std::cos(radians)), ScalarTraits<S>::from_double(std::sin(radians))};
}

template <class S>
Direction<S> Direction<S>::from_slope_parameter(const S& t) {
  const S den = S(1) + t * t;
  return {(S(1) - t * t) / den, S(2) * t / den};
}

template <class S>
Multivector<S> origin_line(const Direction<S>& dir, const QgaContext<S>& ctx) {
  require_plane(ctx);
  require_unit(dir);
  return ctx.e(2, dir.sin) - ctx.e(5, dir.cos);
}

template <class S>
Versor<S> rotor_from_lines(const Direction<S>& phi, const Direction<S>& psi, const QgaContext<S>& ctx) {
  return Versor<S>(origin_line(psi, ctx) * origin_line(phi, ctx));
}

Versor<double> rotor_from_lines(double phi, double psi, const QgaContext<double>& ctx) {
  return rotor_from_lines(Direction<double>::from_angle(phi), Direction<double>::from_angle(psi), ctx);
}

template <class S>
Multivector<S> parallel_line(const Direction<S>& phi, const S& t, const QgaContext<S>& ctx) {
  require_plane(ctx);
  require_unit(phi);
  return ctx.e(2, S(2) * phi.sin) - ctx.e(3, t) - ctx.e(5, S(2) * phi.cos) - ctx.e(6, t);
}

template <class S>
Versor<S> translator_from_lines(const Direction<S>& phi, const S& t1, const S& t2, const QgaContext<S>& ctx) {
  return Versor<S>(parallel_line(phi, t1, ctx) * parallel_line(phi, t2, ctx) / S(2));
}

Versor<double> translator_from_lines(double phi, double t1, double t2, const QgaContext<double>& ctx) {
  return translator_from_lines(Direction<double>::from_angle(phi), t1, t2, ctx);
}

template <class S>
PlanarDualQuaternion<S> se2_to_dual_quaternion(const Multivector<S>& g) {
  if (g.algebra()->dim() != 6) throw Error(ErrorCode::DimensionMismatch, "planar dual quaternions live in Q2GA");
  PlanarDualQuaternion<S> q{g.scalar_part(), g.coefficient({2, 5}), g.coefficient({2, 3}), g.coefficient({3, 5})};
  Multivector<S> rest = g;
  rest -= Multivector<S>::scalar(g.algebra(), q.real);
  const std::vector<std::pair<BasisMonomial, S>> parts = {
      {BasisMonomial::from_indices({2, 5}), q.i},  {BasisMonomial::from_indices({2, 3}), q.ej},
      {BasisMonomial::from_indices({2, 6}), q.ej}, {BasisMonomial::from_indices({3, 5}), q.ek},
      {BasisMonomial::from_indices({5, 6}), S(-q.ek)}};
  for (const auto& [m, c] : parts) rest -= Multivector<S>::monomial(g.algebra(), m, c);
  if (!approx_zero(rest, g.max_abs_coefficient())) {
    throw Error(ErrorCode::NotInSubalgebra, "element is not a planar displacement: " + g.to_string());
  }
  return q;
}

template <class S>
Multivector<S> dual_quaternion_to_element(const PlanarDualQuaternion<S>& q, const QgaContext<S>& ctx) {
  require_plane(ctx);
  return ctx.scalar(q.real) + e(ctx, {2, 5}, q.i) + e(ctx, {2, 3}, q.ej) + e(ctx, {2, 6}, q.ej) +
         e(ctx, {3, 5}, q.ek) - e(ctx, {5, 6}, q.ek);
}

#define QGA_INSTANTIATE_MOTION(S)                                                                        \
  template struct Direction<S>;                                                                         \
  template Multivector<S> origin_line(const Direction<S>&, const QgaContext<S>&);                        \
  template Versor<S> rotor_from_lines(const Direction<S>&, const Direction<S>&, const QgaContext<S>&);   \
  template Multivector<S> parallel_line(const Direction<S>&, const S&, const QgaContext<S>&);            \
  template Versor<S> translator_from_lines(const Direction<S>&, const S&, const S&, const QgaContext<S>&); \
  template PlanarDualQuaternion<S> se2_to_dual_quaternion(const Multivector<S>&);                        \
  template Multivector<S> dual_quaternion_to_element(const PlanarDualQuaternion<S>&, const QgaContext<S>&);

QGA_INSTANTIATE_MOTION(double)
QGA_INSTANTIATE_MOTION(Rational)

}  // namespace qga
