#include "qga/model/model.hpp"

#include <cmath>
#include <string>

#include "qga/core/error.hpp"

namespace qga {

namespace {

template <class S>
void require_dim(const BasePoint<S>& p, const QgaContext<S>& ctx) {
  if (static_cast<int>(p.dim()) != ctx.n()) {
    throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(p.dim()) +
                                                  " coordinates, expected " + std::to_string(ctx.n()));
  }
}

template <class S>
void require_grade_one(const Multivector<S>& v) {
  if (v.homogeneous_grade() != 1) {
    throw Error(ErrorCode::NotGradeOne, "expected a grade-1 element, got " + v.to_string());
  }
}

// Coefficient of generator `index` (1-based) in a vector.
template <class S>
S coeff(const Multivector<S>& v, int index) {
  return v.coefficient(BasisMonomial(bit(index - 1)));
}

template <class S>
bool near_zero(const S& value, const S& scale, const QgaContext<S>& ctx) {
  if constexpr (ScalarTraits<S>::exact) {
    return value == 0;
  } else {
    return std::abs(value) <= ctx.algebra()->tolerance().compare * std::max(1.0, std::abs(scale));
  }
}

template <class S>
bool near_equal(const S& a, const S& b, const QgaContext<S>& ctx) {
  return near_zero(S(a - b), std::max(abs_value(a), abs_value(b)), ctx);
}

template <class S>
Multivector<S> wedge_points(const std::vector<BasePoint<S>>& points, const QgaContext<S>& ctx) {
  Multivector<S> blade = ctx.scalar(S(1));
  for (const auto& p : points) blade = outer_product(blade, embed(p, ctx));
  return blade;
}

// Constant split 1/n over the ideal directions; see quadric_to_vector.
template <class S>
Multivector<S> axis_hyperplane(int axis, const S& value, const QgaContext<S>& ctx) {
  std::vector<S> linear(static_cast<std::size_t>(ctx.n()), S(0));
  std::vector<S> quadratic(static_cast<std::size_t>(ctx.n()), S(0));
  linear[static_cast<std::size_t>(axis)] = S(1) / S(2);
  // x_k - value = 0
  return quadric_to_vector(QuadricMatrix<S>::from_coefficients(S(-value), linear, quadratic), ctx);
}

}  // namespace

template <class S>
Multivector<S> embed(const BasePoint<S>& p, const QgaContext<S>& ctx) {
  require_dim(p, ctx);
  std::vector<S> c(3 * static_cast<std::size_t>(ctx.n()), S(0));
  for (int k = 0; k < ctx.n(); ++k) {
    const S& x = p[static_cast<std::size_t>(k)];
    c[static_cast<std::size_t>(origin_index(k) - 1)] = S(1);
    c[static_cast<std::size_t>(coordinate_index(k) - 1)] = x;
    c[static_cast<std::size_t>(ideal_index(k) - 1)] = x * x / S(2);
  }
  return ctx.vector(c);
}

template <class S>
S axis_square(const Multivector<S>& v, int axis, const QgaContext<S>&) {
  const S o = coeff(v, origin_index(axis));
  const S x = coeff(v, coordinate_index(axis));
  const S i = coeff(v, ideal_index(axis));
  return x * x - S(2) * o * i;
}

template <class S>
S axis_normalization(const Multivector<S>& v, int axis, const QgaContext<S>&) {
  return coeff(v, origin_index(axis));
}

template <class S>
VectorClassification classify_vector(const Multivector<S>& v, const QgaContext<S>& ctx) {
  require_grade_one(v);
  const S scale = v.max_abs_coefficient() * v.max_abs_coefficient();
  bool null = true;
  for (int k = 0; k < ctx.n(); ++k) {
    if (!near_zero(axis_square(v, k, ctx), scale, ctx)) null = false;
  }
  if (!null) return VectorClassification::QuadricVector;

  const S first = axis_normalization(v, 0, ctx);
  bool all_equal = true;
  bool all_zero = true;
  for (int k = 0; k < ctx.n(); ++k) {
    const S lambda = axis_normalization(v, k, ctx);
    if (!near_equal(lambda, first, ctx)) all_equal = false;
    if (!near_zero(lambda, v.max_abs_coefficient(), ctx)) all_zero = false;
  }
  if (all_zero) return VectorClassification::IdealPoint;
  if (!all_equal) return VectorClassification::NullNonPoint;
  if (near_equal(first, S(1), ctx)) return VectorClassification::NormalizedPoint;
  return VectorClassification::ScaledPoint;
}

template <class S>
BasePoint<S> unembed(const Multivector<S>& v, const QgaContext<S>& ctx) {
  const auto kind = classify_vector(v, ctx);
  if (kind != VectorClassification::NormalizedPoint && kind != VectorClassification::ScaledPoint) {
    throw Error(ErrorCode::NotAPoint, std::string("element is a ") + std::string(to_string(kind)) +
                                          ", not an embedded point: " + v.to_string());
  }
  const S lambda = axis_normalization(v, 0, ctx);
  BasePoint<S> p;
  for (int k = 0; k < ctx.n(); ++k) p.coords.push_back(coeff(v, coordinate_index(k)) / lambda);
  return p;
}

template <class S>
S squared_distance(const BasePoint<S>& p, const BasePoint<S>& q, const QgaContext<S>& ctx) {
  return S(-2) * inner_product(embed(p, ctx), embed(q, ctx)).scalar_part();
}

template <class S>
double distance(const BasePoint<S>& p, const BasePoint<S>& q, const QgaContext<S>& ctx) {
  const double d2 = ScalarTraits<S>::to_double(squared_distance(p, q, ctx));
  return std::sqrt(std::max(0.0, d2));
}

template <class S>
Multivector<S> dualize(const Multivector<S>& a, DualDirection direction, const QgaContext<S>& ctx) {
  const auto grade = a.homogeneous_grade();
  if (!grade || *grade < 1 || *grade > 2 * ctx.n() + 1) {
    throw Error(ErrorCode::GradeOutOfRange, "dualization needs a blade of grade 1.." +
                                                std::to_string(2 * ctx.n() + 1) + ", got " + a.to_string());
  }
  const Multivector<S>& blade = direction == DualDirection::ToInner ? ctx.pseudo_blade() : ctx.dual_pseudo_blade();
  return inner_product(a, blade);
}

template <class S>
Multivector<S> quadric_to_vector(const QuadricMatrix<S>& m, const QgaContext<S>& ctx) {
  if (m.n() != ctx.n()) throw Error(ErrorCode::DimensionMismatch, "quadric matrix dimension mismatch");
  const S share = m.constant() / S(ctx.n());
  std::vector<S> c(3 * static_cast<std::size_t>(ctx.n()), S(0));
  for (int k = 0; k < ctx.n(); ++k) {
    c[static_cast<std::size_t>(origin_index(k) - 1)] = S(2) * m.quadratic(k);
    c[static_cast<std::size_t>(coordinate_index(k) - 1)] = S(-2) * m.linear(k);
    c[static_cast<std::size_t>(ideal_index(k) - 1)] = share;
  }
  return ctx.vector(c);
}

template <class S>
QuadricMatrix<S> vector_to_quadric(const Multivector<S>& v, const QgaContext<S>& ctx) {
  if (v.is_zero()) throw Error(ErrorCode::ZeroVector, "zero vector has no quadric");
  require_grade_one(v);
  S constant(0);
  std::vector<S> linear, quadratic;
  for (int k = 0; k < ctx.n(); ++k) {
    constant += coeff(v, ideal_index(k));
    linear.push_back(-coeff(v, coordinate_index(k)) / S(2));
    quadratic.push_back(coeff(v, origin_index(k)) / S(2));
  }
  return QuadricMatrix<S>::from_coefficients(constant, linear, quadratic);
}

template <class S>
ConicClass classify_conic(const Multivector<S>& v, const QgaContext<S>& ctx) {
  if (ctx.n() != 2) throw Error(ErrorCode::DimensionMismatch, "conic classification needs n = 2");
  require_grade_one(v);
  const S scale = v.max_abs_coefficient();
  const S on_e3 = inner_product(v, ctx.e(3)).scalar_part();
  const S on_e6 = inner_product(v, ctx.e(6)).scalar_part();
  const bool has_e3 = near_zero(on_e3, scale, ctx);
  const bool has_e6 = near_zero(on_e6, scale, ctx);
  if (has_e3 && has_e6) return ConicClass::Line;
  if (has_e3) return ConicClass::ParabolaXAxis;
  if (has_e6) return ConicClass::ParabolaYAxis;
  if (near_zero(S(on_e3 + on_e6), scale, ctx)) return ConicClass::EquilateralHyperbola;
  return ConicClass::GeneralConic;
}

template <class S>
Multivector<S> hyperplane_through_points(const std::vector<BasePoint<S>>& points, const QgaContext<S>& ctx) {
  if (static_cast<int>(points.size()) != ctx.n()) {
    throw Error(ErrorCode::InvalidArgument,
                "a hyperplane needs exactly " + std::to_string(ctx.n()) + " points");
  }
  const Multivector<S> blade = outer_product(wedge_points(points, ctx), ctx.ideal_blade());
  if (blade.is_zero()) throw Error(ErrorCode::DegeneratePoints, "points do not span a hyperplane");
  return dualize(blade, DualDirection::ToInner, ctx);
}

template <class S>
Multivector<S> point_pair_blade(const BasePoint<S>& p, const QgaContext<S>& ctx) {
  require_dim(p, ctx);
  Multivector<S> blade = ctx.scalar(S(1));
  for (int k = 0; k < ctx.n(); ++k) blade = outer_product(blade, axis_hyperplane(k, p[static_cast<std::size_t>(k)], ctx));
  const S scale = (ctx.n() % 2 == 0) ? S(ctx.n()) : S(-ctx.n());
  return blade * scale;
}

template <class S>
Multivector<S> quadric_through_points(const std::vector<BasePoint<S>>& points, const QgaContext<S>& ctx) {
  if (static_cast<int>(points.size()) != 2 * ctx.n()) {
    throw Error(ErrorCode::InvalidArgument,
                "a quadric needs exactly " + std::to_string(2 * ctx.n()) + " points");
  }
  const Multivector<S> blade = wedge_points(points, ctx);
  if (blade.is_zero()) throw Error(ErrorCode::DegeneratePoints, "points do not determine a quadric");
  const Multivector<S> q = dualize(blade, DualDirection::ToInner, ctx);
  if (q.is_zero()) throw Error(ErrorCode::DegeneratePoints, "points do not determine a quadric");
  return q;
}

template <class S>
bool null_space_membership(const BasePoint<S>& p, const Multivector<S>& a, NullSpace kind,
                           const QgaContext<S>& ctx) {
  const Multivector<S> eta = embed(p, ctx);
  const Multivector<S> r = kind == NullSpace::Inner ? inner_product(eta, a) : outer_product(eta, a);
  return approx_zero(r, S(eta.max_abs_coefficient() * a.max_abs_coefficient()));
}

#define QGA_INSTANTIATE_MODEL(S)                                                                         \
  template Multivector<S> embed(const BasePoint<S>&, const QgaContext<S>&);                             \
  template S axis_square(const Multivector<S>&, int, const QgaContext<S>&);                             \
  template S axis_normalization(const Multivector<S>&, int, const QgaContext<S>&);                      \
  template VectorClassification classify_vector(const Multivector<S>&, const QgaContext<S>&);           \
  template BasePoint<S> unembed(const Multivector<S>&, const QgaContext<S>&);                           \
  template S squared_distance(const BasePoint<S>&, const BasePoint<S>&, const QgaContext<S>&);          \
  template double distance(const BasePoint<S>&, const BasePoint<S>&, const QgaContext<S>&);             \
  template Multivector<S> dualize(const Multivector<S>&, DualDirection, const QgaContext<S>&);          \
  template Multivector<S> quadric_to_vector(const QuadricMatrix<S>&, const QgaContext<S>&);             \
  template QuadricMatrix<S> vector_to_quadric(const Multivector<S>&, const QgaContext<S>&);             \
  template ConicClass classify_conic(const Multivector<S>&, const QgaContext<S>&);                      \
  template Multivector<S> hyperplane_through_points(const std::vector<BasePoint<S>>&, const QgaContext<S>&); \
  template Multivector<S> point_pair_blade(const BasePoint<S>&, const QgaContext<S>&);                  \
  template Multivector<S> quadric_through_points(const std::vector<BasePoint<S>>&, const QgaContext<S>&); \
  template bool null_space_membership(const BasePoint<S>&, const Multivector<S>&, NullSpace, const QgaContext<S>&);

QGA_INSTANTIATE_MODEL(double)
QGA_INSTANTIATE_MODEL(Rational)

}  // namespace qga
