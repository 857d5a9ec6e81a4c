#pragma once

#include <utility>
#include <vector>

#include "qga/model/context.hpp"

namespace qga {

// eta(P) = sum_k e_{3k+1} + x_k e_{3k+2} + x_k^2/2 e_{3k+3}
template <class S>
Multivector<S> embed(const BasePoint<S>& p, const QgaContext<S>& ctx);

// Square of the grade-1 element restricted to one axis block.
template <class S>
S axis_square(const Multivector<S>& v, int axis, const QgaContext<S>& ctx);

// -e_{3k} . v, equal to 1 for every axis of an embedded point.
template <class S>
S axis_normalization(const Multivector<S>& v, int axis, const QgaContext<S>& ctx);

template <class S>
VectorClassification classify_vector(const Multivector<S>& v, const QgaContext<S>& ctx);

template <class S>
BasePoint<S> unembed(const Multivector<S>& v, const QgaContext<S>& ctx);

// -2 eta(p) . eta(q)
template <class S>
S squared_distance(const BasePoint<S>& p, const BasePoint<S>& q, const QgaContext<S>& ctx);

template <class S>
double distance(const BasePoint<S>& p, const BasePoint<S>& q, const QgaContext<S>& ctx);

template <class S>
std::pair<Multivector<S>, Multivector<S>> pseudo_blades(const QgaContext<S>& ctx) {
  return {ctx.pseudo_blade(), ctx.dual_pseudo_blade()};
}

// ToInner: A . I (an OPNS blade becomes an IPNS blade); ToOuter: A . I*.
template <class S>
Multivector<S> dualize(const Multivector<S>& a, DualDirection direction, const QgaContext<S>& ctx);

// The bijection chi; the constant is split evenly over the n ideal directions.
template <class S>
Multivector<S> quadric_to_vector(const QuadricMatrix<S>& m, const QgaContext<S>& ctx);

// Inverse of chi: the constant entry is the sum of every ideal coefficient,
// so any split is accepted.
template <class S>
QuadricMatrix<S> vector_to_quadric(const Multivector<S>& v, const QgaContext<S>& ctx);

// Incidence with the ideal points e3, e6 and e3 + e6 (n = 2 only).
template <class S>
ConicClass classify_conic(const Multivector<S>& v, const QgaContext<S>& ctx);

// Line (n = 2), plane (n = 3) or hyperplane through n points, as an IPNS
// vector: (eta(P1) ^ ... ^ eta(Pn) ^ e3 ^ e6 ^ ... ^ e3n) . I
template <class S>
Multivector<S> hyperplane_through_points(const std::vector<BasePoint<S>>& points, const QgaContext<S>& ctx);

// Grade-n blade for the pair {P, infinity}: the wedge of the n axis-parallel
// hyperplanes through P, scaled so the e_{2 5 8 ...} coefficient is n.
template <class S>
Multivector<S> point_pair_blade(const BasePoint<S>& p, const QgaContext<S>& ctx);

// (eta(P1) ^ ... ^ eta(P2n)) . I
template <class S>
Multivector<S> quadric_through_points(const std::vector<BasePoint<S>>& points, const QgaContext<S>& ctx);

template <class S>
bool null_space_membership(const BasePoint<S>& p, const Multivector<S>& a, NullSpace kind,
                           const QgaContext<S>& ctx);

}  // namespace qga
