#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "qga/transform/versor.hpp"

namespace qga {

// Acts on base points through pair blades: P is encoded as {P, inf},
// transported by the sandwich, and the image pair {g(P), g(inf)} is read back
// from the zero set of eta(x) . B'. g(inf) is found once from two probe
// points and removed from every image pair by Vieta's rule. Rational
// inputs give rational outputs.
template <class S>
class PointMap {
 public:
  PointMap(Versor<S> g, const QgaContext<S>& ctx);

  // nullopt when infinity is fixed or when no common point exists.
  const std::optional<BasePoint<S>>& image_of_infinity() const noexcept { return infinity_; }

  // False when the image pairs have no point in common, as for quadrics
  // with a linear term along an axis without a square term. operator() then
  // reads the image from g(eta(P)) instead: the point whose pair blade
  // contains it. Both readings agree whenever the pairs do share a point.
  bool pairs_share_point() const noexcept { return shared_ || point_images_; }

  InversionResult<S> operator()(const BasePoint<S>& p) const;

  // Every real point of the image pair {g(P), g(inf)}; irrational roots make
  // this float-valued.
  std::vector<BasePoint<double>> image_pair(const BasePoint<S>& p) const;

 private:
  struct Locus {
    bool empty = false;
    std::vector<S> origin;
    std::optional<std::vector<S>> direction;
    // alpha s^2 + beta s + gamma on the line; all zero when unconstrained.
    S alpha{0}, beta{0}, gamma{0};
    bool quadratic_known = false;
  };

  Locus image_locus(const BasePoint<S>& p) const;
  bool on_locus(const Locus& l, const std::vector<S>& x) const;
  InversionResult<S> read_vector_image(const BasePoint<S>& p) const;

  Versor<S> g_;
  QgaContext<S> ctx_;
  std::optional<BasePoint<S>> infinity_;
  bool shared_ = false;
  bool point_images_ = false;
};

// Image of p under the inversion in the quadric vector a.
template <class S>
InversionResult<S> invert_point(const Multivector<S>& a, const BasePoint<S>& p, const QgaContext<S>& ctx);

// Conjugate-variant sandwich of a blade; preserves grade.
template <class S>
Multivector<S> invert_blade(const Multivector<S>& a, const Multivector<S>& x);

extern template class PointMap<double>;
extern template class PointMap<Rational>;

}  // namespace qga
