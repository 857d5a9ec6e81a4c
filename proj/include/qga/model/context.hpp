#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "qga/core/multivector.hpp"

namespace qga {

// Block-diagonal QnGA form: one D = [[0,0,-1],[0,1,0],[-1,0,0]] per axis,
// signature (2n, n, 0).
template <class S>
Metric<S> qga_metric(int n);

// 1-based generator indices for axis k (0-based): the origin-like null
// direction, the Euclidean direction and the ideal (infinity) direction.
constexpr int origin_index(int axis) noexcept { return 3 * axis + 1; }
constexpr int coordinate_index(int axis) noexcept { return 3 * axis + 2; }
constexpr int ideal_index(int axis) noexcept { return 3 * axis + 3; }

// The algebra over 3n generators plus the duality blades. Immutable after
// construction; share it freely.
template <class S>
class QgaContext {
 public:
  static constexpr int max_n = 21;

  explicit QgaContext(int n, Tolerance tolerance = {});

  int n() const noexcept { return n_; }
  const AlgebraPtr<S>& algebra() const noexcept { return algebra_; }

  // Maps outer product null spaces to inner product null spaces.
  const Multivector<S>& pseudo_blade() const noexcept { return pseudo_; }
  // Maps inner product null spaces to outer product null spaces.
  const Multivector<S>& dual_pseudo_blade() const noexcept { return dual_pseudo_; }

  Multivector<S> zero() const { return Multivector<S>(algebra_); }
  Multivector<S> scalar(S value) const { return Multivector<S>::scalar(algebra_, std::move(value)); }
  Multivector<S> e(int index, S coeff = S(1)) const {
    return Multivector<S>::generator(algebra_, index, std::move(coeff));
  }
  Multivector<S> vector(const std::vector<S>& coeffs) const {
    return Multivector<S>::vector(algebra_, std::span<const S>(coeffs));
  }
  // e_{3k} for one axis.
  Multivector<S> ideal_point(int axis) const { return e(ideal_index(axis)); }
  // Wedge of every per-axis ideal element e_3 ^ e_6 ^ ... ^ e_{3n}.
  Multivector<S> ideal_blade() const;

 private:
  int n_;
  AlgebraPtr<S> algebra_;
  Multivector<S> pseudo_;
  Multivector<S> dual_pseudo_;
};

template <class S>
using QgaContextPtr = std::shared_ptr<const QgaContext<S>>;

template <class S>
QgaContextPtr<S> make_context(int n, Tolerance tolerance = {}) {
  return std::make_shared<const QgaContext<S>>(n, tolerance);
}

template <class S>
struct BasePoint {
  std::vector<S> coords;

  std::size_t dim() const noexcept { return coords.size(); }
  const S& operator[](std::size_t i) const { return coords[i]; }
  S& operator[](std::size_t i) { return coords[i]; }
  bool operator==(const BasePoint&) const = default;
};

struct PointAtInfinity {
  bool operator==(const PointAtInfinity&) const = default;
};

template <class S>
using InversionResult = std::variant<BasePoint<S>, PointAtInfinity>;

// Symmetric (n+1)x(n+1) coefficient matrix of a principal-position
// hyperquadric; row/column 0 is the homogenizing coordinate, so the zero set
// is  m00 + 2 sum_k m0k x_k + sum_k mkk x_k^2 = 0.
template <class S>
class QuadricMatrix {
 public:
  // Validates symmetry, absence of cross terms and nonzero-ness.
  explicit QuadricMatrix(std::vector<std::vector<S>> entries);

  static QuadricMatrix from_coefficients(S constant, std::vector<S> linear, std::vector<S> quadratic);

  int n() const noexcept { return static_cast<int>(entries_.size()) - 1; }
  const S& constant() const { return entries_[0][0]; }
  // Half the coefficient of x_k (the off-diagonal entry m0k).
  const S& linear(int axis) const { return entries_[0][static_cast<std::size_t>(axis) + 1]; }
  const S& quadratic(int axis) const {
    return entries_[static_cast<std::size_t>(axis) + 1][static_cast<std::size_t>(axis) + 1];
  }
  const std::vector<std::vector<S>>& entries() const noexcept { return entries_; }
  bool has_linear_terms() const;

  // Left-hand side of the implicit equation at p.
  S evaluate(const BasePoint<S>& p) const;

  bool operator==(const QuadricMatrix&) const = default;

 private:
  std::vector<std::vector<S>> entries_;
};

enum class VectorClassification {
  NormalizedPoint,
  ScaledPoint,
  IdealPoint,
  NullNonPoint,
  QuadricVector,
};

enum class ConicClass {
  Line,
  ParabolaXAxis,  // axis parallel to the x-axis: contains e3 only
  ParabolaYAxis,  // axis parallel to the y-axis: contains e6 only
  EquilateralHyperbola,
  GeneralConic,
};

enum class NullSpace { Inner, Outer };
enum class DualDirection { ToInner, ToOuter };

std::string_view to_string(VectorClassification c) noexcept;
std::string_view to_string(ConicClass c) noexcept;

extern template class QgaContext<double>;
extern template class QgaContext<Rational>;
extern template class QuadricMatrix<double>;
extern template class QuadricMatrix<Rational>;

}  // namespace qga
