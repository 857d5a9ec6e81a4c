#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qga/model/context.hpp"
#include "qga/oracle/polynomial.hpp"

namespace qga {

// Formal substitution of eta(x) into eta . A or eta ^ A. Only the blade's
// coefficients are read; the products are expanded here against a private
// copy of the QnGA bilinear form.
template <class S>
PolynomialSystem<S> blade_to_system(const Multivector<S>& a, NullSpace kind, const QgaContext<S>& ctx);

// The implicit equation of a quadric matrix.
template <class S>
ImplicitPolynomial<S> quadric_polynomial(const QuadricMatrix<S>& m);

struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  static Box cube(int n, double lo, double hi);
  int dim() const noexcept { return static_cast<int>(lo.size()); }
};

// Scalar field with holes: nullopt where it is undefined or excluded.
using Field = std::function<std::optional<double>(const std::vector<double>&)>;

struct GridReport {
  bool equivalent = true;
  std::size_t roots_checked = 0;
  std::size_t poles_skipped = 0;
  std::vector<double> counterexample;
};

// Compares zero sets on a regular grid with `samples` points per axis. Every
// sign change of one field along a grid edge is bisected to a root, which
// must be a root of the other field (|value| <= 1e-7 relative to its values
// at the edge ends). Sign changes caused by poles are skipped.
GridReport grid_compare(const Field& a, const Field& b, const Box& box, int samples);

// Single-component systems are compared through grid_compare; otherwise the
// sum of squares of the components is sampled for simultaneous vanishing.
template <class S>
bool grid_equivalence(const PolynomialSystem<S>& a, const PolynomialSystem<S>& b, const Box& box, int samples);

// x'_i = -c0 x_i / sum_j c_j x_j^2 for a centered quadric.
template <class S>
InversionResult<S> centered_inversion_reference(const QuadricMatrix<S>& m, const BasePoint<S>& p);

}  // namespace qga
