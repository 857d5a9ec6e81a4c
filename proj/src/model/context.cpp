#include "qga/model/context.hpp"

#include <string>

#include "qga/core/error.hpp"

namespace qga {

template <class S>
Metric<S> qga_metric(int n) {
  if (n < 1 || n > QgaContext<S>::max_n) {
    throw Error(ErrorCode::InvalidArgument, "base dimension must be in [1, 21], got " + std::to_string(n));
  }
  const std::size_t dim = 3 * static_cast<std::size_t>(n);
  std::vector<S> form(dim * dim, S(0));
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
    const std::size_t o = 3 * k;
    form[(o + 0) * dim + (o + 2)] = S(-1);
    form[(o + 2) * dim + (o + 0)] = S(-1);
    form[(o + 1) * dim + (o + 1)] = S(1);
  }
  return Metric<S>(dim, std::move(form));
}

namespace {

template <class S>
Multivector<S> wedge_all(const std::vector<Multivector<S>>& factors) {
  Multivector<S> out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = outer_product(out, factors[i]);
  return out;
}

// (wedge of the class-a generators) ^ (wedge of the class-b generators) ^ (sum of class-c)
template <class S>
Multivector<S> duality_blade(const AlgebraPtr<S>& alg, int n, int (*first)(int), int (*second)(int),
                             int (*summed)(int)) {
  std::vector<Multivector<S>> factors;
  for (int k = 0; k < n; ++k) factors.push_back(Multivector<S>::generator(alg, first(k)));
  for (int k = 0; k < n; ++k) factors.push_back(Multivector<S>::generator(alg, second(k)));
  Multivector<S> sum(alg);
  for (int k = 0; k < n; ++k) sum += Multivector<S>::generator(alg, summed(k));
  factors.push_back(sum);
  return wedge_all(factors);
}

int origin_of(int k) { return origin_index(k); }
int coordinate_of(int k) { return coordinate_index(k); }
int ideal_of(int k) { return ideal_index(k); }

}  // namespace

template <class S>
QgaContext<S>::QgaContext(int n, Tolerance tolerance)
    : n_(n),
      algebra_(Algebra<S>::create(qga_metric<S>(n), tolerance)),
      pseudo_(duality_blade<S>(algebra_, n, coordinate_of, origin_of, ideal_of)),
      dual_pseudo_(duality_blade<S>(algebra_, n, coordinate_of, ideal_of, origin_of)) {}

template <class S>
Multivector<S> QgaContext<S>::ideal_blade() const {
  std::vector<Multivector<S>> factors;
  for (int k = 0; k < n_; ++k) factors.push_back(ideal_point(k));
  return wedge_all(factors);
}

template <class S>
QuadricMatrix<S>::QuadricMatrix(std::vector<std::vector<S>> entries) : entries_(std::move(entries)) {
  const std::size_t size = entries_.size();
  if (size < 2) throw Error(ErrorCode::InvalidMatrix, "quadric matrix must be at least 2x2");
  for (const auto& row : entries_) {
    if (row.size() != size) throw Error(ErrorCode::InvalidMatrix, "quadric matrix must be square");
  }
  bool all_zero = true;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (entries_[i][j] != entries_[j][i]) throw Error(ErrorCode::InvalidMatrix, "quadric matrix must be symmetric");
      if (i != j && i > 0 && j > 0 && entries_[i][j] != 0) {
        throw Error(ErrorCode::InvalidMatrix, "quadric is not in principal position (cross term present)");
      }
      if (entries_[i][j] != 0) all_zero = false;
    }
  }
  if (all_zero) throw Error(ErrorCode::ZeroMatrix, "quadric matrix is zero");
}

template <class S>
QuadricMatrix<S> QuadricMatrix<S>::from_coefficients(S constant, std::vector<S> linear, std::vector<S> quadratic) {
  if (linear.size() != quadratic.size()) {
    throw Error(ErrorCode::DimensionMismatch, "linear and quadratic coefficient counts differ");
  }
  const std::size_t n = linear.size();
  std::vector<std::vector<S>> m(n + 1, std::vector<S>(n + 1, S(0)));
  m[0][0] = std::move(constant);
  for (std::size_t k = 0; k < n; ++k) {
    m[0][k + 1] = linear[k];
    m[k + 1][0] = linear[k];
    m[k + 1][k + 1] = quadratic[k];
  }
  return QuadricMatrix(std::move(m));
}

template <class S>
bool QuadricMatrix<S>::has_linear_terms() const {
  for (int k = 0; k < n(); ++k) {
    if (linear(k) != 0) return true;
  }
  return false;
}

template <class S>
S QuadricMatrix<S>::evaluate(const BasePoint<S>& p) const {
  if (static_cast<int>(p.dim()) != n()) throw Error(ErrorCode::DimensionMismatch, "point dimension mismatch");
  S value = constant();
  for (int k = 0; k < n(); ++k) {
    const S& x = p[static_cast<std::size_t>(k)];
    value += S(2) * linear(k) * x + quadratic(k) * x * x;
  }
  return value;
}

std::string_view to_string(VectorClassification c) noexcept {
  switch (c) {
    case VectorClassification::NormalizedPoint: return "NormalizedPoint";
    case VectorClassification::ScaledPoint: return "ScaledPoint";
    case VectorClassification::IdealPoint: return "IdealPoint";
    case VectorClassification::NullNonPoint: return "NullNonPoint";
    case VectorClassification::QuadricVector: return "QuadricVector";
  }
  return "Unknown";
}

std::string_view to_string(ConicClass c) noexcept {
  switch (c) {
    case ConicClass::Line: return "Line";
    case ConicClass::ParabolaXAxis: return "ParabolaXAxis";
    case ConicClass::ParabolaYAxis: return "ParabolaYAxis";
    case ConicClass::EquilateralHyperbola: return "EquilateralHyperbola";
    case ConicClass::GeneralConic: return "GeneralConic";
  }
  return "Unknown";
}

template Metric<double> qga_metric<double>(int);
template Metric<Rational> qga_metric<Rational>(int);
template class QgaContext<double>;
template class QgaContext<Rational>;
template class QuadricMatrix<double>;
template class QuadricMatrix<Rational>;

}  // namespace qga
