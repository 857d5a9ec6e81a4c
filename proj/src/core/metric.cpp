#include "qga/core/metric.hpp"

#include <string>
#include <utility>

#include "qga/core/error.hpp"

namespace qga {

template <class S>
Metric<S>::Metric(std::size_t dim, std::vector<S> form) : dim_(dim), form_(std::move(form)) {
  if (dim_ < 1 || dim_ > max_dim) {
    throw Error(ErrorCode::InvalidMetric,
                "metric dimension must be in [1, 64], got " + std::to_string(dim_));
  }
  if (form_.size() != dim_ * dim_) {
    throw Error(ErrorCode::InvalidMetric, "bilinear form has the wrong number of entries");
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (form_[i * dim_ + j] != form_[j * dim_ + i]) {
        throw Error(ErrorCode::InvalidMetric, "bilinear form is not symmetric");
      }
      if (form_[i * dim_ + j] != 0) diagonal_ = false;
    }
  }
}

template <class S>
Metric<S> Metric<S>::diagonal(const std::vector<S>& squares) {
  const std::size_t n = squares.size();
  std::vector<S> form(n * n, S(0));
  for (std::size_t i = 0; i < n; ++i) form[i * n + i] = squares[i];
  return Metric(n, std::move(form));
}

template <class S>
Signature Metric<S>::signature(double eps) const {
  const std::size_t n = dim_;
  std::vector<S> a = form_;
  auto at = [&](std::size_t i, std::size_t j) -> S& { return a[i * n + j]; };
  auto zero = [&](const S& v) { return ScalarTraits<S>::is_zero(v, eps); };

  Signature sig;
  std::size_t k = 0;
  while (k < n) {
    // Bring a nonzero diagonal entry to position k.
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (!zero(at(i, i))) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) {
      // All remaining diagonal entries vanish; a nonzero off-diagonal entry
      // (i, j) lets us replace row/col i by row/col i + j, which makes the
      // diagonal entry 2 B_ij.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!zero(at(i, j))) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) {
        sig.degenerate += static_cast<int>(n - k);
        break;
      }
      for (std::size_t c = 0; c < n; ++c) at(pi, c) += at(pj, c);
      for (std::size_t r = 0; r < n; ++r) at(r, pi) += at(r, pj);
      pivot = pi;
    }
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(pivot, c), at(k, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, pivot), at(r, k));
    }
    const S d = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const S f = at(i, k) / d;
      if (zero(f)) continue;
      for (std::size_t c = k; c < n; ++c) at(i, c) -= f * at(k, c);
      for (std::size_t r = k; r < n; ++r) at(r, i) -= f * at(r, k);
    }
    if (d > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
    ++k;
  }
  return sig;
}

template class Metric<double>;
template class Metric<Rational>;

}  // namespace qga
