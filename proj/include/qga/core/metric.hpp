#pragma once

#include <cstddef>
#include <vector>

#include "qga/core/scalar.hpp"

namespace qga {

// Counts of basis directions squaring to +1, -1 and 0 after diagonalization.
struct Signature {
  int positive = 0;
  int negative = 0;
  int degenerate = 0;

  bool operator==(const Signature&) const = default;
};

// Symmetric bilinear form b(e_i, e_j) = B_ij over `dim` generators. The form
// may be non-diagonal and degenerate.
template <class S>
class Metric {
 public:
  static constexpr std::size_t max_dim = 64;

  // `form` is row-major dim x dim and must be exactly symmetric.
  Metric(std::size_t dim, std::vector<S> form);

  static Metric diagonal(const std::vector<S>& squares);

  std::size_t dim() const noexcept { return dim_; }
  // 0-based generator indices.
  const S& operator()(std::size_t i, std::size_t j) const { return form_[i * dim_ + j]; }
  bool is_diagonal() const noexcept { return diagonal_; }

  // Sylvester inertia via symmetric congruence elimination; `eps` is ignored
  // for exact scalars.
  Signature signature(double eps = 1e-12) const;

  bool operator==(const Metric& other) const {
    return dim_ == other.dim_ && form_ == other.form_;
  }

 private:
  std::size_t dim_;
  std::vector<S> form_;
  bool diagonal_ = true;
};

extern template class Metric<double>;
extern template class Metric<Rational>;

}  // namespace qga
