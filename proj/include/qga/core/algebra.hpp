#pragma once

#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qga/core/basis.hpp"
#include "qga/core/metric.hpp"
#include "qga/core/scalar.hpp"

namespace qga {

template <class S>
using Terms = std::vector<std::pair<Mask, S>>;

// A Clifford algebra Cl(V, b): the metric, the float tolerances and the
// memoized Cayley table. Instances are shared (and immutable from the
// outside) across every multivector built over them.
//
// Basis elements are outer-product monomials, so the grading is the
// exterior-algebra grading even when b is not diagonal. Products follow
// Chevalley's rule  e_i A = e_i _| A + e_i ^ A.
template <class S>
class Algebra {
 public:
  explicit Algebra(Metric<S> metric, Tolerance tolerance = {});

  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  static std::shared_ptr<const Algebra> create(Metric<S> metric, Tolerance tolerance = {}) {
    return std::make_shared<const Algebra>(std::move(metric), tolerance);
  }

  const Metric<S>& metric() const noexcept { return metric_; }
  const Tolerance& tolerance() const noexcept { return tolerance_; }
  std::size_t dim() const noexcept { return metric_.dim(); }

  // Coefficient is dropped after an operation.
  bool negligible(const S& v) const { return ScalarTraits<S>::is_zero(v, tolerance_.zero); }

  // Cayley table entry a * b. Thread safe; populated lazily.
  const Terms<S>& product(Mask a, Mask b) const;

  // Number of memoized table entries (diagnostics and tests).
  std::size_t cached_entries() const;

  // Generators j != i with b(e_i, e_j) != 0, plus i itself when e_i^2 != 0.
  const std::vector<int>& partners(int i) const { return partners_[static_cast<std::size_t>(i)]; }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<Mask, Mask>& k) const noexcept {
      return std::hash<Mask>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
  };

  Terms<S> compute(Mask a, Mask b) const;

  Metric<S> metric_;
  Tolerance tolerance_;
  std::vector<std::vector<int>> partners_;
  mutable std::shared_mutex mutex_;
  // Node based: references stay valid across rehashing.
  mutable std::unordered_map<std::pair<Mask, Mask>, Terms<S>, PairHash> table_;
};

template <class S>
using AlgebraPtr = std::shared_ptr<const Algebra<S>>;

extern template class Algebra<double>;
extern template class Algebra<Rational>;

}  // namespace qga
