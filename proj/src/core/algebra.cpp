#include "qga/core/algebra.hpp"

#include <bit>
#include <map>
#include <mutex>

#include "qga/core/error.hpp"

namespace qga {

template <class S>
Algebra<S>::Algebra(Metric<S> metric, Tolerance tolerance)
    : metric_(std::move(metric)), tolerance_(tolerance) {
  if (!(tolerance_.zero > 0.0) || !(tolerance_.compare > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
  }
  const std::size_t n = metric_.dim();
  partners_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (metric_(i, j) != 0) partners_[i].push_back(static_cast<int>(j));
    }
  }
}

template <class S>
const Terms<S>& Algebra<S>::product(Mask a, Mask b) const {
  const auto key = std::make_pair(a, b);
  {
    std::shared_lock lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
  }
  // Computed outside the lock: compute() recurses into product().
  Terms<S> value = compute(a, b);
  std::unique_lock lock(mutex_);
  auto [it, inserted] = table_.try_emplace(key, std::move(value));
  return it->second;
}

template <class S>
std::size_t Algebra<S>::cached_entries() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

// (e_i ^ R) B = e_i (R B) - (e_i _| R) B, with i the lowest generator of a.
template <class S>
Terms<S> Algebra<S>::compute(Mask a, Mask b) const {
  if (a == 0) return {{b, S(1)}};

  const int i = std::countr_zero(a);
  const Mask rest = a & (a - 1);
  std::map<Mask, S> acc;

  for (const auto& [m, c] : product(rest, b)) {
    // e_i _| m
    for (int j : partners_[static_cast<std::size_t>(i)]) {
      if (!(m & bit(j))) continue;
      const int before = std::popcount(m & (bit(j) - 1));
      const S term = metric_(i, j) * c;
      acc[m ^ bit(j)] += (before & 1) ? S(-term) : term;
    }
    // e_i ^ m
    if (!(m & bit(i))) {
      const int before = std::popcount(m & (bit(i) - 1));
      acc[m | bit(i)] += (before & 1) ? S(-c) : c;
    }
  }

  for (int j : partners_[static_cast<std::size_t>(i)]) {
    if (!(rest & bit(j))) continue;
    const int before = std::popcount(rest & (bit(j) - 1));
    const S factor = (before & 1) ? S(-metric_(i, j)) : metric_(i, j);
    for (const auto& [m, c] : product(rest ^ bit(j), b)) acc[m] -= factor * c;
  }

  Terms<S> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!negligible(c)) out.emplace_back(m, std::move(c));
  }
  return out;
}

template class Algebra<double>;
template class Algebra<Rational>;

}  // namespace qga
