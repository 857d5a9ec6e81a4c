#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qga {

using Mask = std::uint64_t;

// Canonically ordered basis blade e_{i1} ^ e_{i2} ^ ... ^ e_{ik}, i1 < ... < ik.
// Bit i set means generator e_{i+1} is present; the empty mask is the unit.
class BasisMonomial {
 public:
  constexpr BasisMonomial() = default;
  constexpr explicit BasisMonomial(Mask mask) : mask_(mask) {}

  // 1-based generator indices; they must be strictly increasing.
  static BasisMonomial from_indices(const std::vector<int>& indices);
  static BasisMonomial from_indices(std::initializer_list<int> indices) {
    return from_indices(std::vector<int>(indices));
  }

  constexpr Mask mask() const noexcept { return mask_; }
  constexpr int grade() const noexcept { return std::popcount(mask_); }
  constexpr bool contains(int index) const noexcept {
    return index >= 1 && index <= 64 && (mask_ >> (index - 1)) & 1U;
  }
  std::vector<int> indices() const;
  // "1", "e2", "e25", "e1,10" (comma separated once an index exceeds 9).
  std::string name() const;

  constexpr auto operator<=>(const BasisMonomial&) const = default;

 private:
  Mask mask_ = 0;
};

constexpr Mask bit(int zero_based) noexcept { return Mask{1} << zero_based; }

// +1/-1 for reordering e_a ^ e_b (disjoint masks) into canonical order.
constexpr int reorder_sign(Mask a, Mask b) noexcept {
  int swaps = 0;
  while (b != 0) {
    const int j = std::countr_zero(b);
    b &= b - 1;
    // generators of a above j must move past e_j
    swaps += std::popcount(a >> j >> 1);
  }
  return (swaps & 1) ? -1 : 1;
}

}  // namespace qga
