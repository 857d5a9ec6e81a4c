#include "qga/core/basis.hpp"

#include "qga/core/error.hpp"

namespace qga {

BasisMonomial BasisMonomial::from_indices(const std::vector<int>& indices) {
  Mask mask = 0;
  int previous = 0;
  for (int index : indices) {
    if (index < 1 || index > 64) {
      throw Error(ErrorCode::InvalidArgument, "generator index out of range: " + std::to_string(index));
    }
    if (index <= previous) {
      throw Error(ErrorCode::InvalidArgument, "generator indices must be strictly increasing");
    }
    mask |= bit(index - 1);
    previous = index;
  }
  return BasisMonomial(mask);
}

std::vector<int> BasisMonomial::indices() const {
  std::vector<int> out;
  Mask m = mask_;
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

std::string BasisMonomial::name() const {
  if (mask_ == 0) return "1";
  const auto idx = indices();
  const bool wide = idx.back() > 9;
  std::string out = "e";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(idx[i]);
  }
  return out;
}

}  // namespace qga
