#pragma once

#include <optional>
#include <variant>

#include "qga/model/model.hpp"

namespace qga {

enum class Parity { Even, Odd };
enum class SandwichVariant { Conjugate, Inverse };

std::string_view to_string(Parity p) noexcept;
std::string_view to_string(SandwichVariant v) noexcept;

// A product of invertible 1-blades. Construction checks that g g* is a
// nonzero scalar and that g has a single parity.
template <class S>
class Versor {
 public:
  explicit Versor(Multivector<S> value);

  const Multivector<S>& value() const noexcept { return value_; }
  Parity parity() const noexcept { return parity_; }
  const S& norm() const noexcept { return norm_; }
  Multivector<S> inverse() const { return conjugate(value_) / norm_; }

  Versor operator*(const Versor& rhs) const { return Versor(value_ * rhs.value_); }

 private:
  Multivector<S> value_;
  Parity parity_;
  S norm_;
};

// alpha(g) X g^-1, or alpha(g) X g* which differs by the scalar N(g).
template <class S>
Multivector<S> sandwich(const Versor<S>& g, const Multivector<S>& x,
                        SandwichVariant variant = SandwichVariant::Conjugate);

// Same, for a raw element. The conjugate variant accepts null elements; the
// inverse variant throws NullVersor for them.
template <class S>
Multivector<S> sandwich(const Multivector<S>& g, const Multivector<S>& x,
                        SandwichVariant variant = SandwichVariant::Conjugate);

// alpha(a) a a^-1, which is -a for every non-null grade-1 a.
template <class S>
Multivector<S> self_action_check(const Multivector<S>& a);

// g g* = +-1 and alpha(g) e_i g* is grade 1 for every generator.
template <class S>
bool pin_membership(const Multivector<S>& g);

extern template class Versor<double>;
extern template class Versor<Rational>;

}  // namespace qga
