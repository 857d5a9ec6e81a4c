#pragma once

#include <random>
#include <vector>

#include "qga/model/model.hpp"

namespace qga::test {

using Rng = std::mt19937_64;

template <class S>
S random_scalar(Rng& rng, int range = 6, int den = 4) {
  std::uniform_int_distribution<int> num(-range * den, range * den);
  std::uniform_int_distribution<int> d(1, den);
  if constexpr (ScalarTraits<S>::exact) {
    return Rational(num(rng)) / d(rng);
  } else {
    return static_cast<double>(num(rng)) / d(rng);
  }
}

template <class S>
S random_nonzero(Rng& rng, int range = 6, int den = 4) {
  for (;;) {
    S v = random_scalar<S>(rng, range, den);
    if (v != 0) return v;
  }
}

template <class S>
BasePoint<S> random_point(Rng& rng, int n, int range = 3, int den = 4) {
  BasePoint<S> p;
  for (int k = 0; k < n; ++k) p.coords.push_back(random_scalar<S>(rng, range, den));
  return p;
}

template <class S>
Multivector<S> random_vector(const AlgebraPtr<S>& algebra, Rng& rng) {
  std::vector<S> c;
  for (std::size_t i = 0; i < algebra->dim(); ++i) c.push_back(random_scalar<S>(rng));
  return Multivector<S>::vector(algebra, std::span<const S>(c));
}

// Grade-1 element that is not null.
template <class S>
Multivector<S> random_invertible_vector(const AlgebraPtr<S>& algebra, Rng& rng) {
  for (;;) {
    auto v = random_vector(algebra, rng);
    if (!v.is_zero() && norm(v) != 0) return v;
  }
}

template <class S>
Multivector<S> random_blade(const AlgebraPtr<S>& algebra, Rng& rng, int grade) {
  for (;;) {
    Multivector<S> b = Multivector<S>::scalar(algebra, S(1));
    for (int k = 0; k < grade; ++k) b = outer_product(b, random_vector(algebra, rng));
    if (!b.is_zero()) return b;
  }
}

// Sparse mixed-grade element with a few terms.
template <class S>
Multivector<S> random_multivector(const AlgebraPtr<S>& algebra, Rng& rng, int terms = 4) {
  std::uniform_int_distribution<Mask> mask(0, (Mask{1} << algebra->dim()) - 1);
  Multivector<S> out(algebra);
  for (int i = 0; i < terms; ++i) {
    out += Multivector<S>::monomial(algebra, BasisMonomial(mask(rng)), random_nonzero<S>(rng));
  }
  return out;
}

// Principal-position conic or quadric with a nonzero constant and squares.
template <class S>
QuadricMatrix<S> random_centered_quadric(Rng& rng, int n) {
  std::vector<S> squares;
  for (int k = 0; k < n; ++k) squares.push_back(random_nonzero<S>(rng, 4, 3));
  return QuadricMatrix<S>::from_coefficients(random_nonzero<S>(rng, 4, 3), std::vector<S>(n, S(0)), squares);
}

// Centered quadric with a non-null vector.
template <class S>
QuadricMatrix<S> random_inversion_quadric(Rng& rng, const QgaContext<S>& ctx) {
  for (;;) {
    auto m = random_centered_quadric<S>(rng, ctx.n());
    if (norm(quadric_to_vector(m, ctx)) != 0) return m;
  }
}

template <class S>
QuadricMatrix<S> random_quadric(Rng& rng, int n) {
  std::vector<S> linear, squares;
  for (int k = 0; k < n; ++k) {
    linear.push_back(random_scalar<S>(rng, 3, 2));
    squares.push_back(random_scalar<S>(rng, 4, 3));
  }
  if (squares[0] == 0) squares[0] = S(1);
  return QuadricMatrix<S>::from_coefficients(random_scalar<S>(rng, 4, 3), linear, squares);
}

}  // namespace qga::test
