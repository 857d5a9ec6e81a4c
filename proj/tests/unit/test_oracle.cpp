#include "doctest.h"
#include "qga/core/error.hpp"
#include "qga/oracle/oracle.hpp"
#include "qga/transform/point_map.hpp"
#include "support/pullback.hpp"
#include "support/random.hpp"

using namespace qga;
using R = Rational;

namespace {

template <class S>
Multivector<S> e(const QgaContext<S>& ctx, std::initializer_list<int> idx, S c = S(1)) {
  return Multivector<S>::monomial(ctx.algebra(), BasisMonomial::from_indices(idx), c);
}

BasePoint<R> pt(std::initializer_list<R> c) { return BasePoint<R>{std::vector<R>(c)}; }

Multivector<R> circle(const QgaContext<R>& c) { return e(c, {1}, R(4)) - e(c, {3}) + e(c, {4}, R(4)) - e(c, {6}); }

using Poly = ImplicitPolynomial<R>;

Poly x2() { return Poly::variable(2, 0); }
Poly y2() { return Poly::variable(2, 1); }

PolynomialSystem<R> single(const Poly& p) { return {p.vars(), {{BasisMonomial{}, p}}}; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

Multivector<double> to_double(const Multivector<R>& v, const QgaContext<double>& ctx) {
  Multivector<double> out = ctx.zero();
  for (const auto& [m, c] : v.terms()) out += Multivector<double>::monomial(ctx.algebra(), m, c.convert_to<double>());
  return out;
}

}  // namespace

TEST_SUITE("polynomials") {
  TEST_CASE("arithmetic and printing") {
    const auto p = x2() * x2() + y2() * y2() - Poly::constant(2, R(1));
    CHECK(p.to_string() == "x^2 + y^2 - 1");
    CHECK(p.degree_in(0) == 2);
    CHECK(p.coefficient({0, 0}) == -1);
    CHECK(p.evaluate({R(3, 5), R(4, 5)}) == 0);
    CHECK(p.evaluate_double({1.0, 1.0}) == 1.0);
    CHECK((p - p).is_zero());
    CHECK(proportional(p * R(-3), p));
    CHECK_FALSE(proportional(p, p + x2()));
    CHECK(Poly::square(3, 2, R(2)).to_string() == "2*z^2");
    CHECK(Poly::variable(4, 3).to_string() == "x4");
    CHECK(variable_name(0, 2) == "x");
    CHECK(variable_name(2, 5) == "x3");
  }

  TEST_CASE("system rank") {
    PolynomialSystem<R> s{2, {{BasisMonomial{}, x2()}, {BasisMonomial::from_indices({1}), x2() * R(2)}}};
    CHECK(s.rank() == 1);
    s.components.push_back({BasisMonomial::from_indices({2}), y2()});
    CHECK(s.rank() == 2);
    CHECK(s.evaluate({R(0), R(1)}) == std::vector<R>{R(0), R(0), R(1)});
  }
}

TEST_SUITE("substitution") {
  TEST_CASE("examples") {
    QgaContext<R> c(2);
    const auto s = blade_to_system(circle(c), NullSpace::Inner, c);
    REQUIRE(s.components.size() == 1);
    CHECK(proportional(s.components.front().second, x2() * x2() + y2() * y2() - Poly::constant(2, R(1))));
    const auto line = blade_to_system(e(c, {5}, R(4)), NullSpace::Inner, c);
    CHECK(proportional(line.components.front().second, y2()));
    const auto image = e(c, {1}, R(5)) + e(c, {2}) - e(c, {3}, R(1, 2)) + e(c, {4}, R(5)) + e(c, {5}, R(2)) + e(c, {6});
    const auto expected = x2() * x2() * R(-5, 2) + x2() - y2() * y2() * R(5, 2) + y2() * R(2) - Poly::constant(2, R(1, 2));
    CHECK(proportional(blade_to_system(image, NullSpace::Inner, c).components.front().second, expected));
  }

  TEST_CASE("quadric polynomial") {
    const auto m = QuadricMatrix<R>::from_coefficients(R(-1), {R(0), R(-1, 2)}, {R(1), R(0)});
    CHECK(quadric_polynomial(m) == x2() * x2() - y2() - Poly::constant(2, R(1)));
  }

  TEST_CASE("outer null space of three points") {
    QgaContext<R> c(2);
    auto w = embed(pt({-1, 0}), c);
    for (const auto& p : {pt({1, 0}), pt({0, 1})}) w = outer_product(w, embed(p, c));
    const auto s = blade_to_system(w, NullSpace::Outer, c);
    for (const auto& p : {pt({-1, 0}), pt({1, 0}), pt({0, 1})}) {
      for (const auto& v : s.evaluate(p.coords)) CHECK(v == 0);
    }
    bool nonzero = false;
    for (const auto& v : s.evaluate({R(2), R(2)})) nonzero = nonzero || v != 0;
    CHECK(nonzero);
  }

  TEST_CASE("membership agrees with the polynomial system") {
    test::Rng rng(60);
    for (int n = 2; n <= 3; ++n) {
      QgaContext<R> c(n);
      int members = 0;
      for (int i = 0; i < 100; ++i) {
        const auto p = test::random_point<R>(rng, n);
        const auto kind = i % 2 ? NullSpace::Inner : NullSpace::Outer;
        const int grade = 1 + i % 3;
        Multivector<R> blade = c.scalar(R(1));
        if (kind == NullSpace::Outer) {
          blade = i % 4 < 2 ? embed(p, c) : test::random_vector(c.algebra(), rng);
          for (int k = 1; k < grade; ++k) blade = outer_product(blade, test::random_vector(c.algebra(), rng));
        } else {
          const auto eta = embed(p, c);
          for (int k = 0; k < grade; ++k) {
            auto v = test::random_vector(c.algebra(), rng);
            if (i % 4 < 2) v -= c.e(3, inner_product(eta, v).scalar_part() / inner_product(eta, c.e(3)).scalar_part());
            blade = outer_product(blade, v);
          }
        }
        if (blade.is_zero()) continue;
        const bool algebraic = null_space_membership(p, blade, kind, c);
        bool vanishes = true;
        for (const auto& v : blade_to_system(blade, kind, c).evaluate(p.coords)) vanishes = vanishes && v == 0;
        CHECK(algebraic == vanishes);
        members += algebraic;
      }
      CHECK(members > 20);
    }
  }
}

TEST_SUITE("grid comparison") {
  TEST_CASE("examples") {
    const auto circ = x2() * x2() + y2() * y2() - Poly::constant(2, R(1));
    const Box box = Box::cube(2, -2, 2);
    CHECK(grid_equivalence(single(circ), single(circ * R(2)), box, 41));
    QgaContext<R> c(2);
    CHECK(grid_equivalence(
        blade_to_system(circle(c), NullSpace::Inner, c),
        blade_to_system(quadric_to_vector(QuadricMatrix<R>::from_coefficients(R(1), {R(0), R(0)}, {R(-1), R(-1)}), c),
                        NullSpace::Inner, c),
        box, 41));
    CHECK_FALSE(grid_equivalence(single(circ), single(y2()), box, 41));
    CHECK(code_of([&] { (void)grid_equivalence(single(circ), single(Poly::variable(3, 0)), box, 41); }) ==
          ErrorCode::DimensionMismatch);
  }

  TEST_CASE("multi-component systems") {
    PolynomialSystem<R> a{2, {{BasisMonomial{}, x2()}, {BasisMonomial::from_indices({1}), y2()}}};
    PolynomialSystem<R> b{2, {{BasisMonomial{}, x2() * R(3)}, {BasisMonomial::from_indices({2}), y2() - x2()}}};
    CHECK(grid_equivalence(a, b, Box::cube(2, -1, 1), 21));
    PolynomialSystem<R> shifted{2, {{BasisMonomial{}, x2() - Poly::constant(2, R(1, 2))}, {BasisMonomial::from_indices({1}), y2()}}};
    CHECK_FALSE(grid_equivalence(a, shifted, Box::cube(2, -1, 1), 21));
  }

  TEST_CASE("poles are skipped") {
    const Field a = [](const std::vector<double>& x) -> std::optional<double> { return x[0] - 0.5; };
    const Field b = [](const std::vector<double>& x) -> std::optional<double> {
      if (x[0] == 0) return std::nullopt;
      return (x[0] - 0.5) / x[0];
    };
    const auto report = grid_compare(a, b, Box::cube(1, -1, 1), 20);
    CHECK(report.equivalent);
    CHECK(report.poles_skipped >= 1);
  }
}

TEST_SUITE("reference inversion") {
  TEST_CASE("examples") {
    const auto ell = QuadricMatrix<R>::from_coefficients(R(-2025), {R(0), R(0), R(0)}, {R(2500), R(3600), R(1296)});
    const auto p = pt({1, 2, 3});
    const R f = R(2025) / (4 * (625 + 900 * 4 + 324 * 9));
    CHECK(std::get<BasePoint<R>>(centered_inversion_reference(ell, p)) == pt({f, 2 * f, 3 * f}));
    const auto unit = QuadricMatrix<R>::from_coefficients(R(-1), {R(0), R(0)}, {R(1), R(1)});
    CHECK(std::get<BasePoint<R>>(centered_inversion_reference(unit, pt({1, 2}))) == pt({R(1, 5), R(2, 5)}));
    const auto cyl = QuadricMatrix<R>::from_coefficients(R(-4), {R(0), R(0), R(0)}, {R(1), R(1), R(0)});
    CHECK(std::get<BasePoint<R>>(centered_inversion_reference(cyl, pt({2, 0, 7}))) == pt({2, 0, 7}));
    CHECK(std::holds_alternative<PointAtInfinity>(centered_inversion_reference(unit, pt({0, 0}))));
  }

  TEST_CASE("errors") {
    const auto parabola = QuadricMatrix<R>::from_coefficients(R(-1), {R(0), R(-1, 2)}, {R(1), R(0)});
    CHECK(code_of([&] { (void)centered_inversion_reference(parabola, pt({1, 2})); }) == ErrorCode::HasLinearTerms);
    const auto through = QuadricMatrix<R>::from_coefficients(R(0), {R(0), R(0)}, {R(1), R(-1)});
    CHECK(code_of([&] { (void)centered_inversion_reference(through, pt({1, 2})); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("point map agrees with the reference in float mode") {
    test::Rng rng(61);
    for (int n = 2; n <= 3; ++n) {
      QgaContext<double> c(n);
      for (int i = 0; i < 20; ++i) {
        const auto m = test::random_inversion_quadric(rng, c);
        const auto p = test::random_point<double>(rng, n);
        const auto got = invert_point(quadric_to_vector(m, c), p, c);
        const auto want = centered_inversion_reference(m, p);
        REQUIRE(got.index() == want.index());
        if (const auto* q = std::get_if<BasePoint<double>>(&got)) {
          const auto& w = std::get<BasePoint<double>>(want);
          for (int k = 0; k < n; ++k) CHECK((*q)[k] == doctest::Approx(w[k]).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_SUITE("pullback") {
  TEST_CASE("lines pull back to conics through the center") {
    QgaContext<double> c(2);
    const std::vector<QuadricMatrix<double>> conics = {
        QuadricMatrix<double>::from_coefficients(-1, {0, 0}, {1, 1}),
        QuadricMatrix<double>::from_coefficients(-1, {0, 0}, {25.0 / 16, 16.0 / 25}),
        QuadricMatrix<double>::from_coefficients(-1, {0, -0.5}, {1, 0}),
        QuadricMatrix<double>::from_coefficients(-1, {0, 0}, {1, -0.75}),
    };
    test::Rng rng(62);
    for (const auto& m : conics) {
      const auto a = quadric_to_vector(m, c);
      for (int i = 0; i < 3; ++i) {
        const auto p = test::random_point<double>(rng, 2);
        const auto q0 = test::random_point<double>(rng, 2);
        if (p == q0) continue;
        const auto line = hyperplane_through_points({p, q0}, c);
        const auto report = test::pullback_report(a, line, c, Box::cube(2, -3, 3), 40);
        CHECK(report.equivalent);
        CHECK(report.roots_checked > 0);
      }
    }
  }

  TEST_CASE("a general conic does not pull back to the sandwich image") {
    QgaContext<double> c(2);
    const auto a = quadric_to_vector(QuadricMatrix<double>::from_coefficients(-1, {0, 0}, {25.0 / 16, 16.0 / 25}), c);
    const auto q = quadric_to_vector(QuadricMatrix<double>::from_coefficients(-1, {0.3, -0.2}, {1, 2}), c);
    CHECK_FALSE(test::pullback_report(a, q, c, Box::cube(2, -3, 3), 40).equivalent);
  }

  TEST_CASE("plane image under the ellipsoid") {
    QgaContext<R> c(3);
    const auto a = quadric_to_vector(
        QuadricMatrix<R>::from_coefficients(R(-9, 8), {R(0), R(0), R(0)}, {R(25, 18), R(2), R(18, 25)}), c);
    const auto plane = e(c, {2}, R(3)) + e(c, {3}) + e(c, {6}) + e(c, {9});
    const auto image = blade_to_system(invert_blade(a, plane), NullSpace::Inner, c);
    const auto x = Poly::variable(3, 0), y = Poly::variable(3, 1), z = Poly::variable(3, 2);
    const auto expected = x * x * R(100, 81) - x + y * y * R(16, 9) + z * z * R(16, 25);
    CHECK(proportional(image.components.front().second, expected));
    CHECK(grid_equivalence(image, single(expected), Box::cube(3, -2, 2), 12));
  }

  TEST_CASE("float and rational paths agree") {
    QgaContext<R> c(2);
    QgaContext<double> cd(2);
    const auto a = to_double(circle(c), cd);
    CHECK(approx_equal(a, Multivector<double>::vector(cd.algebra(), std::vector<double>{4, 0, -1, 4, 0, -1})));
  }
}
