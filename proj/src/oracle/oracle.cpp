#include "qga/oracle/oracle.hpp"

#include <bit>
#include <cmath>
#include <map>

#include "qga/core/error.hpp"

namespace qga {

namespace {

// b(e_i, e_j) of QnGA, 0-based generator indices.
int form(int i, int j) {
  if (i / 3 != j / 3) return 0;
  const int a = i % 3, b = j % 3;
  if (a == 1 && b == 1) return 1;
  if ((a == 0 && b == 2) || (a == 2 && b == 0)) return -1;
  return 0;
}

template <class S>
ImplicitPolynomial<S> eta_component(int generator, int n) {
  const int axis = generator / 3;
  switch (generator % 3) {
    case 0:
      return ImplicitPolynomial<S>::constant(n, S(1));
    case 1:
      return ImplicitPolynomial<S>::variable(n, axis);
    default:
      return ImplicitPolynomial<S>::square(n, axis, S(1) / S(2));
  }
}

int bits_below(Mask m, int i) { return std::popcount(m & ((Mask{1} << i) - 1)); }

}  // namespace

template <class S>
PolynomialSystem<S> blade_to_system(const Multivector<S>& a, NullSpace kind, const QgaContext<S>& ctx) {
  const int n = ctx.n();
  const int dim = 3 * n;
  if (a.algebra()->dim() != static_cast<std::size_t>(dim)) {
    throw Error(ErrorCode::DimensionMismatch, "blade does not belong to the context");
  }
  std::vector<ImplicitPolynomial<S>> eta;
  for (int i = 0; i < dim; ++i) eta.push_back(eta_component<S>(i, n));

  std::map<Mask, ImplicitPolynomial<S>> out;
  auto add = [&](Mask m, const ImplicitPolynomial<S>& p, const S& c) {
    auto it = out.try_emplace(m, n).first;
    it->second += p * c;
  };
  for (const auto& [monomial, c] : a.terms()) {
    const Mask mask = monomial.mask();
    for (int i = 0; i < dim; ++i) {
      if (kind == NullSpace::Outer) {
        if ((mask >> i) & 1U) continue;
        const S sign = bits_below(mask, i) % 2 == 0 ? S(1) : S(-1);
        add(mask | (Mask{1} << i), eta[static_cast<std::size_t>(i)], S(sign * c));
      } else if (mask == 0) {
        add(Mask{1} << i, eta[static_cast<std::size_t>(i)], c);
      } else {
        // e_i _| (e_j1 ^ ... ^ e_jk) = sum_r (-1)^(r-1) b(e_i, e_jr) (... without e_jr ...)
        for (int j = 0; j < dim; ++j) {
          if (!((mask >> j) & 1U)) continue;
          const int b = form(i, j);
          if (b == 0) continue;
          const S sign = bits_below(mask, j) % 2 == 0 ? S(b) : S(-b);
          add(mask & ~(Mask{1} << j), eta[static_cast<std::size_t>(i)], S(sign * c));
        }
      }
    }
  }
  PolynomialSystem<S> system;
  system.vars = n;
  for (auto& [m, p] : out) {
    if (!p.is_zero()) system.components.emplace_back(BasisMonomial(m), std::move(p));
  }
  return system;
}

template <class S>
ImplicitPolynomial<S> quadric_polynomial(const QuadricMatrix<S>& m) {
  const int n = m.n();
  ImplicitPolynomial<S> p = ImplicitPolynomial<S>::constant(n, m.constant());
  for (int k = 0; k < n; ++k) {
    p += ImplicitPolynomial<S>::variable(n, k, S(2) * m.linear(k));
    p += ImplicitPolynomial<S>::square(n, k, m.quadratic(k));
  }
  return p;
}

Box Box::cube(int n, double lo, double hi) {
  return Box{std::vector<double>(static_cast<std::size_t>(n), lo), std::vector<double>(static_cast<std::size_t>(n), hi)};
}

namespace {

constexpr double kRootTolerance = 1e-7;

struct Grid {
  const Box& box;
  int samples;

  std::size_t size() const {
    std::size_t s = 1;
    for (int k = 0; k < box.dim(); ++k) s *= static_cast<std::size_t>(samples);
    return s;
  }
  std::vector<int> index(std::size_t flat) const {
    std::vector<int> idx(static_cast<std::size_t>(box.dim()));
    for (int k = box.dim() - 1; k >= 0; --k) {
      idx[static_cast<std::size_t>(k)] = static_cast<int>(flat % static_cast<std::size_t>(samples));
      flat /= static_cast<std::size_t>(samples);
    }
    return idx;
  }
  std::size_t flat(const std::vector<int>& idx) const {
    std::size_t f = 0;
    for (int v : idx) f = f * static_cast<std::size_t>(samples) + static_cast<std::size_t>(v);
    return f;
  }
  std::vector<double> point(const std::vector<int>& idx) const {
    std::vector<double> p(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
      p[k] = box.lo[k] + (box.hi[k] - box.lo[k]) * idx[k] / (samples - 1);
    }
    return p;
  }
};

std::vector<double> lerp(const std::vector<double>& a, const std::vector<double>& b, double t) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + t * (b[i] - a[i]);
  return out;
}

// One direction: every root of f on a grid edge must be a root of g.
void check_roots(const Field& f, const Field& g, const Grid& grid, const std::vector<std::optional<double>>& fv,
                 const std::vector<std::optional<double>>& gv, double g_scale, GridReport& report) {
  for (std::size_t flat = 0; flat < fv.size() && report.equivalent; ++flat) {
    const std::vector<int> idx = grid.index(flat);
    for (std::size_t axis = 0; axis < idx.size(); ++axis) {
      if (idx[axis] + 1 >= grid.samples) continue;
      std::vector<int> next = idx;
      ++next[axis];
      const std::size_t other = grid.flat(next);
      const auto& f0 = fv[flat];
      const auto& f1 = fv[other];
      if (!f0 || !f1 || !(*f0 * *f1 < 0)) continue;

      const std::vector<double> p0 = grid.point(idx), p1 = grid.point(next);
      double lo = 0, hi = 1, flo = *f0;
      bool hole = false;
      for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        const auto fm = f(lerp(p0, p1, mid));
        if (!fm) {
          hole = true;
          break;
        }
        if (*fm == 0) {
          lo = hi = mid;
          break;
        }
        if ((*fm < 0) == (flo < 0)) {
          lo = mid;
          flo = *fm;
        } else {
          hi = mid;
        }
      }
      if (hole) continue;
      const std::vector<double> root = lerp(p0, p1, 0.5 * (lo + hi));
      const auto froot = f(root);
      if (!froot || std::abs(*froot) > kRootTolerance * std::max(std::abs(*f0), std::abs(*f1))) {
        ++report.poles_skipped;
        continue;
      }
      const auto groot = g(root);
      if (!groot) continue;
      double scale = 0;
      if (gv[flat]) scale = std::max(scale, std::abs(*gv[flat]));
      if (gv[other]) scale = std::max(scale, std::abs(*gv[other]));
      ++report.roots_checked;
      if (std::abs(*groot) > kRootTolerance * scale && std::abs(*groot) > 1e-12 * g_scale) {
        report.equivalent = false;
        report.counterexample = root;
        return;
      }
    }
  }
}

}  // namespace

GridReport grid_compare(const Field& a, const Field& b, const Box& box, int samples) {
  if (box.lo.size() != box.hi.size() || box.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "malformed box");
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "need at least two samples per axis");
  const Grid grid{box, samples};
  std::vector<std::optional<double>> av(grid.size()), bv(grid.size());
  double a_scale = 0, b_scale = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::vector<double> p = grid.point(grid.index(i));
    av[i] = a(p);
    bv[i] = b(p);
    if (av[i]) a_scale = std::max(a_scale, std::abs(*av[i]));
    if (bv[i]) b_scale = std::max(b_scale, std::abs(*bv[i]));
  }
  GridReport report;
  check_roots(a, b, grid, av, bv, b_scale, report);
  if (report.equivalent) check_roots(b, a, grid, bv, av, a_scale, report);
  return report;
}

namespace {

template <class S>
const ImplicitPolynomial<S>& dominant(const PolynomialSystem<S>& s) {
  const ImplicitPolynomial<S>* best = &s.components.front().second;
  for (const auto& [m, p] : s.components) {
    if (p.max_abs_coefficient() > best->max_abs_coefficient()) best = &p;
  }
  return *best;
}

template <class S>
Field field_of(const ImplicitPolynomial<S>& p) {
  return [&p](const std::vector<double>& x) -> std::optional<double> { return p.evaluate_double(x); };
}

template <class S>
Field sum_of_squares(const PolynomialSystem<S>& s) {
  return [&s](const std::vector<double>& x) -> std::optional<double> {
    double total = 0;
    for (const auto& [m, p] : s.components) {
      const double v = p.evaluate_double(x);
      total += v * v;
    }
    return total;
  };
}

}  // namespace

template <class S>
bool grid_equivalence(const PolynomialSystem<S>& a, const PolynomialSystem<S>& b, const Box& box, int samples) {
  if (a.vars != b.vars || a.vars != box.dim()) throw Error(ErrorCode::DimensionMismatch, "systems and box disagree");
  if (a.components.empty() || b.components.empty()) return a.components.empty() == b.components.empty();
  if (a.rank() == 1 && b.rank() == 1) {
    return grid_compare(field_of(dominant(a)), field_of(dominant(b)), box, samples).equivalent;
  }
  // Without sign changes only simultaneous vanishing at grid points can be compared.
  const Field fa = sum_of_squares(a), fb = sum_of_squares(b);
  const Grid grid{box, samples};
  double sa = 0, sb = 0;
  std::vector<double> va(grid.size()), vb(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::vector<double> p = grid.point(grid.index(i));
    va[i] = *fa(p);
    vb[i] = *fb(p);
    sa = std::max(sa, va[i]);
    sb = std::max(sb, vb[i]);
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const bool za = va[i] <= kRootTolerance * kRootTolerance * sa;
    const bool zb = vb[i] <= kRootTolerance * kRootTolerance * sb;
    if (za != zb) return false;
  }
  return true;
}

template <class S>
InversionResult<S> centered_inversion_reference(const QuadricMatrix<S>& m, const BasePoint<S>& p) {
  if (m.has_linear_terms()) throw Error(ErrorCode::HasLinearTerms, "reference map covers centered quadrics only");
  if (static_cast<int>(p.dim()) != m.n()) throw Error(ErrorCode::DimensionMismatch, "point dimension");
  if (m.constant() == 0) throw Error(ErrorCode::InvalidArgument, "quadric passes through its center");
  S denominator(0);
  S scale(0);
  for (int k = 0; k < m.n(); ++k) {
    const S term = m.quadratic(k) * p[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(k)];
    denominator += term;
    scale = std::max(scale, abs_value(term));
  }
  bool vanishes;
  if constexpr (ScalarTraits<S>::exact) {
    vanishes = denominator == 0;
  } else {
    vanishes = std::abs(denominator) <= 1e-12 * std::max(scale, std::abs(m.constant()));
  }
  if (vanishes) return PointAtInfinity{};
  BasePoint<S> out;
  for (const auto& x : p.coords) out.coords.push_back(-m.constant() * x / denominator);
  return out;
}

#define QGA_INSTANTIATE_ORACLE(S)                                                                        \
  template PolynomialSystem<S> blade_to_system(const Multivector<S>&, NullSpace, const QgaContext<S>&);  \
  template ImplicitPolynomial<S> quadric_polynomial(const QuadricMatrix<S>&);                           \
  template bool grid_equivalence(const PolynomialSystem<S>&, const PolynomialSystem<S>&, const Box&, int); \
  template InversionResult<S> centered_inversion_reference(const QuadricMatrix<S>&, const BasePoint<S>&);

QGA_INSTANTIATE_ORACLE(double)
QGA_INSTANTIATE_ORACLE(Rational)

}  // namespace qga
