#include "qga/transform/point_map.hpp"

#include <algorithm>
#include <cmath>

#include "qga/core/error.hpp"

namespace qga {

namespace {

template <class S>
bool small(const S& v, const S& scale, const Tolerance& tol) {
  if constexpr (ScalarTraits<S>::exact) {
    return v == 0;
  } else {
    return std::abs(v) <= tol.compare * std::max(1.0, std::abs(scale));
  }
}

template <class S>
S max_abs(const std::vector<S>& v) {
  S m(0);
  for (const auto& x : v) m = std::max(m, abs_value(x));
  return m;
}

template <class S>
bool same_point(const std::vector<S>& a, const std::vector<S>& b, const Tolerance& tol) {
  const S scale = std::max(max_abs(a), max_abs(b));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!small(S(a[i] - b[i]), scale, tol)) return false;
  }
  return true;
}

template <class S>
S dot(const std::vector<S>& a, const std::vector<S>& b) {
  S out(0);
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

template <class S>
std::vector<S> along(const std::vector<S>& origin, const std::vector<S>& direction, const S& s) {
  std::vector<S> out = origin;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * direction[i];
  return out;
}

// Reduced row echelon form with partial pivoting. Rows are scaled to unit
// maximum first so one threshold serves every row in float mode.
template <class S>
std::vector<std::pair<std::size_t, std::vector<S>>> rref(std::vector<std::vector<S>> rows, double eps) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  auto zero = [eps](const S& v) {
    if constexpr (ScalarTraits<S>::exact) {
      (void)eps;
      return v == 0;
    } else {
      return std::abs(v) <= eps;
    }
  };
  for (auto& r : rows) {
    const S m = max_abs(r);
    if (!zero(m)) {
      for (auto& v : r) v /= m;
    }
  }
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t best = lead;
    for (std::size_t r = lead + 1; r < rows.size(); ++r) {
      if (abs_value(rows[r][c]) > abs_value(rows[best][c])) best = r;
    }
    if (zero(rows[best][c])) continue;
    std::swap(rows[lead], rows[best]);
    const S p = rows[lead][c];
    for (auto& v : rows[lead]) v /= p;
    rows[lead][c] = S(1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][c] == 0) continue;
      const S f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[lead][k];
      rows[r][c] = S(0);
      if constexpr (!ScalarTraits<S>::exact) {
        for (auto& v : rows[r]) {
          if (std::abs(v) <= eps) v = 0;
        }
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  std::vector<std::pair<std::size_t, std::vector<S>>> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.emplace_back(pivots[r], std::move(rows[r]));
  return out;
}

// Generic rational probes; any point off the singular locus works.
template <class S>
BasePoint<S> probe(int index, int n) {
  BasePoint<S> p;
  for (int k = 0; k < n; ++k) {
    const int num = 7 + 5 * k + 3 * index * (k + 2);
    const int den = 19 + 4 * index + 3 * k;
    p.coords.push_back(S((k + index) % 2 == 0 ? num : -num) / S(den));
  }
  return p;
}

}  // namespace

template <class S>
bool PointMap<S>::on_locus(const Locus& l, const std::vector<S>& x) const {
  const Tolerance& tol = ctx_.algebra()->tolerance();
  if (l.empty) return false;
  if (!l.direction) return same_point(l.origin, x, tol);
  const std::vector<S>& d = *l.direction;
  std::vector<S> offset(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) offset[k] = x[k] - l.origin[k];
  const S s = dot(offset, d) / dot(d, d);
  if (!same_point(along(l.origin, d, s), x, tol)) return false;
  const S value = (l.alpha * s + l.beta) * s + l.gamma;
  const S scale = std::max({abs_value(l.alpha) * s * s, abs_value(l.beta * s), abs_value(l.gamma)});
  return small(value, scale, tol);
}

template <class S>
PointMap<S>::PointMap(Versor<S> g, const QgaContext<S>& ctx) : g_(std::move(g)), ctx_(ctx) {
  require_same_algebra(g_.value(), ctx_.zero());
  const Tolerance& tol = ctx_.algebra()->tolerance();
  std::vector<Locus> lines;
  std::optional<std::vector<S>> candidate;
  for (int i = 0; i < 6; ++i) {
    Locus l = image_locus(probe<S>(i, ctx_.n()));
    if (l.empty) continue;
    if (!l.direction) {
      if (lines.empty()) {
        point_images_ = true;  // infinity is fixed
        return;
      }
      continue;
    }
    for (const Locus& m : lines) {
      if (candidate) break;
      const std::vector<S>& d1 = *l.direction;
      const std::vector<S>& d2 = *m.direction;
      std::vector<S> w(l.origin.size());
      for (std::size_t k = 0; k < w.size(); ++k) w[k] = m.origin[k] - l.origin[k];
      const S a = dot(d1, d1), b = dot(d1, d2), c = dot(d2, d2);
      const S det = b * b - a * c;
      if (small(det, S(a * c), tol)) continue;
      const S s = (b * dot(w, d2) - c * dot(w, d1)) / det;
      const std::vector<S> x = along(l.origin, d1, s);
      if (on_locus(m, x)) candidate = x;
    }
    lines.push_back(std::move(l));
    if (candidate && lines.size() >= 3) break;
  }
  if (!candidate) return;
  // The common point must be a root of every probe pair, not just on its line.
  for (const Locus& l : lines) {
    if (!on_locus(l, *candidate)) return;
  }
  infinity_ = BasePoint<S>{*candidate};
  shared_ = true;
}

template <class S>
typename PointMap<S>::Locus PointMap<S>::image_locus(const BasePoint<S>& p) const {
  const int n = ctx_.n();
  const Multivector<S> image = sandwich(g_, point_pair_blade(p, ctx_), SandwichVariant::Conjugate);

  // eta(x) . B' = sum_i eta_i(x) (e_i . B'); one scalar equation per monomial.
  std::map<BasisMonomial, std::vector<S>> equations;
  const std::size_t width = 2 * static_cast<std::size_t>(n) + 1;
  for (int k = 0; k < n; ++k) {
    const int index[3] = {origin_index(k), coordinate_index(k), ideal_index(k)};
    const std::size_t column[3] = {2 * static_cast<std::size_t>(n), static_cast<std::size_t>(n + k),
                                   static_cast<std::size_t>(k)};
    const S weight[3] = {S(1), S(1), S(1) / S(2)};
    for (int j = 0; j < 3; ++j) {
      const Multivector<S> part = inner_product(ctx_.e(index[j]), image);
      for (const auto& [m, c] : part.terms()) {
        auto& row = equations.try_emplace(m, width, S(0)).first->second;
        row[column[j]] += weight[j] * c;
      }
    }
  }
  std::vector<std::vector<S>> rows;
  for (auto& [m, row] : equations) rows.push_back(std::move(row));

  const double eps = 1e3 * ctx_.algebra()->tolerance().zero;
  const auto reduced = rref(std::move(rows), eps);
  Locus locus;
  std::vector<std::vector<S>> quadratic;
  std::vector<int> pivot_row(static_cast<std::size_t>(n), -1);
  for (std::size_t r = 0; r < reduced.size(); ++r) {
    const auto& [col, row] = reduced[r];
    if (col == width - 1) {
      locus.empty = true;
      return locus;
    }
    if (col < static_cast<std::size_t>(n)) {
      quadratic.push_back(row);
    } else {
      pivot_row[col - static_cast<std::size_t>(n)] = static_cast<int>(r);
    }
  }
  std::vector<int> free;
  for (int k = 0; k < n; ++k) {
    if (pivot_row[static_cast<std::size_t>(k)] < 0) free.push_back(k);
  }
  if (free.size() > 1) throw Error(ErrorCode::DegenerateImage, "image of the point pair is not a pair");

  locus.origin.assign(static_cast<std::size_t>(n), S(0));
  for (int k = 0; k < n; ++k) {
    const int r = pivot_row[static_cast<std::size_t>(k)];
    if (r >= 0) locus.origin[static_cast<std::size_t>(k)] = -reduced[static_cast<std::size_t>(r)].second[width - 1];
  }
  std::vector<S> d(static_cast<std::size_t>(n), S(0));
  if (!free.empty()) {
    const std::size_t f = static_cast<std::size_t>(free.front());
    d[f] = S(1);
    for (int k = 0; k < n; ++k) {
      const int r = pivot_row[static_cast<std::size_t>(k)];
      if (r >= 0) d[static_cast<std::size_t>(k)] = -reduced[static_cast<std::size_t>(r)].second[static_cast<std::size_t>(n) + f];
    }
    locus.direction = d;
  }

  // Restrict the quadratic rows to the locus; keep the strongest one.
  const Tolerance& tol = ctx_.algebra()->tolerance();
  S best(-1);
  for (const auto& row : quadratic) {
    S alpha(0), beta(0), gamma(row[width - 1]);
    for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
      const S& q = row[k];
      const S& l = row[static_cast<std::size_t>(n) + k];
      const S& x = locus.origin[k];
      alpha += q * d[k] * d[k];
      beta += S(2) * q * x * d[k] + l * d[k];
      gamma += q * x * x + l * x;
    }
    if (!locus.direction) {
      if (!small(gamma, S(1), tol)) {
        locus.empty = true;
        return locus;
      }
      continue;
    }
    const S strength = std::max({abs_value(alpha), abs_value(beta), abs_value(gamma)});
    if (strength > best) {
      best = strength;
      locus.alpha = alpha;
      locus.beta = beta;
      locus.gamma = gamma;
      locus.quadratic_known = !small(strength, S(1), tol);
    }
  }
  return locus;
}

template <class S>
InversionResult<S> PointMap<S>::operator()(const BasePoint<S>& p) const {
  if (static_cast<int>(p.dim()) != ctx_.n()) {
    throw Error(ErrorCode::DimensionMismatch, "point dimension does not match the context");
  }
  const Tolerance& tol = ctx_.algebra()->tolerance();
  if (!pairs_share_point()) return read_vector_image(p);
  const Locus locus = image_locus(p);
  if (locus.empty) return PointAtInfinity{};
  if (!locus.direction) {
    if (infinity_ && same_point(locus.origin, infinity_->coords, tol)) return PointAtInfinity{};
    return BasePoint<S>{locus.origin};
  }
  if (!locus.quadratic_known) throw Error(ErrorCode::DegenerateImage, "image of the point pair is a whole line");
  if (!infinity_) throw Error(ErrorCode::DegenerateImage, "image pair cannot be split");

  const std::vector<S>& d = *locus.direction;
  std::vector<S> offset(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) offset[k] = infinity_->coords[k] - locus.origin[k];
  const S s_inf = dot(offset, d) / dot(d, d);
  if (!on_locus(locus, infinity_->coords)) {
    throw Error(ErrorCode::DegenerateImage, "image pair does not contain the image of infinity");
  }
  const S scale = std::max({abs_value(locus.alpha), abs_value(locus.beta), abs_value(locus.gamma)});
  if (small(locus.alpha, scale, tol)) {
    // Degree drop: the second root left for infinity.
    if (small(locus.beta, scale, tol)) return PointAtInfinity{};
    const S s = -locus.gamma / locus.beta;
    if (same_point(along(locus.origin, d, s), infinity_->coords, tol)) return PointAtInfinity{};
    return BasePoint<S>{along(locus.origin, d, s)};
  }
  const S s = -locus.beta / locus.alpha - s_inf;
  return BasePoint<S>{along(locus.origin, d, s)};
}

// The point Q whose pair blade {Q, inf} contains w = g(eta(P)):
// w . (x_k = q_k hyperplane) = 0 gives q_k = n beta_k / sum_j alpha_j.
template <class S>
InversionResult<S> PointMap<S>::read_vector_image(const BasePoint<S>& p) const {
  const Multivector<S> w = sandwich(g_, embed(p, ctx_), SandwichVariant::Conjugate);
  S alpha(0);
  for (int k = 0; k < ctx_.n(); ++k) alpha += axis_normalization(w, k, ctx_);
  if (small(alpha, w.max_abs_coefficient(), ctx_.algebra()->tolerance())) return PointAtInfinity{};
  BasePoint<S> out;
  for (int k = 0; k < ctx_.n(); ++k) {
    out.coords.push_back(S(ctx_.n()) * w.coefficient(BasisMonomial(bit(coordinate_index(k) - 1))) / alpha);
  }
  return out;
}

template <class S>
std::vector<BasePoint<double>> PointMap<S>::image_pair(const BasePoint<S>& p) const {
  if (static_cast<int>(p.dim()) != ctx_.n()) {
    throw Error(ErrorCode::DimensionMismatch, "point dimension does not match the context");
  }
  const Locus locus = image_locus(p);
  auto to_double = [](const std::vector<S>& v) {
    BasePoint<double> out;
    for (const auto& x : v) out.coords.push_back(ScalarTraits<S>::to_double(x));
    return out;
  };
  std::vector<BasePoint<double>> out;
  if (locus.empty) return out;
  if (!locus.direction) {
    out.push_back(to_double(locus.origin));
    return out;
  }
  if (!locus.quadratic_known) throw Error(ErrorCode::DegenerateImage, "image of the point pair is a whole line");
  const BasePoint<double> origin = to_double(locus.origin);
  const BasePoint<double> d = to_double(*locus.direction);
  const double a = ScalarTraits<S>::to_double(locus.alpha);
  const double b = ScalarTraits<S>::to_double(locus.beta);
  const double c = ScalarTraits<S>::to_double(locus.gamma);
  std::vector<double> roots;
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (std::abs(a) <= ctx_.algebra()->tolerance().compare * scale) {
    if (b != 0) roots.push_back(-c / b);
  } else {
    const double disc = b * b - 4 * a * c;
    if (disc >= 0) {
      // Cancellation-free pair of roots.
      const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
      roots.push_back(q / a);
      if (q != 0) roots.push_back(c / q);
    }
  }
  for (double s : roots) out.push_back(BasePoint<double>{along(origin.coords, d.coords, s)});
  return out;
}

template <class S>
InversionResult<S> invert_point(const Multivector<S>& a, const BasePoint<S>& p, const QgaContext<S>& ctx) {
  if (a.homogeneous_grade() != 1) throw Error(ErrorCode::NotAQuadric, "inversion needs a grade-1 quadric vector");
  std::optional<Versor<S>> g;
  try {
    g.emplace(a);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotAQuadric, std::string("inversion needs a non-null quadric vector: ") + e.what());
  }
  return PointMap<S>(*g, ctx)(p);
}

template <class S>
Multivector<S> invert_blade(const Multivector<S>& a, const Multivector<S>& x) {
  if (a.homogeneous_grade() != 1) throw Error(ErrorCode::NotGradeOne, "inversion needs a grade-1 element");
  return sandwich(Versor<S>(a), x, SandwichVariant::Conjugate);
}

template class PointMap<double>;
template class PointMap<Rational>;

#define QGA_INSTANTIATE_POINT_MAP(S)                                                                     \
  template InversionResult<S> invert_point(const Multivector<S>&, const BasePoint<S>&, const QgaContext<S>&); \
  template Multivector<S> invert_blade(const Multivector<S>&, const Multivector<S>&);

QGA_INSTANTIATE_POINT_MAP(double)
QGA_INSTANTIATE_POINT_MAP(Rational)

}  // namespace qga
