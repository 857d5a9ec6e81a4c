#include "qga/cli/sampler.hpp"

#include <charconv>
#include <cmath>

#include "qga/core/error.hpp"

namespace qga::cli {

std::vector<std::vector<double>> sample_zero_set(const ImplicitPolynomial<double>& p, const Box& box, double step) {
  const int n = box.dim();
  if (n != p.vars()) throw Error(ErrorCode::DimensionMismatch, "box and polynomial dimensions differ");
  if (!(step > 0)) throw Error(ErrorCode::InvalidArgument, "step must be positive");
  std::vector<int> counts;
  std::size_t total = 1;
  for (int k = 0; k < n; ++k) {
    const double span = box.hi[static_cast<std::size_t>(k)] - box.lo[static_cast<std::size_t>(k)];
    if (!(span > 0)) throw Error(ErrorCode::InvalidArgument, "empty box");
    counts.push_back(static_cast<int>(std::floor(span / step + 1e-9)) + 1);
    total *= static_cast<std::size_t>(counts.back());
  }
  if (total > 50'000'000) throw Error(ErrorCode::InvalidArgument, "grid too large; increase the step");

  auto coord = [&](int axis, int i) { return box.lo[static_cast<std::size_t>(axis)] + step * i; };
  std::vector<std::vector<double>> out;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (std::size_t flat = 0; flat < total; ++flat) {
    for (int k = 0; k < n; ++k) x[static_cast<std::size_t>(k)] = coord(k, idx[static_cast<std::size_t>(k)]);
    const double f0 = p.evaluate_double(x);
    if (f0 == 0) out.push_back(x);
    for (int axis = 0; axis < n; ++axis) {
      const std::size_t a = static_cast<std::size_t>(axis);
      if (idx[a] + 1 >= counts[a]) continue;
      std::vector<double> y = x;
      y[a] = coord(axis, idx[a] + 1);
      const double f1 = p.evaluate_double(y);
      if (!(f0 * f1 < 0)) continue;
      double lo = x[a], hi = y[a], flo = f0;
      std::vector<double> m = x;
      for (int it = 0; it < 60; ++it) {
        m[a] = 0.5 * (lo + hi);
        const double fm = p.evaluate_double(m);
        if (fm == 0) break;
        if ((fm < 0) == (flo < 0)) {
          lo = m[a];
          flo = fm;
        } else {
          hi = m[a];
        }
      }
      out.push_back(m);
    }
    for (int k = n - 1; k >= 0; --k) {
      if (++idx[static_cast<std::size_t>(k)] < counts[static_cast<std::size_t>(k)]) break;
      idx[static_cast<std::size_t>(k)] = 0;
    }
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<std::vector<double>>& points, int n) {
  for (int k = 0; k < n; ++k) out << (k ? "," : "") << variable_name(k, n);
  out << "\n";
  char buf[64];
  for (const auto& p : points) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      auto res = std::to_chars(buf, buf + sizeof buf, p[k]);
      if (k) out << ",";
      out.write(buf, res.ptr - buf);
    }
    out << "\n";
  }
}

}  // namespace qga::cli
