#include "qga/oracle/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qga/core/error.hpp"

namespace qga {

std::string variable_name(int index, int vars) {
  if (vars <= 3) return std::string(1, "xyz"[index]);
  return "x" + std::to_string(index + 1);
}

template <class S>
ImplicitPolynomial<S> ImplicitPolynomial<S>::constant(int vars, const S& c) {
  ImplicitPolynomial p(vars);
  p.add_term(Exponents(static_cast<std::size_t>(vars), 0), c);
  return p;
}

template <class S>
ImplicitPolynomial<S> ImplicitPolynomial<S>::variable(int vars, int index, const S& c) {
  ImplicitPolynomial p(vars);
  Exponents e(static_cast<std::size_t>(vars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  p.add_term(e, c);
  return p;
}

template <class S>
ImplicitPolynomial<S> ImplicitPolynomial<S>::square(int vars, int index, const S& c) {
  ImplicitPolynomial p(vars);
  Exponents e(static_cast<std::size_t>(vars), 0);
  e[static_cast<std::size_t>(index)] = 2;
  p.add_term(e, c);
  return p;
}

template <class S>
S ImplicitPolynomial<S>::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? S(0) : it->second;
}

template <class S>
int ImplicitPolynomial<S>::degree_in(int index) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(index)]);
  return d;
}

template <class S>
S ImplicitPolynomial<S>::max_abs_coefficient() const {
  S m(0);
  for (const auto& [e, c] : terms_) m = std::max(m, abs_value(c));
  return m;
}

template <class S>
void ImplicitPolynomial<S>::add_term(const Exponents& e, const S& c) {
  if (static_cast<int>(e.size()) != vars_) throw Error(ErrorCode::DimensionMismatch, "exponent tuple length");
  S& slot = terms_[e];
  slot += c;
  if (slot == 0) terms_.erase(e);
}

template <class S>
ImplicitPolynomial<S>& ImplicitPolynomial<S>::operator+=(const ImplicitPolynomial& rhs) {
  if (rhs.vars_ != vars_) throw Error(ErrorCode::DimensionMismatch, "polynomials over different variables");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

template <class S>
ImplicitPolynomial<S>& ImplicitPolynomial<S>::operator-=(const ImplicitPolynomial& rhs) {
  if (rhs.vars_ != vars_) throw Error(ErrorCode::DimensionMismatch, "polynomials over different variables");
  for (const auto& [e, c] : rhs.terms_) add_term(e, S(-c));
  return *this;
}

template <class S>
ImplicitPolynomial<S>& ImplicitPolynomial<S>::operator*=(const S& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

template <class S>
ImplicitPolynomial<S> ImplicitPolynomial<S>::operator*(const ImplicitPolynomial& rhs) const {
  if (rhs.vars_ != vars_) throw Error(ErrorCode::DimensionMismatch, "polynomials over different variables");
  ImplicitPolynomial out(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

template <class S>
S ImplicitPolynomial<S>::evaluate(const std::vector<S>& x) const {
  if (static_cast<int>(x.size()) != vars_) throw Error(ErrorCode::DimensionMismatch, "point dimension");
  S sum(0);
  for (const auto& [e, c] : terms_) {
    S term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= x[i];
    }
    sum += term;
  }
  return sum;
}

template <class S>
double ImplicitPolynomial<S>::evaluate_double(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != vars_) throw Error(ErrorCode::DimensionMismatch, "point dimension");
  double sum = 0;
  for (const auto& [e, c] : terms_) {
    double term = ScalarTraits<S>::to_double(c);
    for (std::size_t i = 0; i < e.size(); ++i) term *= std::pow(x[i], e[i]);
    sum += term;
  }
  return sum;
}

template <class S>
std::string ImplicitPolynomial<S>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first.
  std::vector<std::pair<Exponents, S>> ordered(terms_.rbegin(), terms_.rend());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int v : a.first) da += v;
    for (int v : b.first) db += v;
    return da > db;
  });
  for (const auto& [e, c] : ordered) {
    const bool negative = c < 0;
    const S mag = negative ? S(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(static_cast<int>(i), vars_);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << ScalarTraits<S>::to_string(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << ScalarTraits<S>::to_string(mag) << "*" << mono;
    }
  }
  return os.str();
}

template <class S>
bool proportional(const ImplicitPolynomial<S>& a, const ImplicitPolynomial<S>& b) {
  if (a.is_zero() || b.is_zero() || a.vars() != b.vars()) return false;
  auto pivot = b.terms().begin();
  for (auto it = b.terms().begin(); it != b.terms().end(); ++it) {
    if (abs_value(it->second) > abs_value(pivot->second)) pivot = it;
  }
  const S lambda = a.coefficient(pivot->first) / pivot->second;
  if (lambda == 0) return false;
  ImplicitPolynomial<S> diff = a - b * lambda;
  if constexpr (ScalarTraits<S>::exact) {
    return diff.is_zero();
  } else {
    return diff.max_abs_coefficient() <= 1e-9 * a.max_abs_coefficient();
  }
}

template <class S>
std::vector<S> PolynomialSystem<S>::evaluate(const std::vector<S>& x) const {
  std::vector<S> out;
  for (const auto& [m, p] : components) out.push_back(p.evaluate(x));
  return out;
}

template <class S>
std::size_t PolynomialSystem<S>::rank() const {
  // Gaussian elimination on coefficient vectors.
  std::map<std::vector<int>, std::size_t> columns;
  for (const auto& [m, p] : components) {
    for (const auto& [e, c] : p.terms()) columns.try_emplace(e, columns.size());
  }
  std::vector<std::vector<double>> rows;
  for (const auto& [m, p] : components) {
    std::vector<double> r(columns.size(), 0.0);
    for (const auto& [e, c] : p.terms()) r[columns[e]] = ScalarTraits<S>::to_double(c);
    rows.push_back(r);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < columns.size() && rank < rows.size(); ++c) {
    std::size_t best = rank;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (std::abs(rows[r][c]) > std::abs(rows[best][c])) best = r;
    }
    double scale = 0;
    for (const auto& r : rows) scale = std::max(scale, std::abs(r[c]));
    if (std::abs(rows[best][c]) <= 1e-12 * std::max(1.0, scale)) continue;
    std::swap(rows[rank], rows[best]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const double f = rows[r][c] / rows[rank][c];
      for (std::size_t k = 0; k < columns.size(); ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

template class ImplicitPolynomial<double>;
template class ImplicitPolynomial<Rational>;
template struct PolynomialSystem<double>;
template struct PolynomialSystem<Rational>;
template bool proportional(const ImplicitPolynomial<double>&, const ImplicitPolynomial<double>&);
template bool proportional(const ImplicitPolynomial<Rational>&, const ImplicitPolynomial<Rational>&);

}  // namespace qga
