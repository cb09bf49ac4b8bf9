#pragma once

// Reference computations used only by the tests. None of them share code paths
// with the library routines they check.

#include "hyperladder/funexpr.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <vector>

namespace oracle {

using hyperladder::Exponents;
using hyperladder::FunExpr;
using hyperladder::Rational;

/// Closed-form pointwise value, independent of FunExpr::eval.
inline double pointwise(const FunExpr& f, double theta, double xi) {
  double s = 0.0;
  for (const auto& t : f.terms()) {
    const auto& e = t.exp;
    // Hyperbolic factors in log form so large xi neither overflows nor gives 0 * inf.
    const double e2 = std::exp(-2 * xi);
    const double log_cosh = xi + std::log1p(e2) - std::numbers::ln2;
    const double log_sinh = xi + std::log1p(-e2) - std::numbers::ln2;
    s += hyperladder::to_double(t.coeff) * std::pow(std::cos(theta), hyperladder::to_double(e.p)) *
         std::pow(std::sin(theta), hyperladder::to_double(e.q)) *
         std::exp((e.r == 0 ? 0.0 : hyperladder::to_double(e.r) * log_cosh) +
                  (e.s == 0 ? 0.0 : hyperladder::to_double(e.s) * log_sinh));
  }
  return s;
}

/// Nested adaptive quadrature of g(theta, xi) sinh(xi) over (0, pi/2) x (0, inf).
inline double integrate_2d(const std::function<double(double, double)>& g) {
  boost::math::quadrature::tanh_sinh<double> inner_rule;
  boost::math::quadrature::exp_sinh<double> outer_rule;
  auto over_theta = [&](double xi) {
    const double v = inner_rule.integrate([&](double t) { return g(t, xi); }, 0.0, std::numbers::pi / 2, 1e-14);
    return v == 0.0 ? 0.0 : v * std::sinh(xi);
  };
  return outer_rule.integrate(over_theta, 0.0, std::numeric_limits<double>::infinity(), 1e-14);
}

inline double inner_2d(const FunExpr& a, const FunExpr& b) {
  return integrate_2d([&](double t, double x) { return pointwise(a, t, x) * pointwise(b, t, x); });
}

/// Rank of a family of expressions as vectors over the canonical monomial basis,
/// by exact rational elimination.
inline int exact_rank(const std::vector<FunExpr>& fs) {
  std::map<Exponents, std::size_t> index;
  for (const auto& f : fs)
    for (const auto& t : f.terms()) index.try_emplace(t.exp, index.size());
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : fs) {
    std::vector<Rational> row(index.size(), Rational(0));
    for (const auto& t : f.terms()) row[index.at(t.exp)] = t.coeff;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  const std::size_t cols = index.size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const Rational m = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= m * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Second-order central differences of pointwise values.
inline double d_theta_fd(const FunExpr& f, double t, double x, double h = 1e-5) {
  return (pointwise(f, t + h, x) - pointwise(f, t - h, x)) / (2 * h);
}
inline double d_xi_fd(const FunExpr& f, double t, double x, double h = 1e-5) {
  return (pointwise(f, t, x + h) - pointwise(f, t, x - h)) / (2 * h);
}

/// The full Hamiltonian applied pointwise with finite differences.
inline double hamiltonian_fd(const FunExpr& f, double l0, double l1, double l2, double t, double x,
                             double h = 1e-4) {
  auto F = [&](double a, double b) { return pointwise(f, a, b); };
  const double c = F(t, x);
  const double ftt = (F(t + h, x) - 2 * c + F(t - h, x)) / (h * h);
  const double fxx = (F(t, x + h) - 2 * c + F(t, x - h)) / (h * h);
  const double fx = (F(t, x + h) - F(t, x - h)) / (2 * h);
  const double sn = std::sin(t), cs = std::cos(t), sh = std::sinh(x), ch = std::cosh(x);
  const double ang = -ftt + (l1 * l1 - 0.25) / (sn * sn) * c + (l0 * l0 - 0.25) / (cs * cs) * c;
  return -fxx - ch / sh * fx - (l2 * l2 - 0.25) / (ch * ch) * c + ang / (sh * sh);
}

}  // namespace oracle
