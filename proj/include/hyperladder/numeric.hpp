#pragma once

// Finite-volume Sturm-Liouville eigensolvers for the separated equations and
// a pointwise finite-difference residual for the full Hamiltonian.

#include "hyperladder/funexpr.hpp"
#include "hyperladder/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperladder {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GridVariable { theta, xi };

struct GridSpec {
  GridVariable variable = GridVariable::theta;
  int n = 1000;            ///< interior cells / nodes
  double cutoff = 25.0;    ///< upper end for xi
  double margin = 0.0;     ///< distance kept from singular ends (residual grids only)

  void validate() const {
    if (n < 16) throw ParameterError("grid needs n >= 16, got " + std::to_string(n));
    if (variable == GridVariable::xi && !(cutoff > 0)) throw ParameterError("xi grid needs cutoff > 0");
    if (margin < 0) throw ParameterError("grid margin must be non-negative");
  }
};

struct EigenResult {
  std::vector<double> eigenvalues;
  std::vector<double> residual_norms;
  GridSpec grid;
  std::vector<std::string> warnings;
};

// ---------------------------------------------------------------------------
// Symmetric tridiagonal eigen-machinery.

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  ///< size n-1

  std::size_t size() const { return diag.size(); }
};

/// Number of eigenvalues strictly below x (Sturm sequence).
inline std::size_t sturm_count(const Tridiagonal& t, double x) {
  const double tiny = std::numeric_limits<double>::min();
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double e2 = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1];
    q = t.diag[i] - x - (i == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -tiny;
    if (q < 0) ++count;
  }
  return count;
}

inline std::pair<double, double> gershgorin(const Tridiagonal& t) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  return {lo, hi};
}

/// k-th smallest eigenvalue (0-based) by bisection.
inline double bisect_eigenvalue(const Tridiagonal& t, std::size_t k) {
  auto [lo, hi] = gershgorin(t);
  const double scale = std::max(std::abs(lo), std::abs(hi));
  for (int it = 0; it < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * scale; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(t, mid) > k) hi = mid;
    else lo = mid;
  }
  return 0.5 * (lo + hi);
}

/// Solves (T - shift) x = b by Gaussian elimination with partial pivoting.
inline std::vector<double> tridiagonal_solve(const Tridiagonal& t, double shift, std::vector<double> b) {
  const std::size_t n = t.size();
  std::vector<double> d(n), u1(n, 0.0), u2(n, 0.0);
  std::vector<double> sub(t.off.begin(), t.off.end());
  for (std::size_t i = 0; i < n; ++i) d[i] = t.diag[i] - shift;
  for (std::size_t i = 0; i + 1 < n; ++i) u1[i] = t.off[i];
  const double guard = std::numeric_limits<double>::epsilon() * (std::abs(shift) + 1.0);
  // Row i holds (d[i], u1[i], u2[i]) in columns i, i+1, i+2.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double a = sub[i];  // entry (i+1, i)
    if (std::abs(a) > std::abs(d[i])) {
      // swap rows i and i+1
      const double nd = a, nu1 = d[i + 1], nu2 = (i + 1 < n - 1) ? u1[i + 1] : 0.0;
      const double od = d[i], ou1 = u1[i], ou2 = u2[i];
      d[i] = nd;
      u1[i] = nu1;
      u2[i] = nu2;
      a = od;
      d[i + 1] = ou1;
      u1[i + 1] = ou2;
      std::swap(b[i], b[i + 1]);
    }
    if (d[i] == 0.0) d[i] = guard;
    const double m = a / d[i];
    d[i + 1] -= m * u1[i];
    if (i + 2 < n) u1[i + 1] -= m * u2[i];
    b[i + 1] -= m * b[i];
  }
  if (d[n - 1] == 0.0) d[n - 1] = guard;
  std::vector<double> x(n, 0.0);
  for (std::size_t k = n; k-- > 0;) {
    double s = b[k];
    if (k + 1 < n) s -= u1[k] * x[k + 1];
    if (k + 2 < n) s -= u2[k] * x[k + 2];
    x[k] = s / d[k];
  }
  return x;
}

inline double vector_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

/// Unit eigenvector for an accurate eigenvalue estimate by inverse iteration.
inline std::vector<double> inverse_iteration(const Tridiagonal& t, double lambda, int iterations = 3) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(t.size());
  for (double& v : x) v = u(rng);
  for (int it = 0; it < iterations; ++it) {
    x = tridiagonal_solve(t, lambda, x);
    const double nx = vector_norm(x);
    for (double& v : x) v /= nx;
  }
  return x;
}

inline double eigen_residual(const Tridiagonal& t, double lambda, const std::vector<double>& v) {
  const std::size_t n = t.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = (t.diag[i] - lambda) * v[i];
    if (i > 0) r += t.off[i - 1] * v[i - 1];
    if (i + 1 < n) r += t.off[i] * v[i + 1];
    s += r * r;
  }
  return std::sqrt(s);
}

namespace detail {

/// Cell-centred discretization of -(p u')' + q u = lambda w u with p on faces,
/// symmetrized by w^(-1/2). `right_dirichlet` adds the ghost-cell term at the far end.
inline Tridiagonal finite_volume(const std::vector<double>& p_face, const std::vector<double>& q_cell,
                                 const std::vector<double>& w_cell, double h, bool right_dirichlet) {
  const std::size_t n = q_cell.size();
  Tridiagonal t;
  t.diag.resize(n);
  t.off.resize(n - 1);
  const double ih2 = 1.0 / (h * h);
  for (std::size_t i = 0; i < n; ++i) {
    double d = (p_face[i] + p_face[i + 1]) * ih2 + q_cell[i];
    if (right_dirichlet && i + 1 == n) d += p_face[n] * ih2;
    t.diag[i] = d / w_cell[i];
  }
  for (std::size_t i = 0; i + 1 < n; ++i) t.off[i] = -p_face[i + 1] * ih2 / std::sqrt(w_cell[i] * w_cell[i + 1]);
  return t;
}

inline void fill_residuals(const Tridiagonal& t, EigenResult& res) {
  for (double lambda : res.eigenvalues) res.residual_norms.push_back(eigen_residual(t, lambda, inverse_iteration(t, lambda)));
}

}  // namespace detail

/// Lowest `count` eigenvalues of -d^2 + (l1^2-1/4)/sin^2 + (l0^2-1/4)/cos^2 on (0, pi/2).
/// The regular factor theta^(l1+1/2) (pi/2-theta)^(l0+1/2) is split off first.
inline EigenResult solve_theta(double l0, double l1, GridSpec grid, int count = 3) {
  grid.variable = GridVariable::theta;
  grid.validate();
  if (l0 < -0.5 || l1 < -0.5) throw ParameterError("solve_theta needs l0, l1 >= -1/2");
  if (count < 1 || count > grid.n) throw ParameterError("solve_theta: bad eigenvalue count");
  const double c = std::numbers::pi / 2;
  const double a = l0 + 0.5, b = l1 + 0.5;
  const int n = grid.n;
  const double h = c / n;
  std::vector<double> pf(n + 1), q(n), w(n);
  for (int i = 0; i <= n; ++i) {
    const double x = i * h;
    pf[i] = std::pow(x, 2 * b) * std::pow(c - x, 2 * a);
  }
  for (int i = 0; i < n; ++i) {
    const double x = (i + 0.5) * h, y = c - x;
    w[i] = std::pow(x, 2 * b) * std::pow(y, 2 * a);
    const double sn = std::sin(x), cs = std::cos(x);
    const double pot = (l1 * l1 - 0.25) * (1 / (sn * sn) - 1 / (x * x)) +
                       (l0 * l0 - 0.25) * (1 / (cs * cs) - 1 / (y * y)) + 2 * a * b / (x * y);
    q[i] = pot * w[i];
  }
  const Tridiagonal t = detail::finite_volume(pf, q, w, h, false);
  EigenResult res;
  res.grid = grid;
  for (int k = 0; k < count; ++k) res.eigenvalues.push_back(bisect_eigenvalue(t, static_cast<std::size_t>(k)));
  detail::fill_residuals(t, res);
  return res;
}

/// Negative eigenvalues of -d^2 - coth d - (l2^2-1/4) sech^2 + alpha csch^2 on
/// (0, cutoff) with weight sinh and a Dirichlet wall at the cutoff.
inline EigenResult solve_xi(double l2, double alpha, GridSpec grid) {
  grid.variable = GridVariable::xi;
  grid.validate();
  if (!(alpha > 0)) throw ParameterError("solve_xi needs alpha > 0");
  const int n = grid.n;
  const double h = grid.cutoff / n;
  std::vector<double> pf(n + 1), q(n), w(n);
  for (int i = 0; i <= n; ++i) pf[i] = std::sinh(i * h);
  for (int i = 0; i < n; ++i) {
    const double x = (i + 0.5) * h;
    const double sh = std::sinh(x), ch = std::cosh(x);
    w[i] = sh;
    q[i] = (alpha / (sh * sh) - (l2 * l2 - 0.25) / (ch * ch)) * sh;
  }
  const Tridiagonal t = detail::finite_volume(pf, q, w, h, true);
  EigenResult res;
  res.grid = grid;
  const std::size_t bound = sturm_count(t, 0.0);
  for (std::size_t k = 0; k < bound; ++k) res.eigenvalues.push_back(bisect_eigenvalue(t, k));
  detail::fill_residuals(t, res);
  if (!res.eigenvalues.empty()) {
    const auto v = inverse_iteration(t, res.eigenvalues.front());
    const std::size_t tail = static_cast<std::size_t>(n / 10);
    double mass = 0.0;
    for (std::size_t i = n - tail; i < static_cast<std::size_t>(n); ++i) mass += v[i] * v[i];
    if (mass > 1e-8)
      res.warnings.push_back("truncation: lowest eigenfunction carries mass " + std::to_string(mass) +
                             " in the last tenth of the xi interval");
  }
  return res;
}

/// max |H Phi - E Phi| over interior nodes, derivatives by central differences
/// with the grid spacing as step. Nodes stay `margin` away from the singular ends.
inline double residual_on_grid(const LabeledState& st, const Rational& energy, GridSpec grid_theta, GridSpec grid_xi) {
  grid_theta.validate();
  grid_xi.validate();
  if (st.is_zero()) return 0.0;
  const double t0 = grid_theta.margin, t1 = std::numbers::pi / 2 - grid_theta.margin;
  const double x0 = grid_xi.margin, x1 = grid_xi.cutoff;
  if (!(t1 > t0) || !(x1 > x0)) throw ParameterError("residual grid margins leave an empty box");
  const double ht = (t1 - t0) / (grid_theta.n + 1), hx = (x1 - x0) / (grid_xi.n + 1);
  const double l0 = to_double(st.label.l0), l1 = to_double(st.label.l1), l2 = to_double(st.label.l2);
  const double e = to_double(energy);
  auto f = [&](double t, double x) { return eval(st.expr, t, x); };
  double worst = 0.0;
  for (int i = 1; i <= grid_theta.n; ++i) {
    const double t = t0 + i * ht;
    const double sn = std::sin(t), cs = std::cos(t);
    for (int j = 1; j <= grid_xi.n; ++j) {
      const double x = x0 + j * hx;
      const double sh = std::sinh(x), ch = std::cosh(x);
      const double c = f(t, x);
      const double ftt = (f(t + ht, x) - 2 * c + f(t - ht, x)) / (ht * ht);
      const double fxp = f(t, x + hx), fxm = f(t, x - hx);
      const double fxx = (fxp - 2 * c + fxm) / (hx * hx);
      const double fx = (fxp - fxm) / (2 * hx);
      const double ang = -ftt + (l1 * l1 - 0.25) / (sn * sn) * c + (l0 * l0 - 0.25) / (cs * cs) * c;
      const double hf = -fxx - ch / sh * fx - (l2 * l2 - 0.25) / (ch * ch) * c + ang / (sh * sh);
      worst = std::max(worst, std::abs(hf - e * c));
    }
  }
  return worst;
}

}  // namespace hyperladder
