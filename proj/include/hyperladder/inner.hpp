#pragma once

// Inner products on the quadrant 0 < theta < pi/2, 0 < xi < inf with the
// invariant measure sinh(xi) dtheta dxi, evaluated term by term in closed form:
//
//   int cos^p sin^q dtheta              = B((q+1)/2, (p+1)/2) / 2
//   int cosh^r sinh^s sinh(xi) dxi      = B((s+2)/2, -(r+s+1)/2) / 2

#include "hyperladder/funexpr.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hyperladder {

class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline double log_beta(double a, double b) {
  return boost::math::lgamma(a) + boost::math::lgamma(b) - boost::math::lgamma(a + b);
}

inline std::string describe(const Exponents& e) {
  std::ostringstream os;
  os << "cos^(" << to_string(e.p) << ") sin^(" << to_string(e.q) << ") cosh^(" << to_string(e.r)
     << ") sinh^(" << to_string(e.s) << ")";
  return os.str();
}

}  // namespace detail

/// Integral of one unit-coefficient monomial over the quadrant with weight sinh(xi).
inline double integrate_monomial(const Exponents& e) {
  auto diverge = [&](const char* why) {
    throw DivergenceError("integral of " + detail::describe(e) + " diverges: " + why);
  };
  if (!(e.p > -1)) diverge("requires p > -1 (theta -> pi/2)");
  if (!(e.q > -1)) diverge("requires q > -1 (theta -> 0)");
  if (!(e.s > -2)) diverge("requires s > -2 (xi -> 0)");
  if (!(e.r + e.s < -1)) diverge("requires r + s < -1 (xi -> infinity)");
  const double p = to_double(e.p), q = to_double(e.q), r = to_double(e.r), s = to_double(e.s);
  const double log_theta = detail::log_beta((q + 1) / 2, (p + 1) / 2);
  const double log_xi = detail::log_beta((s + 2) / 2, -(r + s + 1) / 2);
  return 0.25 * std::exp(log_theta + log_xi);
}

inline double inner(const FunExpr& a, const FunExpr& b) {
  double sum = 0.0;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms())
      sum += to_double(x.coeff * y.coeff) * integrate_monomial(x.exp + y.exp);
  return sum;
}

/// Square integrability under the invariant measure. Exact on canonical forms:
/// the most singular canonical term at each end cannot be cancelled.
inline bool is_normalizable(const FunExpr& f) {
  for (const auto& t : f.terms()) {
    const auto& e = t.exp;
    if (!(2 * e.p > -1 && 2 * e.q > -1 && 2 * e.s > -2 && 2 * (e.r + e.s) < -1)) return false;
  }
  return true;
}

inline double norm(const FunExpr& f) { return std::sqrt(inner(f, f)); }

}  // namespace hyperladder
