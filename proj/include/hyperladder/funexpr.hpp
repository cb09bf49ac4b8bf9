#pragma once

// Exact calculus over the monomial family
//
//     c * cos^p(theta) * sin^q(theta) * cosh^r(xi) * sinh^s(xi)
//
// with rational coefficient and rational exponents. The family is closed under
// products, theta/xi derivatives and multiplication by every trigonometric or
// hyperbolic ratio the ladder operators use.
//
// The monomials are not linearly independent (cos^2 + sin^2 = 1 and
// sech^2 + tanh^2 = 1), so every FunExpr is kept in a canonical partial-fraction
// basis. In that basis structural equality coincides with equality of
// functions, which is what makes exact-zero residual checks meaningful.

#include "hyperladder/rational.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hyperladder {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Exponents {
  Rational p;  ///< cos(theta)
  Rational q;  ///< sin(theta)
  Rational r;  ///< cosh(xi)
  Rational s;  ///< sinh(xi)

  friend bool operator==(const Exponents& a, const Exponents& b) {
    return a.p == b.p && a.q == b.q && a.r == b.r && a.s == b.s;
  }
  friend bool operator<(const Exponents& a, const Exponents& b) {
    return std::tie(a.p, a.q, a.r, a.s) < std::tie(b.p, b.q, b.r, b.s);
  }
  friend Exponents operator+(const Exponents& a, const Exponents& b) {
    return {a.p + b.p, a.q + b.q, a.r + b.r, a.s + b.s};
  }
};

struct Monomial {
  Rational coeff;
  Exponents exp;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.coeff == b.coeff && a.exp == b.exp;
  }
};

namespace detail {

using ExponentPair = std::pair<Rational, Rational>;
using PairCombination = std::vector<std::pair<Rational, ExponentPair>>;

// Pair (a, b) stands for x^(a/2) (1-x)^(b/2) with x = cos^2 (theta) or
// x = sech^2 (xi). Canonical iff b in [0,2), or b < 0 and a in [0,2).
inline bool pair_is_canonical(const ExponentPair& e) {
  const auto& [a, b] = e;
  if (b >= 0 && b < 2) return true;
  return b < 0 && a >= 0 && a < 2;
}

// Rewrites one pair with x + (1-x) = 1 until every piece is canonical.
// Each rule strictly moves the pair toward the canonical region, so the
// worklist drains.
inline PairCombination reduce_pair(const ExponentPair& start) {
  if (pair_is_canonical(start)) return {{Rational(1), start}};
  std::map<ExponentPair, Rational> pending{{start, Rational(1)}};
  std::map<ExponentPair, Rational> done;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const ExponentPair e = node.key();
    const Rational c = node.mapped();
    if (c == 0) continue;
    if (pair_is_canonical(e)) {
      done[e] += c;
      continue;
    }
    const auto& [a, b] = e;
    if (b >= 2) {
      pending[{a, b - 2}] += c;
      pending[{a + 2, b - 2}] -= c;
    } else if (a >= 2) {  // b < 0
      pending[{a - 2, b}] += c;
      pending[{a - 2, b + 2}] -= c;
    } else {  // b < 0, a < 0
      pending[{a + 2, b}] += c;
      pending[{a, b + 2}] += c;
    }
  }
  PairCombination out;
  for (auto& [e, c] : done)
    if (c != 0) out.emplace_back(c, e);
  return out;
}

// theta factor cos^p sin^q  <->  (p, q)
// xi factor cosh^r sinh^s = sech^(-(r+s)) tanh^s  <->  (-(r+s), s)
inline ExponentPair xi_to_pair(const Rational& r, const Rational& s) { return {-(r + s), s}; }
inline std::pair<Rational, Rational> pair_to_xi(const ExponentPair& e) {
  return {-e.first - e.second, e.second};
}

}  // namespace detail

/// Canonical finite sum of monomials. Immutable; every constructor normalizes.
class FunExpr {
 public:
  FunExpr() = default;

  explicit FunExpr(const std::vector<Monomial>& terms) {
    std::map<Exponents, Rational> acc;
    for (const auto& t : terms)
      if (t.coeff != 0) acc[t.exp] += t.coeff;
    normalize(acc);
  }

  static FunExpr constant(const Rational& c) { return FunExpr({Monomial{c, {}}}); }

  static FunExpr monomial(const Rational& c, const Rational& p, const Rational& q, const Rational& r,
                          const Rational& s) {
    return FunExpr({Monomial{c, {p, q, r, s}}});
  }

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// True when no term carries a hyperbolic factor.
  bool theta_only() const {
    for (const auto& t : terms_)
      if (t.exp.r != 0 || t.exp.s != 0) return false;
    return true;
  }
  /// True when no term carries a trigonometric factor.
  bool xi_only() const {
    for (const auto& t : terms_)
      if (t.exp.p != 0 || t.exp.q != 0) return false;
    return true;
  }

  friend bool operator==(const FunExpr& a, const FunExpr& b) { return a.terms_ == b.terms_; }

  friend FunExpr operator+(const FunExpr& a, const FunExpr& b) {
    std::vector<Monomial> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return FunExpr(all);
  }
  friend FunExpr operator-(const FunExpr& a) {
    FunExpr out = a;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }
  friend FunExpr operator-(const FunExpr& a, const FunExpr& b) { return a + (-b); }

  friend FunExpr operator*(const Rational& c, const FunExpr& f) {
    if (c == 0) return {};
    FunExpr out = f;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
  }

  friend FunExpr operator*(const FunExpr& a, const FunExpr& b) {
    std::map<Exponents, Rational> acc;
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) acc[x.exp + y.exp] += x.coeff * y.coeff;
    FunExpr out;
    out.normalize(acc);
    return out;
  }

  /// Scalar c with f == c * g, if such a rational exists (g nonzero).
  friend std::optional<Rational> proportionality(const FunExpr& f, const FunExpr& g) {
    if (g.is_zero()) return std::nullopt;
    if (f.is_zero()) return Rational(0);
    if (f.terms_.size() != g.terms_.size()) return std::nullopt;
    const Rational c = f.terms_.front().coeff / g.terms_.front().coeff;
    for (std::size_t i = 0; i < f.terms_.size(); ++i) {
      if (!(f.terms_[i].exp == g.terms_[i].exp)) return std::nullopt;
      if (f.terms_[i].coeff != c * g.terms_[i].coeff) return std::nullopt;
    }
    return c;
  }

  std::string str() const;

 private:
  void normalize(const std::map<Exponents, Rational>& acc) {
    std::map<detail::ExponentPair, detail::PairCombination> theta_cache;
    std::map<detail::ExponentPair, detail::PairCombination> xi_cache;
    auto cached = [](auto& cache, const detail::ExponentPair& e) -> const detail::PairCombination& {
      auto it = cache.find(e);
      if (it == cache.end()) it = cache.emplace(e, detail::reduce_pair(e)).first;
      return it->second;
    };
    std::map<Exponents, Rational> out;
    for (const auto& [e, c] : acc) {
      if (c == 0) continue;
      const auto& th = cached(theta_cache, {e.p, e.q});
      const auto& hy = cached(xi_cache, detail::xi_to_pair(e.r, e.s));
      for (const auto& [ct, pt] : th) {
        for (const auto& [cx, px] : hy) {
          auto [r, s] = detail::pair_to_xi(px);
          out[Exponents{pt.first, pt.second, r, s}] += c * ct * cx;
        }
      }
    }
    terms_.clear();
    for (auto& [e, c] : out)
      if (c != 0) terms_.push_back(Monomial{c, e});
  }

  std::vector<Monomial> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const FunExpr& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  auto factor = [&os](const char* name, const Rational& e) {
    if (e == 0) return;
    os << "*" << name;
    if (e != 1) os << "^(" << to_string(e) << ")";
  };
  for (const auto& t : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(t.coeff) << ")";
    factor("cos", t.exp.p);
    factor("sin", t.exp.q);
    factor("cosh", t.exp.r);
    factor("sinh", t.exp.s);
  }
  return os;
}

inline std::string FunExpr::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

inline FunExpr add(const FunExpr& a, const FunExpr& b) { return a + b; }
inline FunExpr negate(const FunExpr& a) { return -a; }
inline FunExpr mul(const FunExpr& a, const FunExpr& b) { return a * b; }
inline FunExpr scale(const Rational& c, const FunExpr& f) { return c * f; }

/// d/dtheta: cos^p sin^q -> -p cos^(p-1) sin^(q+1) + q cos^(p+1) sin^(q-1)
inline FunExpr d_theta(const FunExpr& f) {
  std::vector<Monomial> out;
  out.reserve(2 * f.size());
  for (const auto& t : f.terms()) {
    const auto& e = t.exp;
    if (e.p != 0) out.push_back({-e.p * t.coeff, {e.p - 1, e.q + 1, e.r, e.s}});
    if (e.q != 0) out.push_back({e.q * t.coeff, {e.p + 1, e.q - 1, e.r, e.s}});
  }
  return FunExpr(out);
}

/// d/dxi: cosh^r sinh^s -> r cosh^(r-1) sinh^(s+1) + s cosh^(r+1) sinh^(s-1)
inline FunExpr d_xi(const FunExpr& f) {
  std::vector<Monomial> out;
  out.reserve(2 * f.size());
  for (const auto& t : f.terms()) {
    const auto& e = t.exp;
    if (e.r != 0) out.push_back({e.r * t.coeff, {e.p, e.q, e.r - 1, e.s + 1}});
    if (e.s != 0) out.push_back({e.s * t.coeff, {e.p, e.q, e.r + 1, e.s - 1}});
  }
  return FunExpr(out);
}

/// Floating evaluation on the closed quadrant [0, pi/2] x [0, inf).
/// A vanishing factor raised to a negative power is a domain error.
inline double eval(const FunExpr& f, double theta, double xi) {
  if (f.is_zero()) return 0.0;
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2) || !(xi >= 0.0))
    throw DomainError("eval outside the quadrant: theta=" + std::to_string(theta) +
                      " xi=" + std::to_string(xi));
  const double c = theta == std::numbers::pi / 2 ? 0.0 : std::cos(theta);
  const double s = std::sin(theta);
  const double ch = std::cosh(xi);
  const double sh = std::sinh(xi);
  auto power = [&](double base, const Rational& e, const char* name) {
    if (e == 0) return 1.0;
    if (base == 0.0) {
      if (e < 0)
        throw DomainError(std::string("eval: ") + name + " vanishes at this point but carries exponent " +
                          to_string(e));
      return 0.0;
    }
    return std::pow(base, to_double(e));
  };
  double sum = 0.0;
  for (const auto& t : f.terms()) {
    sum += to_double(t.coeff) * power(c, t.exp.p, "cos(theta)") * power(s, t.exp.q, "sin(theta)") *
           power(ch, t.exp.r, "cosh(xi)") * power(sh, t.exp.s, "sinh(xi)");
  }
  return sum;
}

/// Elementary members of the family.
namespace fn {

inline FunExpr one() { return FunExpr::constant(Rational(1)); }
inline FunExpr power(const Rational& p, const Rational& q, const Rational& r, const Rational& s) {
  return FunExpr::monomial(Rational(1), p, q, r, s);
}
inline FunExpr cos_theta() { return power(1, 0, 0, 0); }
inline FunExpr sin_theta() { return power(0, 1, 0, 0); }
inline FunExpr sec_theta() { return power(-1, 0, 0, 0); }
inline FunExpr csc_theta() { return power(0, -1, 0, 0); }
inline FunExpr tan_theta() { return power(-1, 1, 0, 0); }
inline FunExpr cot_theta() { return power(1, -1, 0, 0); }
inline FunExpr cosh_xi() { return power(0, 0, 1, 0); }
inline FunExpr sinh_xi() { return power(0, 0, 0, 1); }
inline FunExpr tanh_xi() { return power(0, 0, -1, 1); }
inline FunExpr coth_xi() { return power(0, 0, 1, -1); }

}  // namespace fn

}  // namespace hyperladder
