#pragma once

// Randomized exact-zero identity suite over the operator realization.

#include "hyperladder/operators.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace hyperladder {

struct IdentityResult {
  std::string name;
  std::string group;
  int probes = 0;
  int failures = 0;
  bool advisory = false;  ///< reported, not counted towards the verdict

  bool passed() const { return failures == 0; }
};

struct SuiteConfig {
  std::uint64_t seed = 20240601;
  int probes = 5;
};

/// Draws labels and monomials with exponents in (1/4)Z.
class ProbeSource {
 public:
  explicit ProbeSource(std::uint64_t seed) : rng_(seed) {}

  Rational quarter() { return make_rational(dist_(rng_), 4); }
  Rational coefficient() {
    int k = 0;
    while (k == 0) k = dist_(rng_);
    return make_rational(k, 3);
  }
  ParamPoint label() { return {quarter(), quarter(), quarter()}; }
  FunExpr monomial() { return FunExpr::monomial(coefficient(), quarter(), quarter(), quarter(), quarter()); }
  FunExpr theta_monomial() { return FunExpr::monomial(coefficient(), quarter(), quarter(), 0, 0); }
  FunExpr xi_monomial() { return FunExpr::monomial(coefficient(), 0, 0, quarter(), quarter()); }
  /// Two-term probe so cancellations between terms are exercised.
  FunExpr binomial() { return monomial() + monomial(); }
  LabeledState state() { return {label(), binomial()}; }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<int> dist_{-12, 12};
};

/// A bracket relation [x, y] = coeff * z (coeff 0 means the bracket vanishes).
struct BracketRelation {
  Op x;
  Op y;
  Rational coeff;
  Op z;
};

inline std::string describe(const BracketRelation& r) {
  std::string lhs = "[" + std::string(name(r.x)) + "," + std::string(name(r.y)) + "]";
  if (r.coeff == 0) return lhs + " = 0";
  return lhs + " = " + to_string(r.coeff) + " " + std::string(name(r.z));
}

/// The su(2), su(1,1) x2 relations followed by the mixed su(2,1) table.
inline std::vector<BracketRelation> su21_relations() {
  using O = Op;
  const Rational h = make_rational(1, 2);
  const Rational z(0);
  return {
      {O::AMinus, O::APlus, -2, O::A},   {O::A, O::APlus, 1, O::APlus},    {O::A, O::AMinus, -1, O::AMinus},
      {O::BMinus, O::BPlus, 2, O::B},    {O::B, O::BPlus, 1, O::BPlus},    {O::B, O::BMinus, -1, O::BMinus},
      {O::CMinus, O::CPlus, 2, O::C},    {O::C, O::CPlus, 1, O::CPlus},    {O::C, O::CMinus, -1, O::CMinus},
      {O::APlus, O::BPlus, z, O::A},     {O::AMinus, O::BMinus, z, O::A},  {O::APlus, O::BMinus, -1, O::CMinus},
      {O::AMinus, O::BPlus, 1, O::CPlus}, {O::CPlus, O::BPlus, z, O::A},   {O::CMinus, O::BMinus, z, O::A},
      {O::CPlus, O::APlus, -1, O::BPlus}, {O::CMinus, O::AMinus, 1, O::BMinus}, {O::CPlus, O::BMinus, -1, O::AMinus},
      {O::CMinus, O::BPlus, 1, O::APlus}, {O::CPlus, O::AMinus, z, O::A},  {O::CMinus, O::APlus, z, O::A},
      {O::A, O::BPlus, h, O::BPlus},     {O::A, O::BMinus, -h, O::BMinus}, {O::B, O::APlus, h, O::APlus},
      {O::B, O::AMinus, -h, O::AMinus},  {O::C, O::BPlus, h, O::BPlus},    {O::C, O::BMinus, -h, O::BMinus},
      {O::C, O::APlus, -h, O::APlus},    {O::C, O::AMinus, h, O::AMinus},  {O::A, O::CMinus, h, O::CMinus},
      {O::A, O::CPlus, -h, O::CPlus},    {O::B, O::CMinus, -h, O::CMinus}, {O::B, O::CPlus, h, O::CPlus},
      {O::A, O::B, z, O::A},             {O::A, O::C, z, O::A},            {O::B, O::C, z, O::A},
  };
}

/// Closure of the three tilde subalgebras.
inline std::vector<BracketRelation> tilde_relations() {
  using O = Op;
  return {
      {O::AtildeMinus, O::AtildePlus, -2, O::Atilde}, {O::Atilde, O::AtildePlus, 1, O::AtildePlus},
      {O::Atilde, O::AtildeMinus, -1, O::AtildeMinus}, {O::BtildeMinus, O::BtildePlus, 2, O::Btilde},
      {O::Btilde, O::BtildePlus, 1, O::BtildePlus},   {O::Btilde, O::BtildeMinus, -1, O::BtildeMinus},
      {O::CtildeMinus, O::CtildePlus, 2, O::Ctilde},  {O::Ctilde, O::CtildePlus, 1, O::CtildePlus},
      {O::Ctilde, O::CtildeMinus, -1, O::CtildeMinus},
  };
}

inline FunExpr bracket_residual(const BracketRelation& r, const LabeledState& st, const Applier& applier) {
  const LabeledState c = commutator(r.x, r.y, st, applier);
  if (r.coeff == 0) return c.expr;
  const LabeledState rhs = applier(r.z, st);
  if (rhs.label != c.label) throw std::logic_error("bracket " + describe(r) + ": label mismatch");
  return c.expr - r.coeff * rhs.expr;
}

/// Sign with which I_axis X I_axis actually equals the table image of X.
/// Both sides vanish on the probe, so either sign fits.
constexpr int kSignUndetermined = 2;

inline int realized_reflection_sign(int axis, Op op, const LabeledState& st) {
  const SignedOp image = reflect(axis, op);
  const LabeledState lhs = apply_conjugated(axis, op, st);
  const LabeledState rhs = apply(image.op, st);
  if (lhs.label != rhs.label) return 0;
  if (lhs.expr.is_zero() && rhs.expr.is_zero()) return kSignUndetermined;
  if ((lhs.expr - rhs.expr).is_zero()) return 1;
  if ((lhs.expr + rhs.expr).is_zero()) return -1;
  return 0;
}

inline std::vector<IdentityResult> run_identity_suite(const SuiteConfig& cfg, const Applier& applier = apply) {
  ProbeSource src(cfg.seed);
  std::vector<IdentityResult> out;
  auto run = [&](std::string nm, std::string group, auto&& residual_is_zero) {
    IdentityResult r{std::move(nm), std::move(group), cfg.probes, 0};
    for (int k = 0; k < cfg.probes; ++k)
      if (!residual_is_zero()) ++r.failures;
    out.push_back(std::move(r));
  };

  for (const auto& rel : su21_relations())
    run(describe(rel), "commutators", [&] { return bracket_residual(rel, src.state(), applier).is_zero(); });

  run("A - B + C = 0", "realization", [&] {
    const LabeledState st = src.state();
    return (applier(Op::A, st).expr - applier(Op::B, st).expr + applier(Op::C, st).expr).is_zero();
  });

  const std::pair<Family, const char*> fams[] = {{Family::A, "theta"}, {Family::B, "chi"}, {Family::C, "beta"}};
  for (auto [fam, var] : fams) {
    for (bool shifted : {false, true}) {
      std::string nm = std::string("H_") + var + (shifted ? " = X- X+ + lambda'" : " = X+ X- + lambda");
      run(nm, "factorization", [&, fam = fam] {
        const FunExpr probe = fam == Family::A ? src.theta_monomial() + src.theta_monomial()
                                               : src.xi_monomial() + src.xi_monomial();
        return factorization_residual(fam, shifted, src.quarter(), src.quarter(), probe).is_zero();
      });
    }
  }

  const std::pair<Family, const char*> fam_names[] = {{Family::A, "A"}, {Family::B, "B"}, {Family::C, "C"}};
  for (auto [fam, fname] : fam_names)
    for (Sign s : {Sign::Minus, Sign::Plus})
      run(std::string(fname) + (s == Sign::Minus ? "-" : "+") + " intertwines H", "intertwining", [&, fam = fam] {
        return verify_intertwining(fam, s, src.label(), src.binomial()).is_zero();
      });

  run("H = -4 Casimir + C'^2/3 - 15/4", "casimir",
      [&] { return casimir_residual(src.state(), applier).is_zero(); });

  for (const auto& rel : tilde_relations())
    run(describe(rel), "tilde", [&] { return bracket_residual(rel, src.state(), applier).is_zero(); });

  for (Op x : kSo42Generators) {
    if (is_diagonal(x)) continue;
    run("[L_i, " + std::string(name(x)) + "] = shift_i " + std::string(name(x)), "grading", [&] {
      const LabeledState st = src.state();
      const ParamPoint s = shift(x);
      const Op ls[3] = {Op::L0, Op::L1, Op::L2};
      const Rational sh[3] = {s.l0, s.l1, s.l2};
      for (int i = 0; i < 3; ++i) {
        const BracketRelation rel{ls[i], x, sh[i], x};
        if (!bracket_residual(rel, st, applier).is_zero()) return false;
      }
      return true;
    });
  }

  // Reflection table: operator images must match up to sign; the table's
  // signs are reported separately.
  for (int axis = 0; axis < 3; ++axis) {
    for (Op x : kAllOps) {
      const std::string base = "I" + std::to_string(axis) + " " + std::string(name(x)) + " I" + std::to_string(axis);
      const SignedOp image = reflect(axis, x);
      const std::string rhs = (image.sign < 0 ? "-" : "") + std::string(name(image.op));
      std::vector<int> signs;
      run(base + " = +-" + std::string(name(image.op)), "reflections", [&] {
        const int s = realized_reflection_sign(axis, x, src.state());
        signs.push_back(s);
        return s != 0;
      });
      IdentityResult sign_row{base + " = " + rhs + " (table sign)", "reflection-signs", cfg.probes, 0, true};
      for (int s : signs)
        if (s != image.sign && s != kSignUndetermined) ++sign_row.failures;
      out.push_back(std::move(sign_row));
    }
  }
  return out;
}

/// Applier that perturbs one generator; used to show the suite detects faults.
inline Applier corrupted_applier(Op victim) {
  return [victim](Op op, const LabeledState& st) {
    LabeledState out = apply(op, st);
    if (op == victim) out.expr = out.expr + make_rational(1, 7) * (fn::cos_theta() * st.expr);
    return out;
  };
}

inline bool suite_passed(const std::vector<IdentityResult>& results) {
  for (const auto& r : results)
    if (!r.advisory && !r.passed()) return false;
  return true;
}

}  // namespace hyperladder
