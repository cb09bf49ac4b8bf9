#pragma once

// Intertwining operators of the hyperboloid hierarchy realized as exact maps
// on labeled states in the (theta, xi) chart.
//
//   J0 = sin(theta) d_xi + cos(theta) coth(xi) d_theta
//   J1 = cos(theta) d_xi - sin(theta) coth(xi) d_theta
//
//   A(a,b)^{+-} = +-d_theta - (a+1/2) tan(theta) + (b+1/2) cot(theta)
//   B(a,c)^{+-} = +-J1 + (c+1/2) tanh(xi) cos(theta) + (a+1/2) coth(xi) sec(theta)
//   C(b,c)^{+-} = +-J0 + (c+1/2) tanh(xi) sin(theta) + (1/2-b) coth(xi) csc(theta)
//
// Free-index ("hatted") operators act as one half of the indexed operator that
// maps the state's label to label + shift. Lowering-type operators (A-, B-, C-)
// are indexed at the source label, raising-type ones at the target label, so
// the hatted operators on a label l = (l0, l1, l2) are
//
//   A^-  = 1/2 A(l0, l1)^-          shift (+1, +1,  0)
//   A^+  = 1/2 A(l0-1, l1-1)^+      shift (-1, -1,  0)
//   B^-  = 1/2 B(l0, l2)^-          shift (+1,  0, +1)
//   B^+  = 1/2 B(l0-1, l2-1)^+      shift (-1,  0, -1)
//   C^-  = 1/2 C(l1, l2)^-          shift ( 0, -1, +1)
//   C^+  = 1/2 C(l1+1, l2-1)^+      shift ( 0, +1, -1)
//
// Tilde operators are conjugates under label reflections: A~ and B~ under
// I0 (l0 -> -l0), C~ under I1 (l1 -> -l1).

#include "hyperladder/funexpr.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperladder {

struct ParamPoint {
  Rational l0;
  Rational l1;
  Rational l2;

  friend bool operator==(const ParamPoint& a, const ParamPoint& b) {
    return a.l0 == b.l0 && a.l1 == b.l1 && a.l2 == b.l2;
  }
  friend bool operator!=(const ParamPoint& a, const ParamPoint& b) { return !(a == b); }
  friend bool operator<(const ParamPoint& a, const ParamPoint& b) {
    return std::tie(a.l0, a.l1, a.l2) < std::tie(b.l0, b.l1, b.l2);
  }
  friend ParamPoint operator+(const ParamPoint& a, const ParamPoint& b) {
    return {a.l0 + b.l0, a.l1 + b.l1, a.l2 + b.l2};
  }
  friend ParamPoint operator-(const ParamPoint& a, const ParamPoint& b) {
    return {a.l0 - b.l0, a.l1 - b.l1, a.l2 - b.l2};
  }
  friend ParamPoint operator-(const ParamPoint& a) { return {-a.l0, -a.l1, -a.l2}; }

  std::string str() const {
    return "(" + to_string(l0) + "," + to_string(l1) + "," + to_string(l2) + ")";
  }
};

struct LabeledState {
  ParamPoint label;
  FunExpr expr;

  bool is_zero() const { return expr.is_zero(); }
  friend bool operator==(const LabeledState& a, const LabeledState& b) {
    return a.label == b.label && a.expr == b.expr;
  }
};

/// so(4,2) generators plus the diagonal su(2,1)-type elements used in bracket
/// right-hand sides and in the Casimir.
enum class Op {
  APlus,
  AMinus,
  AtildePlus,
  AtildeMinus,
  BPlus,
  BMinus,
  BtildePlus,
  BtildeMinus,
  CPlus,
  CMinus,
  CtildePlus,
  CtildeMinus,
  L0,
  L1,
  L2,
  A,
  B,
  C,
  Atilde,
  Btilde,
  Ctilde,
};

inline constexpr std::array<Op, 21> kAllOps = {
    Op::APlus,  Op::AMinus, Op::AtildePlus, Op::AtildeMinus, Op::BPlus,  Op::BMinus, Op::BtildePlus,
    Op::BtildeMinus, Op::CPlus,  Op::CMinus,  Op::CtildePlus,  Op::CtildeMinus, Op::L0,     Op::L1,
    Op::L2,     Op::A,      Op::B,          Op::C,           Op::Atilde, Op::Btilde, Op::Ctilde,
};

/// The fifteen generators of the so(4,2) set.
inline constexpr std::array<Op, 15> kSo42Generators = {
    Op::APlus,  Op::AMinus,      Op::AtildePlus, Op::AtildeMinus, Op::BPlus,
    Op::BMinus, Op::BtildePlus,  Op::BtildeMinus, Op::CPlus,      Op::CMinus,
    Op::CtildePlus, Op::CtildeMinus, Op::L0,     Op::L1,          Op::L2,
};

inline std::string_view name(Op op) {
  switch (op) {
    case Op::APlus: return "A+";
    case Op::AMinus: return "A-";
    case Op::AtildePlus: return "Atilde+";
    case Op::AtildeMinus: return "Atilde-";
    case Op::BPlus: return "B+";
    case Op::BMinus: return "B-";
    case Op::BtildePlus: return "Btilde+";
    case Op::BtildeMinus: return "Btilde-";
    case Op::CPlus: return "C+";
    case Op::CMinus: return "C-";
    case Op::CtildePlus: return "Ctilde+";
    case Op::CtildeMinus: return "Ctilde-";
    case Op::L0: return "L0";
    case Op::L1: return "L1";
    case Op::L2: return "L2";
    case Op::A: return "A";
    case Op::B: return "B";
    case Op::C: return "C";
    case Op::Atilde: return "Atilde";
    case Op::Btilde: return "Btilde";
    case Op::Ctilde: return "Ctilde";
  }
  return "?";
}

inline std::optional<Op> parse_op(std::string_view text) {
  for (Op op : kAllOps)
    if (name(op) == text) return op;
  return std::nullopt;
}

inline bool is_diagonal(Op op) {
  switch (op) {
    case Op::L0:
    case Op::L1:
    case Op::L2:
    case Op::A:
    case Op::B:
    case Op::C:
    case Op::Atilde:
    case Op::Btilde:
    case Op::Ctilde: return true;
    default: return false;
  }
}

/// Label shift carried by each operator.
inline ParamPoint shift(Op op) {
  auto p = [](int a, int b, int c) { return ParamPoint{Rational(a), Rational(b), Rational(c)}; };
  switch (op) {
    case Op::APlus: return p(-1, -1, 0);
    case Op::AMinus: return p(1, 1, 0);
    case Op::AtildePlus: return p(1, -1, 0);
    case Op::AtildeMinus: return p(-1, 1, 0);
    case Op::BPlus: return p(-1, 0, -1);
    case Op::BMinus: return p(1, 0, 1);
    case Op::BtildePlus: return p(1, 0, -1);
    case Op::BtildeMinus: return p(-1, 0, 1);
    case Op::CPlus: return p(0, 1, -1);
    case Op::CMinus: return p(0, -1, 1);
    case Op::CtildePlus: return p(0, -1, -1);
    case Op::CtildeMinus: return p(0, 1, 1);
    default: return p(0, 0, 0);
  }
}

/// Operators applied right to left: word {C+, A+} means C+ (A+ state).
using OperatorWord = std::vector<Op>;

inline std::string to_string(const OperatorWord& word) {
  std::string out;
  for (Op op : word) {
    if (!out.empty()) out += ' ';
    out += name(op);
  }
  return out;
}

/// Parses whitespace- or comma-separated operator names.
inline OperatorWord parse_word(std::string_view text) {
  OperatorWord word;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != ',' && text[j] != '\t') ++j;
    if (j > i) {
      auto op = parse_op(text.substr(i, j - i));
      if (!op) throw ParseError("unknown operator '" + std::string(text.substr(i, j - i)) + "'");
      word.push_back(*op);
    }
    i = j;
  }
  return word;
}

enum class Family { A, B, C };
enum class Sign { Plus, Minus };

// ---------------------------------------------------------------------------
// Chart-level building blocks.

inline FunExpr apply_J0(const FunExpr& f) {
  static const FunExpr sin_t = fn::sin_theta();
  static const FunExpr cos_coth = fn::cos_theta() * fn::coth_xi();
  return sin_t * d_xi(f) + cos_coth * d_theta(f);
}

inline FunExpr apply_J1(const FunExpr& f) {
  static const FunExpr cos_t = fn::cos_theta();
  static const FunExpr sin_coth = fn::sin_theta() * fn::coth_xi();
  return cos_t * d_xi(f) - sin_coth * d_theta(f);
}

namespace detail {
inline const Rational& half() {
  static const Rational h = make_rational(1, 2);
  return h;
}
inline const Rational& quarter() {
  static const Rational q = make_rational(1, 4);
  return q;
}
inline Rational sgn(Sign s) { return s == Sign::Plus ? Rational(1) : Rational(-1); }
}  // namespace detail

/// Indexed A(a,b)^{+-} (theta only; identical in every chart containing theta).
inline FunExpr apply_A(Sign sign, const Rational& a, const Rational& b, const FunExpr& f) {
  static const FunExpr tan_t = fn::tan_theta();
  static const FunExpr cot_t = fn::cot_theta();
  const Rational& h = detail::half();
  return detail::sgn(sign) * d_theta(f) - (a + h) * (tan_t * f) + (b + h) * (cot_t * f);
}

/// Indexed B(a,c)^{+-} in the (theta, xi) chart.
inline FunExpr apply_B(Sign sign, const Rational& a, const Rational& c, const FunExpr& f) {
  static const FunExpr tanh_cos = fn::tanh_xi() * fn::cos_theta();
  static const FunExpr coth_sec = fn::coth_xi() * fn::sec_theta();
  const Rational& h = detail::half();
  return detail::sgn(sign) * apply_J1(f) + (c + h) * (tanh_cos * f) + (a + h) * (coth_sec * f);
}

/// Indexed C(b,c)^{+-} in the (theta, xi) chart.
inline FunExpr apply_C(Sign sign, const Rational& b, const Rational& c, const FunExpr& f) {
  static const FunExpr tanh_sin = fn::tanh_xi() * fn::sin_theta();
  static const FunExpr coth_csc = fn::coth_xi() * fn::csc_theta();
  const Rational& h = detail::half();
  return detail::sgn(sign) * apply_J0(f) + (c + h) * (tanh_sin * f) + (h - b) * (coth_csc * f);
}

/// One-variable B(a,c)^{+-} = +-d_chi + (c+1/2) tanh(chi) + (a+1/2) coth(chi), with
/// chi carried by the hyperbolic exponent pair.
inline FunExpr apply_B_1d(Sign sign, const Rational& a, const Rational& c, const FunExpr& f) {
  static const FunExpr tanh_x = fn::tanh_xi();
  static const FunExpr coth_x = fn::coth_xi();
  const Rational& h = detail::half();
  return detail::sgn(sign) * d_xi(f) + (c + h) * (tanh_x * f) + (a + h) * (coth_x * f);
}

/// One-variable C(b,c)^{+-} = +-d_beta + (c+1/2) tanh(beta) + (1/2-b) coth(beta).
inline FunExpr apply_C_1d(Sign sign, const Rational& b, const Rational& c, const FunExpr& f) {
  static const FunExpr tanh_x = fn::tanh_xi();
  static const FunExpr coth_x = fn::coth_xi();
  const Rational& h = detail::half();
  return detail::sgn(sign) * d_xi(f) + (c + h) * (tanh_x * f) + (h - b) * (coth_x * f);
}

// ---------------------------------------------------------------------------
// Labels, diagonal values, reflections.

/// Eigenvalue of the diagonal operator `op` on a state labeled `l`.
inline Rational diagonal_value(Op op, const ParamPoint& l) {
  const Rational& h = detail::half();
  switch (op) {
    case Op::L0: return l.l0;
    case Op::L1: return l.l1;
    case Op::L2: return l.l2;
    case Op::A: return -h * (l.l0 + l.l1);
    case Op::B: return -h * (l.l0 + l.l2);
    case Op::C: return -h * (l.l2 - l.l1);
    case Op::Atilde: return -h * (-l.l0 + l.l1);
    case Op::Btilde: return -h * (-l.l0 + l.l2);
    case Op::Ctilde: return -h * (l.l2 + l.l1);
    default: throw std::invalid_argument("diagonal_value: " + std::string(name(op)) + " is not diagonal");
  }
}

/// -(l0+l1)/2, -(l0+l2)/2, -(l2-l1)/2 for the A, B, C families.
inline Rational diag_eigenvalue(Family which, const ParamPoint& label) {
  switch (which) {
    case Family::A: return diagonal_value(Op::A, label);
    case Family::B: return diagonal_value(Op::B, label);
    case Family::C: return diagonal_value(Op::C, label);
  }
  return Rational(0);
}

inline ParamPoint reflect_label(int axis, ParamPoint l) {
  switch (axis) {
    case 0: l.l0 = -l.l0; break;
    case 1: l.l1 = -l.l1; break;
    case 2: l.l2 = -l.l2; break;
    default: throw std::invalid_argument("reflection axis must be 0, 1 or 2");
  }
  return l;
}

struct SignedOp {
  int sign;  ///< +1 or -1
  Op op;
  friend bool operator==(const SignedOp& a, const SignedOp& b) { return a.sign == b.sign && a.op == b.op; }
};

/// Conjugation table of the reflections I0, I1, I2 (hatted operators on the
/// left, tilde images on the right; the table is an involution).
inline SignedOp reflect(int axis, Op op) {
  auto same = [op] { return SignedOp{1, op}; };
  switch (axis) {
    case 0:
      switch (op) {
        case Op::APlus: return {1, Op::AtildePlus};
        case Op::AMinus: return {1, Op::AtildeMinus};
        case Op::A: return {1, Op::Atilde};
        case Op::AtildePlus: return {1, Op::APlus};
        case Op::AtildeMinus: return {1, Op::AMinus};
        case Op::Atilde: return {1, Op::A};
        case Op::BPlus: return {1, Op::BtildePlus};
        case Op::BMinus: return {1, Op::BtildeMinus};
        case Op::B: return {1, Op::Btilde};
        case Op::BtildePlus: return {1, Op::BPlus};
        case Op::BtildeMinus: return {1, Op::BMinus};
        case Op::Btilde: return {1, Op::B};
        case Op::L0: return {-1, Op::L0};
        default: return same();
      }
    case 1:
      switch (op) {
        case Op::APlus: return {1, Op::AtildeMinus};
        case Op::AMinus: return {1, Op::AtildePlus};
        case Op::A: return {-1, Op::Atilde};
        case Op::AtildeMinus: return {1, Op::APlus};
        case Op::AtildePlus: return {1, Op::AMinus};
        case Op::Atilde: return {-1, Op::A};
        case Op::CPlus: return {1, Op::CtildePlus};
        case Op::CMinus: return {1, Op::CtildeMinus};
        case Op::C: return {1, Op::Ctilde};
        case Op::CtildePlus: return {1, Op::CPlus};
        case Op::CtildeMinus: return {1, Op::CMinus};
        case Op::Ctilde: return {1, Op::C};
        case Op::L1: return {-1, Op::L1};
        default: return same();
      }
    case 2:
      switch (op) {
        case Op::BPlus: return {1, Op::BtildeMinus};
        case Op::BMinus: return {1, Op::BtildePlus};
        case Op::B: return {-1, Op::Btilde};
        case Op::BtildeMinus: return {1, Op::BPlus};
        case Op::BtildePlus: return {1, Op::BMinus};
        case Op::Btilde: return {-1, Op::B};
        case Op::CPlus: return {-1, Op::CtildeMinus};
        case Op::CMinus: return {-1, Op::CtildePlus};
        case Op::C: return {-1, Op::Ctilde};
        case Op::CtildeMinus: return {-1, Op::CPlus};
        case Op::CtildePlus: return {-1, Op::CMinus};
        case Op::Ctilde: return {-1, Op::C};
        case Op::L2: return {-1, Op::L2};
        default: return same();
      }
    default: throw std::invalid_argument("reflection axis must be 0, 1 or 2");
  }
}

// ---------------------------------------------------------------------------
// Action on labeled states.

namespace detail {

inline FunExpr apply_hatted_expr(Op op, const ParamPoint& l, const FunExpr& f) {
  const Rational& h = half();
  switch (op) {
    case Op::AMinus: return h * apply_A(Sign::Minus, l.l0, l.l1, f);
    case Op::APlus: return h * apply_A(Sign::Plus, l.l0 - 1, l.l1 - 1, f);
    case Op::BMinus: return h * apply_B(Sign::Minus, l.l0, l.l2, f);
    case Op::BPlus: return h * apply_B(Sign::Plus, l.l0 - 1, l.l2 - 1, f);
    case Op::CMinus: return h * apply_C(Sign::Minus, l.l1, l.l2, f);
    case Op::CPlus: return h * apply_C(Sign::Plus, l.l1 + 1, l.l2 - 1, f);
    default: throw std::logic_error("apply_hatted_expr: not a hatted ladder operator");
  }
}

}  // namespace detail

/// Applies one generator. The function part of a reflected label is unchanged,
/// so a tilde operator is the hatted operator evaluated at the reflected label.
inline LabeledState apply(Op op, const LabeledState& st) {
  if (is_diagonal(op)) return {st.label, diagonal_value(op, st.label) * st.expr};
  const ParamPoint target = st.label + shift(op);
  switch (op) {
    case Op::AtildePlus:
    case Op::AtildeMinus:
      return {target, detail::apply_hatted_expr(op == Op::AtildePlus ? Op::APlus : Op::AMinus,
                                                 reflect_label(0, st.label), st.expr)};
    case Op::BtildePlus:
    case Op::BtildeMinus:
      return {target, detail::apply_hatted_expr(op == Op::BtildePlus ? Op::BPlus : Op::BMinus,
                                                 reflect_label(0, st.label), st.expr)};
    case Op::CtildePlus:
    case Op::CtildeMinus:
      return {target, detail::apply_hatted_expr(op == Op::CtildePlus ? Op::CPlus : Op::CMinus,
                                                 reflect_label(1, st.label), st.expr)};
    default: return {target, detail::apply_hatted_expr(op, st.label, st.expr)};
  }
}

/// Hook type so verification code can run against a substituted realization.
using Applier = std::function<LabeledState(Op, const LabeledState&)>;

inline LabeledState apply_word(const OperatorWord& word, LabeledState st, const Applier& applier = apply) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) st = applier(*it, st);
  return st;
}

/// Conjugation I_axis X I_axis realized on labels.
inline LabeledState apply_conjugated(int axis, Op op, const LabeledState& st) {
  LabeledState out = apply(op, {reflect_label(axis, st.label), st.expr});
  out.label = reflect_label(axis, out.label);
  return out;
}

// ---------------------------------------------------------------------------
// Hamiltonians.

/// theta bracket: -d_theta^2 + (l1^2-1/4)/sin^2 + (l0^2-1/4)/cos^2
inline FunExpr apply_theta_bracket(const Rational& l0, const Rational& l1, const FunExpr& f) {
  static const FunExpr csc2 = fn::power(0, -2, 0, 0);
  static const FunExpr sec2 = fn::power(-2, 0, 0, 0);
  const Rational& q = detail::quarter();
  return -d_theta(d_theta(f)) + (l1 * l1 - q) * (csc2 * f) + (l0 * l0 - q) * (sec2 * f);
}

/// H_l on the (theta, xi) chart.
inline FunExpr apply_hamiltonian(const ParamPoint& l, const FunExpr& f) {
  static const FunExpr coth_x = fn::coth_xi();
  static const FunExpr sech2 = fn::power(0, 0, -2, 0);
  static const FunExpr csch2 = fn::power(0, 0, 0, -2);
  const Rational& q = detail::quarter();
  const FunExpr fx = d_xi(f);
  return -d_xi(fx) - coth_x * fx - (l.l2 * l.l2 - q) * (sech2 * f) + csch2 * apply_theta_bracket(l.l0, l.l1, f);
}

inline FunExpr apply_hamiltonian(const LabeledState& st) { return apply_hamiltonian(st.label, st.expr); }

class VariableMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SeparatedVar { Theta, Chi, Beta };

/// One-variable factor Hamiltonians. theta uses the (cos, sin) pair; chi and
/// beta reuse the (cosh, sinh) pair for (cosh chi, sinh chi) / (cosh beta, sinh beta).
///   theta: params (l0, l1)   -d^2 + (l1^2-1/4)/sin^2 + (l0^2-1/4)/cos^2
///   chi:   params (l0, l2)   -d^2 + (l0^2-1/4)/sinh^2 - (l2^2-1/4)/cosh^2
///   beta:  params (l1, l2)   -d^2 + (l1^2-1/4)/sinh^2 - (l2^2-1/4)/cosh^2
inline FunExpr apply_separated(SeparatedVar which, const FunExpr& f, const Rational& first, const Rational& second) {
  static const FunExpr csch2 = fn::power(0, 0, 0, -2);
  static const FunExpr sech2 = fn::power(0, 0, -2, 0);
  const Rational& q = detail::quarter();
  if (which == SeparatedVar::Theta) {
    if (!f.theta_only()) throw VariableMismatchError("theta factor Hamiltonian applied to a function of xi");
    return apply_theta_bracket(first, second, f);
  }
  if (!f.xi_only())
    throw VariableMismatchError("hyperbolic factor Hamiltonian applied to a function of theta");
  return -d_xi(d_xi(f)) + (first * first - q) * (csch2 * f) - (second * second - q) * (sech2 * f);
}

/// Factorization constants: (1+a+b)^2 for theta, -(1+a+c)^2 for chi, -(1-b+c)^2 for beta.
inline Rational factorization_constant(Family family, const Rational& x, const Rational& y) {
  switch (family) {
    case Family::A: return (1 + x + y) * (1 + x + y);
    case Family::B: return -(1 + x + y) * (1 + x + y);
    case Family::C: return -(1 - x + y) * (1 - x + y);
  }
  return Rational(0);
}

/// Residual of H = X^+ X^- + lambda (upper = false) or of the shifted form
/// H = X^- X^+ + lambda' with the neighbouring index (upper = true). Both are
/// exactly zero for any probe.
inline FunExpr factorization_residual(Family family, bool shifted, const Rational& x, const Rational& y,
                                      const FunExpr& probe) {
  switch (family) {
    case Family::A: {
      const FunExpr h = apply_separated(SeparatedVar::Theta, probe, x, y);
      if (!shifted)
        return h - apply_A(Sign::Plus, x, y, apply_A(Sign::Minus, x, y, probe)) -
               factorization_constant(family, x, y) * probe;
      return h - apply_A(Sign::Minus, x - 1, y - 1, apply_A(Sign::Plus, x - 1, y - 1, probe)) -
             factorization_constant(family, x - 1, y - 1) * probe;
    }
    case Family::B: {
      const FunExpr h = apply_separated(SeparatedVar::Chi, probe, x, y);
      if (!shifted)
        return h - apply_B_1d(Sign::Plus, x, y, apply_B_1d(Sign::Minus, x, y, probe)) -
               factorization_constant(family, x, y) * probe;
      return h - apply_B_1d(Sign::Minus, x - 1, y - 1, apply_B_1d(Sign::Plus, x - 1, y - 1, probe)) -
             factorization_constant(family, x - 1, y - 1) * probe;
    }
    case Family::C: {
      const FunExpr h = apply_separated(SeparatedVar::Beta, probe, x, y);
      if (!shifted)
        return h - apply_C_1d(Sign::Plus, x, y, apply_C_1d(Sign::Minus, x, y, probe)) -
               factorization_constant(family, x, y) * probe;
      return h - apply_C_1d(Sign::Minus, x + 1, y - 1, apply_C_1d(Sign::Plus, x + 1, y - 1, probe)) -
             factorization_constant(family, x + 1, y - 1) * probe;
    }
  }
  return {};
}

/// Intertwining residual on the full Hamiltonian. With l = label:
///   A: l' = l - (1,1,0)    Minus: A-_{l'} H_{l'} - H_l A-_{l'}    Plus: A+_{l'} H_l - H_{l'} A+_{l'}
///   B: l' = l - (1,0,1)    same pattern with B
///   C: l' = l + (0,1,-1)   Minus: C-_{l'} H_{l'} - H_l C-_{l'}    Plus: C+_{l'} H_l - H_{l'} C+_{l'}
inline FunExpr verify_intertwining(Family family, Sign direction, const ParamPoint& label, const FunExpr& probe) {
  ParamPoint lp = label;
  std::function<FunExpr(Sign, const FunExpr&)> op;
  switch (family) {
    case Family::A:
      lp = label - ParamPoint{1, 1, 0};
      op = [lp](Sign s, const FunExpr& f) { return apply_A(s, lp.l0, lp.l1, f); };
      break;
    case Family::B:
      lp = label - ParamPoint{1, 0, 1};
      op = [lp](Sign s, const FunExpr& f) { return apply_B(s, lp.l0, lp.l2, f); };
      break;
    case Family::C:
      lp = label + ParamPoint{0, 1, -1};
      op = [lp](Sign s, const FunExpr& f) { return apply_C(s, lp.l1, lp.l2, f); };
      break;
  }
  if (direction == Sign::Minus)
    return op(Sign::Minus, apply_hamiltonian(lp, probe)) - apply_hamiltonian(label, op(Sign::Minus, probe));
  return op(Sign::Plus, apply_hamiltonian(label, probe)) - apply_hamiltonian(lp, op(Sign::Plus, probe));
}

inline FunExpr verify_intertwining(Family family, const ParamPoint& label, const FunExpr& probe) {
  return verify_intertwining(family, Sign::Minus, label, probe);
}

// ---------------------------------------------------------------------------
// Brackets and Casimirs.

/// [x, y] st. Both orderings land on the same label because shifts commute.
inline LabeledState commutator(Op x, Op y, const LabeledState& st, const Applier& applier = apply) {
  const LabeledState xy = applier(x, applier(y, st));
  const LabeledState yx = applier(y, applier(x, st));
  if (xy.label != yx.label) throw std::logic_error("commutator: label bookkeeping diverged");
  return {xy.label, xy.expr - yx.expr};
}

/// C' = l1 + l2 - l0.
inline Rational cprime(const ParamPoint& l) { return l.l1 + l.l2 - l.l0; }

/// Second-order su(2,1) Casimir
///   A+A- - B+B- - C+C- + 2/3 (A^2 + B^2 + C^2) - (A + B + C)
inline FunExpr apply_casimir(const LabeledState& st, const Applier& applier = apply) {
  const Rational a = diagonal_value(Op::A, st.label);
  const Rational b = diagonal_value(Op::B, st.label);
  const Rational c = diagonal_value(Op::C, st.label);
  const FunExpr aa = apply_word({Op::APlus, Op::AMinus}, st, applier).expr;
  const FunExpr bb = apply_word({Op::BPlus, Op::BMinus}, st, applier).expr;
  const FunExpr cc = apply_word({Op::CPlus, Op::CMinus}, st, applier).expr;
  const Rational diag = make_rational(2, 3) * (a * a + b * b + c * c) - (a + b + c);
  return aa - bb - cc + diag * st.expr;
}

/// H - (-4 Casimir + C'^2/3 - 15/4), exactly zero.
inline FunExpr casimir_residual(const LabeledState& st, const Applier& applier = apply) {
  const Rational cp = cprime(st.label);
  return apply_hamiltonian(st) -
         (Rational(-4) * apply_casimir(st, applier) + (cp * cp / 3 - make_rational(15, 4)) * st.expr);
}

}  // namespace hyperladder
