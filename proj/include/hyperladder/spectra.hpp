#pragma once

// Fundamental states, representation lattices and bound spectra.

#include "hyperladder/inner.hpp"
#include "hyperladder/operators.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperladder {

class AdmissibilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Algebra { su21, so42 };

inline std::string_view name(Algebra a) { return a == Algebra::su21 ? "su21" : "so42"; }

// ---------------------------------------------------------------------------
// Fundamental states.

inline FunExpr ground_theta(const Rational& l0, const Rational& l1) {
  const Rational h = make_rational(1, 2);
  if (l0 < -h) throw AdmissibilityError("theta ground state needs l0 >= -1/2, got l0 = " + to_string(l0));
  if (l1 < -h) throw AdmissibilityError("theta ground state needs l1 >= -1/2, got l1 = " + to_string(l1));
  return fn::power(l0 + h, l1 + h, 0, 0);
}

/// cosh^(l2+1/2) sinh^(l0+1/2) in the hyperbolic pair.
inline FunExpr ground_chi(const Rational& l0, const Rational& l2) {
  const Rational h = make_rational(1, 2);
  if (l0 < -h) throw AdmissibilityError("chi ground state needs l0 >= -1/2, got l0 = " + to_string(l0));
  if (!(l0 + l2 < -1))
    throw AdmissibilityError("chi ground state needs l0 + l2 < -1, got " + to_string(l0 + l2));
  return fn::power(0, 0, l2 + h, l0 + h);
}

/// cosh^(l2+1/2) sinh^(1/2-l1) in the hyperbolic pair.
inline FunExpr ground_beta(const Rational& l1, const Rational& l2) {
  const Rational h = make_rational(1, 2);
  if (l1 > h) throw AdmissibilityError("beta ground state needs l1 <= 1/2, got l1 = " + to_string(l1));
  if (!(l2 - l1 < -1))
    throw AdmissibilityError("beta ground state needs l2 - l1 < -1, got " + to_string(l2 - l1));
  return fn::power(0, 0, l2 + h, h - l1);
}

/// su(2,1) fundamental state at (l0, 0, l2).
inline LabeledState ground_full(const Rational& l0, const Rational& l2) {
  const Rational h = make_rational(1, 2);
  if (l0 < -h) throw AdmissibilityError("fundamental state needs l0 >= -1/2, got l0 = " + to_string(l0));
  if (!(l0 + l2 < make_rational(-5, 2)))
    throw AdmissibilityError("fundamental state needs l0 + l2 < -5/2, got " + to_string(l0 + l2));
  return {{l0, Rational(0), l2}, fn::power(l0 + h, h, l2 + h, l0 + 1)};
}

inline LabeledState so42_vacuum(const Rational& l2) {
  if (!(l2 < make_rational(-5, 2)))
    throw AdmissibilityError("so(4,2) vacuum needs l2 < -5/2, got l2 = " + to_string(l2));
  return ground_full(Rational(0), l2);
}

inline Rational vertex_energy(const Rational& l0, const Rational& l2) {
  const Rational s = l0 + l2;
  return -(s + make_rational(3, 2)) * (s + make_rational(5, 2));
}

inline bool is_admissible_vertex(const ParamPoint& v) {
  return v.l1 == 0 && v.l0 >= make_rational(-1, 2) && v.l0 + v.l2 < make_rational(-5, 2);
}

// ---------------------------------------------------------------------------
// Normalization and Gram matrices.

/// Returns the unit-norm state and the constant N = 1/||st||.
inline std::pair<LabeledState, double> normalize(const LabeledState& st) {
  if (st.is_zero()) throw DivergenceError("cannot normalize the zero state");
  const double n = norm(st.expr);
  if (!(n > 0) || !std::isfinite(n)) throw DivergenceError("state has no finite nonzero norm");
  const double c = 1.0 / n;
  return {{st.label, Rational(c) * st.expr}, c};
}

inline Eigen::MatrixXd gram_matrix(const std::vector<LabeledState>& states, bool normalized = true) {
  const auto n = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) g(i, j) = g(j, i) = inner(states[i].expr, states[j].expr);
  if (normalized) {
    Eigen::VectorXd d = g.diagonal().cwiseSqrt().cwiseInverse();
    g = d.asDiagonal() * g * d.asDiagonal();
  }
  return g;
}

/// Singular values of the normalized Gram matrix, descending.
inline std::vector<double> gram_singular_values(const std::vector<LabeledState>& states) {
  if (states.empty()) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram_matrix(states));
  std::vector<double> sv;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) sv.push_back(std::abs(es.eigenvalues()[i]));
  std::sort(sv.rbegin(), sv.rend());
  return sv;
}

inline constexpr double kRankTolerance = 1e-9;

inline int gram_rank(const std::vector<LabeledState>& states) {
  for (const auto& s : states)
    if (s.is_zero()) throw DivergenceError("gram_rank: zero state has no normalized Gram entry");
  const auto sv = gram_singular_values(states);
  if (sv.empty()) return 0;
  return static_cast<int>(std::count_if(sv.begin(), sv.end(), [&](double x) { return x > kRankTolerance * sv[0]; }));
}

/// Gram-Schmidt in the invariant inner product; dependent inputs are dropped.
inline std::vector<LabeledState> orthonormalize(const std::vector<LabeledState>& states) {
  std::vector<LabeledState> out;
  for (const auto& st : states) {
    FunExpr v = st.expr;
    for (const auto& e : out) v = v - Rational(inner(e.expr, v)) * e.expr;
    if (v.is_zero()) continue;
    const double n = norm(v);
    if (n < 1e-7 * norm(st.expr)) continue;
    out.push_back({st.label, Rational(1.0 / n) * v});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Representation lattices.

inline std::vector<Op> raising_ops(Algebra algebra) {
  if (algebra == Algebra::su21) return {Op::APlus, Op::CPlus, Op::BPlus};
  return {Op::APlus, Op::CPlus, Op::BPlus, Op::AtildePlus, Op::CtildePlus, Op::BtildePlus};
}

/// Strictly increases along every raising shift of either algebra.
inline Rational lattice_potential(const ParamPoint& l) { return -l.l1 - 2 * l.l2; }

struct Witness {
  OperatorWord word;
  LabeledState state;
};

struct LatticeEdge {
  ParamPoint from;
  ParamPoint to;
  Op op;
};

struct LatticePoint {
  ParamPoint label;
  int depth = 0;
  int degeneracy = 0;              ///< rank of the span of generated states
  std::vector<Witness> basis;      ///< independent generated states
};

struct Lattice {
  ParamPoint vertex;
  Algebra algebra = Algebra::su21;
  std::vector<LatticePoint> points;  ///< ascending lattice potential
  std::vector<LatticeEdge> edges;

  const LatticePoint* find(const ParamPoint& l) const {
    for (const auto& p : points)
      if (p.label == l) return &p;
    return nullptr;
  }
};

namespace detail {

struct PotentialOrder {
  bool operator()(const ParamPoint& a, const ParamPoint& b) const {
    const Rational pa = lattice_potential(a), pb = lattice_potential(b);
    if (pa != pb) return pa < pb;
    return a < b;
  }
};

inline bool can_reach(const ParamPoint& from, const ParamPoint& to, Algebra algebra) {
  if (lattice_potential(from) > lattice_potential(to)) return false;
  if (from.l2 < to.l2) return false;
  if (algebra == Algebra::su21 && from.l0 < to.l0) return false;
  return true;
}

}  // namespace detail

/// Raising-word closure of the vertex state. Zero and non-normalizable images
/// are dropped. With `target`, labels that cannot lead to it are skipped.
inline Lattice enumerate_from_seed(const LabeledState& seed, Algebra algebra, int max_depth,
                                  const std::optional<ParamPoint>& target = std::nullopt) {
  Lattice lat;
  lat.vertex = seed.label;
  lat.algebra = algebra;
  if (max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");

  struct Pending {
    int depth;
    std::vector<Witness> candidates;
  };
  std::map<ParamPoint, Pending, detail::PotentialOrder> pending;
  pending[seed.label] = {0, {{{}, seed}}};
  const auto ops = raising_ops(algebra);

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    LatticePoint pt;
    pt.label = node.key();
    pt.depth = node.mapped().depth;
    auto& cands = node.mapped().candidates;
    // B-type raisings are commutators of A- and C-type ones; prefer words without them.
    auto b_count = [](const Witness& w) {
      return std::count_if(w.word.begin(), w.word.end(),
                           [](Op o) { return o == Op::BPlus || o == Op::BtildePlus; });
    };
    std::stable_sort(cands.begin(), cands.end(),
                     [&](const Witness& a, const Witness& b) { return b_count(a) < b_count(b); });
    std::vector<LabeledState> kept;
    for (auto& w : cands) {
      kept.push_back(w.state);
      if (gram_rank(kept) == static_cast<int>(kept.size())) {
        pt.basis.push_back(std::move(w));
      } else {
        kept.pop_back();
      }
    }
    pt.degeneracy = static_cast<int>(pt.basis.size());
    if (pt.depth < max_depth) {
      for (Op op : ops) {
        const ParamPoint next = pt.label + shift(op);
        if (target && !detail::can_reach(next, *target, algebra)) continue;
        bool linked = false;
        for (const auto& w : pt.basis) {
          LabeledState img = apply(op, w.state);
          if (img.is_zero() || !is_normalizable(img.expr)) continue;
          OperatorWord word{op};
          word.insert(word.end(), w.word.begin(), w.word.end());
          auto [it, fresh] = pending.try_emplace(next, Pending{pt.depth + 1, {}});
          if (!fresh) it->second.depth = std::min(it->second.depth, pt.depth + 1);
          it->second.candidates.push_back({std::move(word), std::move(img)});
          linked = true;
        }
        if (linked) lat.edges.push_back({pt.label, next, op});
      }
    }
    lat.points.push_back(std::move(pt));
  }
  return lat;
}

inline Lattice enumerate_lattice(const ParamPoint& vertex, Algebra algebra, int max_depth) {
  if (!is_admissible_vertex(vertex))
    throw AdmissibilityError("vertex " + vertex.str() + " is not an admissible fundamental label");
  const LabeledState seed = algebra == Algebra::su21 ? ground_full(vertex.l0, vertex.l2) : so42_vacuum(vertex.l2);
  if (algebra == Algebra::so42 && vertex.l0 != 0)
    throw AdmissibilityError("so(4,2) vertices have l0 = 0, got " + vertex.str());
  return enumerate_from_seed(seed, algebra, max_depth);
}

/// Minimal number of raising steps that can separate two labels.
inline int depth_bound(const ParamPoint& vertex, const ParamPoint& target) {
  const Rational d = lattice_potential(target) - lattice_potential(vertex);
  return d < 0 ? 0 : static_cast<int>(ceil_int(d));
}

/// Independent states at `target` generated from the vertex by raising words.
inline std::vector<Witness> witnesses_at(const ParamPoint& vertex, const ParamPoint& target,
                                         Algebra algebra = Algebra::su21) {
  if (!is_admissible_vertex(vertex))
    throw AdmissibilityError("vertex " + vertex.str() + " is not an admissible fundamental label");
  const LabeledState seed = algebra == Algebra::su21 ? ground_full(vertex.l0, vertex.l2) : so42_vacuum(vertex.l2);
  if (!detail::can_reach(vertex, target, algebra)) return {};
  const Lattice lat = enumerate_from_seed(seed, algebra, depth_bound(vertex, target), target);
  const LatticePoint* p = lat.find(target);
  return p ? p->basis : std::vector<Witness>{};
}

inline std::vector<LabeledState> states_at(const ParamPoint& vertex, const ParamPoint& target,
                                           Algebra algebra = Algebra::su21) {
  std::vector<LabeledState> out;
  for (auto& w : witnesses_at(vertex, target, algebra)) out.push_back(std::move(w.state));
  return out;
}

// ---------------------------------------------------------------------------
// Bound spectrum.

struct EnergyLevel {
  Rational energy;
  int degeneracy = 0;
  std::vector<OperatorWord> witnesses;
  ParamPoint vertex;
};

struct SpectrumReport {
  ParamPoint target;
  std::vector<EnergyLevel> levels;
  std::vector<std::vector<double>> normalizations;
};

/// Candidate su(2,1) vertex families for a target: l0' + l2' runs over
/// l0 + l2, l0 + l2 + 1, ... below -5/2 with l2' - l0' fixed by C'.
inline std::vector<ParamPoint> candidate_vertices(const ParamPoint& target) {
  std::vector<ParamPoint> out;
  const Rational cp = cprime(target);
  const Rational bound = make_rational(-5, 2);
  for (Rational sigma = target.l0 + target.l2; sigma < bound; sigma += 1) {
    const ParamPoint v{(sigma - cp) / 2, Rational(0), (sigma + cp) / 2};
    if (!is_admissible_vertex(v)) continue;
    if (!is_integer(v.l0 - target.l0)) continue;
    out.push_back(v);
  }
  return out;
}

inline SpectrumReport bound_spectrum(const ParamPoint& target) {
  SpectrumReport rep;
  rep.target = target;
  for (const ParamPoint& v : candidate_vertices(target)) {
    auto ws = witnesses_at(v, target);
    if (ws.empty()) continue;
    EnergyLevel lvl;
    lvl.energy = vertex_energy(v.l0, v.l2);
    lvl.vertex = v;
    std::vector<LabeledState> states;
    std::vector<double> norms;
    for (auto& w : ws) {
      lvl.witnesses.push_back(w.word);
      norms.push_back(normalize(w.state).second);
      states.push_back(std::move(w.state));
    }
    lvl.degeneracy = gram_rank(states);
    rep.levels.push_back(std::move(lvl));
    rep.normalizations.push_back(std::move(norms));
  }
  if (rep.levels.empty())
    throw AdmissibilityError("no admissible su(2,1) vertex generates a bound state at " + target.str());
  std::vector<std::size_t> idx(rep.levels.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return rep.levels[a].energy < rep.levels[b].energy; });
  SpectrumReport sorted{rep.target, {}, {}};
  for (auto i : idx) {
    sorted.levels.push_back(rep.levels[i]);
    sorted.normalizations.push_back(rep.normalizations[i]);
  }
  return sorted;
}

/// Rebuilds the state named by a witness word from a vertex.
inline LabeledState build_state(const ParamPoint& vertex, const OperatorWord& word) {
  return apply_word(word, ground_full(vertex.l0, vertex.l2));
}

}  // namespace hyperladder
