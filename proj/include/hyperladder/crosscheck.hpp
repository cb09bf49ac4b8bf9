#pragma once

// Algebraic bound spectrum versus the separated numerical eigensolves.

#include "hyperladder/numeric.hpp"
#include "hyperladder/spectra.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace hyperladder {

struct CrosscheckRow {
  Rational energy;        ///< algebraic level
  double numeric = 0.0;   ///< closest numerical eigenvalue (NaN if none)
  double delta = 0.0;
};

struct CrosscheckReport {
  ParamPoint target;
  std::vector<double> alphas;
  std::vector<EigenResult> xi_solves;
  std::vector<CrosscheckRow> rows;
  std::vector<double> unmatched;  ///< numerical eigenvalues with no algebraic level within tolerance
  double tolerance = 1e-3;

  bool passed() const {
    if (!unmatched.empty()) return false;
    for (const auto& r : rows)
      if (!(r.delta <= tolerance)) return false;
    return true;
  }
};

/// Separation constants (1 + l0 + l1 + 2n)^2, n = 0 .. count-1.
inline std::vector<double> ladder_alphas(const ParamPoint& target, int count) {
  std::vector<double> out;
  for (int n = 0; n < count; ++n) {
    const double a = 1 + to_double(target.l0 + target.l1) + 2 * n;
    out.push_back(a * a);
  }
  return out;
}

/// Negative xi eigenvalues over the first `alpha_count` separation constants.
inline std::vector<double> numeric_bound_energies(const ParamPoint& target, const GridSpec& grid, int alpha_count,
                                                  std::vector<EigenResult>* solves = nullptr) {
  std::vector<double> out;
  for (double alpha : ladder_alphas(target, alpha_count)) {
    EigenResult r = solve_xi(to_double(target.l2), alpha, grid);
    out.insert(out.end(), r.eigenvalues.begin(), r.eigenvalues.end());
    if (solves) solves->push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline CrosscheckReport crosscheck(const ParamPoint& target, const GridSpec& grid, int alpha_count = 3,
                                   double tolerance = 1e-3) {
  CrosscheckReport rep;
  rep.target = target;
  rep.tolerance = tolerance;
  rep.alphas = ladder_alphas(target, alpha_count);
  const SpectrumReport exact = bound_spectrum(target);
  const std::vector<double> numeric = numeric_bound_energies(target, grid, alpha_count, &rep.xi_solves);
  for (const auto& lvl : exact.levels) {
    CrosscheckRow row{lvl.energy, std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::infinity()};
    for (double e : numeric) {
      const double d = std::abs(e - to_double(lvl.energy));
      if (d < row.delta) {
        row.delta = d;
        row.numeric = e;
      }
    }
    rep.rows.push_back(row);
  }
  for (double e : numeric) {
    bool hit = false;
    for (const auto& lvl : exact.levels) hit = hit || std::abs(e - to_double(lvl.energy)) <= tolerance;
    if (!hit) rep.unmatched.push_back(e);
  }
  return rep;
}

}  // namespace hyperladder
