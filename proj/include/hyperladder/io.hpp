#pragma once

// Serialization of reports, lattices and samples. Exact values travel as
// "p/q" strings; floats only for norms, samples and numeric eigenvalues.

#include "hyperladder/numeric.hpp"
#include "hyperladder/spectra.hpp"

#include <json.hpp>

#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hyperladder {

using json = nlohmann::json;

inline json to_json(const ParamPoint& p) {
  return {{"l0", to_string(p.l0)}, {"l1", to_string(p.l1)}, {"l2", to_string(p.l2)}};
}

inline ParamPoint param_point_from_json(const json& j) {
  return {parse_rational(j.at("l0").get<std::string>()), parse_rational(j.at("l1").get<std::string>()),
          parse_rational(j.at("l2").get<std::string>())};
}

inline json to_json(const SpectrumReport& rep) {
  json levels = json::array();
  for (std::size_t i = 0; i < rep.levels.size(); ++i) {
    const auto& lvl = rep.levels[i];
    json words = json::array();
    for (const auto& w : lvl.witnesses) words.push_back(to_string(w));
    levels.push_back({{"energy", to_string(lvl.energy)},
                      {"degeneracy", lvl.degeneracy},
                      {"vertex", to_json(lvl.vertex)},
                      {"witnesses", words},
                      {"normalizations", i < rep.normalizations.size() ? json(rep.normalizations[i]) : json::array()}});
  }
  return {{"target", to_json(rep.target)}, {"levels", levels}};
}

inline SpectrumReport spectrum_from_json(const json& j) {
  SpectrumReport rep;
  rep.target = param_point_from_json(j.at("target"));
  for (const auto& l : j.at("levels")) {
    EnergyLevel lvl;
    lvl.energy = parse_rational(l.at("energy").get<std::string>());
    lvl.degeneracy = l.at("degeneracy").get<int>();
    lvl.vertex = param_point_from_json(l.at("vertex"));
    for (const auto& w : l.at("witnesses")) lvl.witnesses.push_back(parse_word(w.get<std::string>()));
    rep.levels.push_back(std::move(lvl));
    rep.normalizations.push_back(l.at("normalizations").get<std::vector<double>>());
  }
  return rep;
}

inline bool operator==(const EnergyLevel& a, const EnergyLevel& b) {
  return a.energy == b.energy && a.degeneracy == b.degeneracy && a.witnesses == b.witnesses && a.vertex == b.vertex;
}

inline bool operator==(const SpectrumReport& a, const SpectrumReport& b) {
  return a.target == b.target && a.levels == b.levels && a.normalizations == b.normalizations;
}

inline json to_json(const Lattice& lat) {
  json nodes = json::array(), edges = json::array();
  for (const auto& p : lat.points) {
    json words = json::array();
    for (const auto& w : p.basis) words.push_back(to_string(w.word));
    nodes.push_back({{"label", to_json(p.label)},
                     {"depth", p.depth},
                     {"degeneracy", p.degeneracy},
                     {"cprime", to_string(cprime(p.label))},
                     {"witnesses", words}});
  }
  for (const auto& e : lat.edges)
    edges.push_back({{"from", to_json(e.from)}, {"to", to_json(e.to)}, {"op", std::string(name(e.op))}});
  const Rational energy = vertex_energy(lat.vertex.l0, lat.vertex.l2);
  return {{"vertex", to_json(lat.vertex)},
          {"algebra", std::string(name(lat.algebra))},
          {"energy", to_string(energy)},
          {"nodes", nodes},
          {"edges", edges}};
}

inline std::string dot_id(const ParamPoint& p) { return "\"" + p.str() + "\""; }

inline void write_dot(std::ostream& os, const Lattice& lat) {
  os << "digraph lattice {\n  rankdir=TB;\n  node [shape=ellipse, fontsize=10];\n";
  std::map<int, std::vector<const LatticePoint*>> by_depth;
  for (const auto& p : lat.points) by_depth[p.depth].push_back(&p);
  for (const auto& [d, pts] : by_depth) {
    os << "  { rank=same;";
    for (const auto* p : pts) os << ' ' << dot_id(p->label) << ';';
    os << " }\n";
  }
  for (const auto& p : lat.points)
    os << "  " << dot_id(p.label) << " [label=\"" << p.label.str() << "\\ndeg " << p.degeneracy << "\"];\n";
  for (const auto& e : lat.edges)
    os << "  " << dot_id(e.from) << " -> " << dot_id(e.to) << " [label=\"" << name(e.op) << "\"];\n";
  os << "}\n";
}

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Rectangular sample over (0, pi/2) x (0, cutoff), cell midpoints.
struct Sample {
  std::vector<double> theta, xi, value;
};

inline Sample sample_state(const FunExpr& f, int n_theta, int n_xi, double cutoff) {
  Sample s;
  const double ht = std::numbers::pi / 2 / n_theta, hx = cutoff / n_xi;
  for (int i = 0; i < n_theta; ++i)
    for (int j = 0; j < n_xi; ++j) {
      const double t = (i + 0.5) * ht, x = (j + 0.5) * hx;
      s.theta.push_back(t);
      s.xi.push_back(x);
      s.value.push_back(eval(f, t, x));
    }
  return s;
}

inline void write_csv(std::ostream& os, const Sample& s, const std::vector<std::string>& extra_names = {},
                      const std::vector<std::vector<double>>& extra = {}) {
  os << "theta,xi,value";
  for (const auto& n : extra_names) os << ',' << n;
  os << '\n';
  for (std::size_t i = 0; i < s.value.size(); ++i) {
    os << format_double(s.theta[i]) << ',' << format_double(s.xi[i]) << ',' << format_double(s.value[i]);
    for (const auto& col : extra) os << ',' << format_double(col[i]);
    os << '\n';
  }
}

inline json to_json(const EigenResult& r) {
  return {{"eigenvalues", r.eigenvalues},
          {"residual_norms", r.residual_norms},
          {"grid",
           {{"variable", r.grid.variable == GridVariable::theta ? "theta" : "xi"},
            {"n", r.grid.n},
            {"cutoff", r.grid.cutoff}}},
          {"warnings", r.warnings}};
}

}  // namespace hyperladder
