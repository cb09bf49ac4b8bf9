// Command-line front end: spectra, states, identity verification, lattices,
// sampling and numerical cross-checks.

#include "hyperladder/hyperladder.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

using namespace hyperladder;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string l0 = "0", l1 = "0", l2 = "-5";
  std::string algebra = "su21";
  std::string format = "json";
  std::string out;
  std::string word;
  std::string fault;
  int depth = 3;
  int grid = 0;
  double cutoff = 0.0;
  std::uint64_t seed = SuiteConfig{}.seed;
  int probes = 5;
  int level = 0;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::invalid_argument("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

ParamPoint labels(const Options& o) { return {parse_rational(o.l0), parse_rational(o.l1), parse_rational(o.l2)}; }

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (o.format == a) return;
  throw std::invalid_argument("format '" + o.format + "' not supported by this command");
}

int cmd_spectrum(const Options& o) {
  require_format(o, {"json"});
  const SpectrumReport rep = bound_spectrum(labels(o));
  Output out(o.out);
  out.stream() << to_json(rep).dump(2) << '\n';
  return kOk;
}

int cmd_state(const Options& o) {
  require_format(o, {"json"});
  const ParamPoint vertex = labels(o);
  if (!is_admissible_vertex(vertex))
    throw AdmissibilityError("vertex " + vertex.str() + " is not an admissible fundamental label");
  const OperatorWord word = parse_word(o.word);
  const LabeledState st = build_state(vertex, word);
  const Rational e = vertex_energy(vertex.l0, vertex.l2);
  json j{{"vertex", to_json(vertex)},
         {"word", to_string(word)},
         {"label", to_json(st.label)},
         {"expr", st.expr.str()},
         {"terms", st.expr.size()},
         {"zero", st.is_zero()},
         {"energy", to_string(e)}};
  if (!st.is_zero()) {
    const auto ratio = proportionality(apply_hamiltonian(st), st.expr);
    j["eigenstate"] = ratio.has_value() && *ratio == e;
    j["normalizable"] = is_normalizable(st.expr);
    if (is_normalizable(st.expr)) j["normalization"] = normalize(st).second;
  }
  Output out(o.out);
  out.stream() << j.dump(2) << '\n';
  return kOk;
}

int cmd_verify(const Options& o) {
  if (o.probes < 1) throw std::invalid_argument("--probes must be >= 1");
  Applier applier = apply;
  if (!o.fault.empty()) {
    const auto victim = parse_op(o.fault);
    if (!victim) throw std::invalid_argument("unknown operator for --fault: " + o.fault);
    applier = corrupted_applier(*victim);
  }
  const auto results = run_identity_suite({o.seed, o.probes}, applier);
  Output out(o.out);
  auto& os = out.stream();
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : results)
      rows.push_back({{"identity", r.name},
                      {"group", r.group},
                      {"probes", r.probes},
                      {"failures", r.failures},
                      {"advisory", r.advisory},
                      {"status", r.passed() ? "pass" : (r.advisory ? "note" : "fail")}});
    os << json{{"seed", o.seed}, {"probes", o.probes}, {"passed", suite_passed(results)}, {"results", rows}}.dump(2)
       << '\n';
  } else {
    require_format(o, {"csv"});
    os << "group,identity,probes,failures,status\n";
    for (const auto& r : results)
      os << r.group << ",\"" << r.name << "\"," << r.probes << ',' << r.failures << ','
         << (r.passed() ? "pass" : (r.advisory ? "note" : "fail")) << '\n';
  }
  return suite_passed(results) ? kOk : kCheckFailed;
}

int cmd_lattice(const Options& o) {
  require_format(o, {"json", "dot"});
  if (o.depth < 0) throw std::invalid_argument("--depth must be >= 0");
  if (o.algebra != "su21" && o.algebra != "so42") throw std::invalid_argument("--algebra must be su21 or so42");
  const Lattice lat = enumerate_lattice(labels(o), o.algebra == "su21" ? Algebra::su21 : Algebra::so42, o.depth);
  Output out(o.out);
  if (o.format == "dot") write_dot(out.stream(), lat);
  else out.stream() << to_json(lat).dump(2) << '\n';
  return kOk;
}

int cmd_sample(const Options& o) {
  require_format(o, {"csv"});
  const int n = o.grid > 0 ? o.grid : 64;
  const double cutoff = o.cutoff > 0 ? o.cutoff : 6.0;
  if (n < 2) throw std::invalid_argument("--grid must be >= 2");
  std::vector<LabeledState> states;
  if (!o.word.empty()) {
    const ParamPoint vertex = labels(o);
    if (!is_admissible_vertex(vertex))
      throw AdmissibilityError("vertex " + vertex.str() + " is not an admissible fundamental label");
    const LabeledState st = build_state(vertex, parse_word(o.word));
    if (st.is_zero() || !is_normalizable(st.expr))
      throw AdmissibilityError("state " + o.word + " from " + vertex.str() + " is not normalizable");
    states.push_back(normalize(st).first);
  } else {
    const SpectrumReport rep = bound_spectrum(labels(o));
    if (o.level < 0 || o.level >= static_cast<int>(rep.levels.size()))
      throw std::invalid_argument("--level out of range: spectrum has " + std::to_string(rep.levels.size()) + " levels");
    const auto& lvl = rep.levels[static_cast<std::size_t>(o.level)];
    std::vector<LabeledState> raw;
    for (const auto& w : lvl.witnesses) raw.push_back(build_state(lvl.vertex, w));
    states = orthonormalize(raw);
  }
  const Sample s = sample_state(states.front().expr, n, n, cutoff);
  std::vector<std::string> names;
  std::vector<std::vector<double>> cols;
  for (std::size_t k = 1; k < states.size(); ++k) {
    names.push_back("value_" + std::to_string(k + 1));
    cols.push_back(sample_state(states[k].expr, n, n, cutoff).value);
  }
  Output out(o.out);
  write_csv(out.stream(), s, names, cols);
  return kOk;
}

int cmd_crosscheck(const Options& o) {
  require_format(o, {"json", "csv"});
  GridSpec grid{GridVariable::xi, o.grid > 0 ? o.grid : 2000, o.cutoff > 0 ? o.cutoff : 25.0};
  const CrosscheckReport rep = crosscheck(labels(o), grid);
  Output out(o.out);
  auto& os = out.stream();
  if (o.format == "csv") {
    os << "energy,numeric,delta\n";
    for (const auto& r : rep.rows)
      os << to_string(r.energy) << ',' << format_double(r.numeric) << ',' << format_double(r.delta) << '\n';
  } else {
    json rows = json::array();
    for (const auto& r : rep.rows)
      rows.push_back({{"energy", to_string(r.energy)}, {"numeric", r.numeric}, {"delta", r.delta}});
    json solves = json::array();
    for (const auto& s : rep.xi_solves) solves.push_back(to_json(s));
    os << json{{"target", to_json(rep.target)},
               {"alphas", rep.alphas},
               {"grid", {{"n", grid.n}, {"cutoff", grid.cutoff}}},
               {"tolerance", rep.tolerance},
               {"rows", rows},
               {"unmatched", rep.unmatched},
               {"solves", solves},
               {"passed", rep.passed()}}
              .dump(2)
       << '\n';
  }
  return rep.passed() ? kOk : kCheckFailed;
}

void add_labels(CLI::App* sub, Options& o) {
  sub->add_option("--l0", o.l0, "l0 as an exact rational (p or p/q)");
  sub->add_option("--l1", o.l1, "l1 as an exact rational");
  sub->add_option("--l2", o.l2, "l2 as an exact rational");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intertwining-operator ladders on the two-sheet hyperboloid"};
  app.require_subcommand(1);
  Options o;

  auto* spectrum = app.add_subcommand("spectrum", "Bound spectrum of H at the given label");
  auto* state = app.add_subcommand("state", "Build a state from a vertex by an operator word");
  auto* verify = app.add_subcommand("verify", "Run the randomized exact identity suite");
  auto* lattice = app.add_subcommand("lattice", "Representation lattice from a vertex");
  auto* sample = app.add_subcommand("sample", "Sample normalized states on a (theta, xi) grid");
  auto* cross = app.add_subcommand("crosscheck", "Compare algebraic and numerical energies");

  for (auto* sub : {spectrum, state, lattice, sample, cross}) add_labels(sub, o);
  for (auto* sub : {spectrum, state, verify, lattice, sample, cross})
    sub->add_option("--format", o.format, "json, csv or dot")->check(CLI::IsMember({"json", "csv", "dot"}));
  for (auto* sub : {spectrum, state, verify, lattice, sample, cross})
    sub->add_option("--out", o.out, "write to this path instead of stdout");

  state->add_option("--word", o.word, "operators applied right to left, e.g. \"C+ A+\"")->required();
  verify->add_option("--seed", o.seed, "probe seed");
  verify->add_option("--probes", o.probes, "probes per identity");
  verify->add_option("--fault", o.fault, "perturb one generator")->group("");
  lattice->add_option("--algebra", o.algebra, "su21 or so42");
  lattice->add_option("--depth", o.depth, "maximal word length");
  sample->add_option("--word", o.word, "sample this word from the vertex given by the labels");
  sample->add_option("--level", o.level, "level index into the bound spectrum (ascending energy)");
  sample->add_option("--grid", o.grid, "points per axis");
  sample->add_option("--cutoff", o.cutoff, "upper xi bound");
  cross->add_option("--grid", o.grid, "xi cells");
  cross->add_option("--cutoff", o.cutoff, "xi truncation");

  if (argc > 1) {
    // Default formats differ per command.
    const std::string cmd = argv[1];
    if (cmd == "sample") o.format = "csv";
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*spectrum) return cmd_spectrum(o);
    if (*state) return cmd_state(o);
    if (*verify) return cmd_verify(o);
    if (*lattice) return cmd_lattice(o);
    if (*sample) return cmd_sample(o);
    if (*cross) return cmd_crosscheck(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const DivergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
