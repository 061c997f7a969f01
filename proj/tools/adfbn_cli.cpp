// adfbn: semantics, trap spaces, dynamics and signs of ADFs / Boolean networks.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "adfbn/bench.hpp"
#include "adfbn/dynamics.hpp"
#include "adfbn/io.hpp"
#include "adfbn/signs.hpp"
#include "adfbn/solver.hpp"

using namespace adfbn;

namespace {

enum Exit { ok = 0, usage = 1, parse = 2, budget = 3, disagreement = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputArgs {
  std::string path;
  std::string format;
  double timeout = 0;

  LoadedInput load() const {
    std::optional<InputFormat> fmt;
    if (!format.empty()) fmt = format_from_name(format);
    return load_input(path, fmt);
  }

  Budget budget() const { return timeout > 0 ? Budget::seconds(timeout) : Budget{}; }
};

void add_input(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("--input", in.path, "framework file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--format", in.format, "apx, adf or bnet (default: by extension)")
      ->check(CLI::IsMember({"apx", "adf", "bnet"}));
  cmd->add_option("--timeout", in.timeout, "wall-clock budget in seconds (0 = none)")->check(CLI::NonNegativeNumber);
}

void print_interpretations(const std::vector<Interpretation>& vs) {
  for (const auto& v : vs) std::cout << v.to_string() << '\n';
}

void print_extensions(const Signature& sig, const std::vector<TwoValuedState>& xs) {
  for (const auto& x : xs) std::cout << render_set(sig, x) << '\n';
}

/// 1-sets of interpretations, deduplicated and ordered by index.
std::vector<TwoValuedState> accepted_sets(const std::vector<Interpretation>& vs) {
  std::set<std::uint64_t> seen;
  std::vector<TwoValuedState> out;
  for (const auto& v : vs) {
    TwoValuedState x(v.size());
    for (std::size_t a = 0; a < v.size(); ++a) x.set(a, v[a] == TruthValue::one);
    if (seen.insert(state_index(x)).second) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return state_index(a) < state_index(b); });
  return out;
}

int run_semantics(const InputArgs& in, const std::string& semantics, const std::string& method) {
  const LoadedInput input = in.load();
  const Framework& fr = input.framework;
  const Budget budget = in.budget();
  const Limits& limits = Limits::defaults();

  if (method == "sat") {
    if (semantics != "preferred" && semantics != "admissible")
      throw UsageError("--method sat supports only preferred and admissible");
    EnumerationOptions opts;
    opts.budget = budget;
    const auto vs = semantics == "preferred" ? enumerate_preferred(fr, opts) : enumerate_admissible(fr, opts);
    if (input.dung) print_extensions(fr.signature(), accepted_sets(vs));
    else print_interpretations(vs);
    return ok;
  }

  if (input.dung) {
    const DungFramework& af = *input.dung;
    const auto& sig = af.signature();
    if (semantics == "stable") print_extensions(sig, af.stable_extensions(Exec::parallel, limits));
    else if (semantics == "complete") print_extensions(sig, af.complete_extensions(Exec::parallel, limits));
    else if (semantics == "grounded") print_extensions(sig, {af.grounded_extension()});
    else if (semantics == "preferred") print_extensions(sig, af.preferred_extensions(Exec::parallel, limits));
    else if (semantics == "admissible") print_extensions(sig, af.admissible_extensions(Exec::parallel, limits));
    else if (semantics == "naive") print_extensions(sig, af.naive_extensions(Exec::parallel, limits));
    else if (semantics == "stage") print_extensions(sig, af.stage_extensions(Exec::parallel, limits));
    else if (semantics == "semi-stable") print_extensions(sig, af.semi_stable_extensions(Exec::parallel, limits));
    else print_interpretations(af.caminada_labelings(Exec::parallel, limits));
    return ok;
  }

  if (semantics == "admissible") print_interpretations(admissible_interpretations_bruteforce(fr, Exec::parallel, limits, budget));
  else if (semantics == "complete") print_interpretations(complete_interpretations_bruteforce(fr, Exec::parallel, limits, budget));
  else if (semantics == "grounded") print_interpretations({grounded_interpretation(fr)});
  else if (semantics == "preferred") print_interpretations(preferred_interpretations_bruteforce(fr, Exec::parallel, limits, budget));
  else throw UsageError("semantics '" + semantics + "' needs a Dung framework (apx input)");
  return ok;
}

int run_trapspaces(const InputArgs& in, bool minimal, const std::string& method) {
  const Framework fr = in.load().framework;
  const Budget budget = in.budget();
  if (method == "sat") {
    EnumerationOptions opts;
    opts.budget = budget;
    print_interpretations(minimal ? enumerate_minimal_trap_spaces(fr, opts) : enumerate_admissible(fr, opts));
  } else {
    print_interpretations(minimal ? minimal_trap_spaces_bruteforce(fr, Exec::parallel, Limits::defaults(), budget)
                                  : trap_spaces_bruteforce(fr, Exec::parallel, Limits::defaults(), budget));
  }
  return ok;
}

int run_dynamics(const InputArgs& in, const std::string& update, bool want_attractors) {
  const Framework fr = in.load().framework;
  const auto disc = update == "sync" ? UpdateDiscipline::synchronous : UpdateDiscipline::asynchronous;
  if (want_attractors) {
    for (const auto& att : attractors(fr, disc, Exec::parallel, Limits::defaults(), in.budget())) {
      for (std::size_t i = 0; i < att.size(); ++i) std::cout << (i ? " " : "") << att[i];
      std::cout << '\n';
    }
    return ok;
  }
  const auto stg = build_stg(fr, disc);
  for (std::uint64_t x = 0; x < stg.state_count(); ++x) {
    std::cout << x << " ->";
    for (auto k = stg.offsets[x]; k < stg.offsets[x + 1]; ++k) std::cout << ' ' << stg.targets[k];
    std::cout << '\n';
  }
  return ok;
}

int run_signs(const InputArgs& in, const std::string& vocabulary, const std::string& rgraph) {
  const Framework fr = in.load().framework;
  const auto& sig = fr.signature();
  if (!rgraph.empty()) {
    const auto constraints = parse_rgraph(read_file(rgraph), sig);
    for (const auto& v : check_rgraph(fr, constraints)) {
      std::cout << sig.name(v.constraint.source) << ' ' << sig.name(v.constraint.target) << ' '
                << v.constraint.label << ": " << (v.satisfied ? "satisfied" : "violated") << " ("
                << (v.edge_present ? v.record.flags.to_string() : "no edge");
      if (v.record.negative_witness) std::cout << "; D- witness " << v.record.negative_witness->to_string();
      if (v.record.positive_witness) std::cout << "; D+ witness " << v.record.positive_witness->to_string();
      std::cout << ")\n";
    }
    return ok;
  }
  const auto voc = vocabulary == "derivative" ? Vocabulary::derivative : Vocabulary::monotonicity;
  for (const auto& rec : all_edge_signs(fr))
    std::cout << sig.name(rec.source) << ' ' << sig.name(rec.target) << ' ' << rec.flags.to_string() << ' '
              << classify_edge(rec, voc).name << '\n';
  return ok;
}

int run_bench_cmd(const std::string& dir, const std::string& methods, double timeout, unsigned jobs,
                  const std::string& out_path) {
  BenchOptions opts;
  opts.methods.clear();
  std::stringstream ss(methods);
  for (std::string m; std::getline(ss, m, ',');) {
    if (!is_bench_method(m)) throw UsageError("unknown bench method '" + m + "'");
    opts.methods.push_back(m);
  }
  if (opts.methods.empty()) throw UsageError("no bench methods given");
  opts.timeout_seconds = timeout;
  opts.jobs = jobs;
  const BenchReport report = run_bench(dir, opts);
  const std::string csv = to_csv(report.records);
  if (out_path.empty() || out_path == "-") {
    std::cout << csv;
  } else {
    std::ofstream out(out_path);
    if (!(out << csv)) throw std::runtime_error("cannot write " + out_path);
  }
  for (const auto& r : report.records)
    if (r.outcome == BenchOutcome::error) std::cerr << r.instance << " (" << r.method << "): " << r.message << '\n';
  if (report.disagreements) {
    std::cerr << report.disagreements << " instance(s) with disagreeing methods\n";
    return disagreement;
  }
  return report.errors ? parse : ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semantics, trap spaces, dynamics and signs of ADFs and Boolean networks"};
  app.require_subcommand(1);

  InputArgs in;
  std::string semantics, method = "brute", update = "async", vocabulary = "monotonicity", rgraph;
  bool minimal = false, want_attractors = false;
  std::string bench_dir, bench_methods = "brute,sat", bench_out;
  double bench_timeout = 60;
  unsigned bench_jobs = 0;

  auto* sem = app.add_subcommand("semantics", "extensions or interpretations of a semantics");
  add_input(sem, in);
  sem->add_option("--semantics", semantics)
      ->required()
      ->check(CLI::IsMember({"stable", "complete", "grounded", "preferred", "admissible", "naive", "stage",
                             "semi-stable", "caminada"}));
  sem->add_option("--method", method)->check(CLI::IsMember({"brute", "sat"}));

  auto* traps = app.add_subcommand("trapspaces", "trap spaces as subcube strings");
  add_input(traps, in);
  traps->add_flag("--min", minimal, "only minimal trap spaces");
  traps->add_option("--method", method)->check(CLI::IsMember({"brute", "sat"}));

  auto* dyn = app.add_subcommand("dynamics", "state-transition graph or attractors");
  add_input(dyn, in);
  dyn->add_option("--update", update)->check(CLI::IsMember({"sync", "async"}));
  dyn->add_flag("--attractors", want_attractors, "print attractors instead of transitions");

  auto* sg = app.add_subcommand("signs", "edge signs and labels, or an R-graph check");
  add_input(sg, in);
  sg->add_option("--vocabulary", vocabulary)->check(CLI::IsMember({"monotonicity", "derivative"}));
  sg->add_option("--check-rgraph", rgraph, "constraint file")->check(CLI::ExistingFile);

  auto* bench = app.add_subcommand("bench", "compare preferred-enumeration methods on a directory");
  bench->add_option("--dir", bench_dir)->required()->check(CLI::ExistingDirectory);
  bench->add_option("--methods", bench_methods);
  bench->add_option("--timeout", bench_timeout)->check(CLI::PositiveNumber);
  bench->add_option("--jobs", bench_jobs, "worker slots (0 = all cores)");
  bench->add_option("--out", bench_out, "CSV destination (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return usage;
  }

  try {
    if (*sem) return run_semantics(in, semantics, method);
    if (*traps) return run_trapspaces(in, minimal, method);
    if (*dyn) return run_dynamics(in, update, want_attractors);
    if (*sg) return run_signs(in, vocabulary, rgraph);
    return run_bench_cmd(bench_dir, bench_methods, bench_timeout, bench_jobs, bench_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return parse;
  } catch (const InvalidFramework& e) {
    std::cerr << "invalid framework: " << e.what() << '\n';
    return parse;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return budget;
  } catch (const CapExceeded& e) {
    std::cerr << "size cap: " << e.what() << '\n';
    return budget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return parse;
  }
}
