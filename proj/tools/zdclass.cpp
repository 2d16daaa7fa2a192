// zdclass: zero-divisor class graphs of finite commutative rings.

#include "zdclass/zdclass.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace zdclass;

enum Exit : int {
  ok = 0,
  usage = 1,
  spec_error = 2,
  cap_exceeded = 3,
  theorem_failure = 4,
  non_confluent = 5,
};

int exit_code(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::cap_exceeded:
    return cap_exceeded;
  case ErrorKind::non_confluent:
    return non_confluent;
  case ErrorKind::internal:
    return usage;
  default:
    return spec_error;
  }
}

std::string slurp(const std::string &path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::invalid_spec, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<RingSpec> read_spec_list(const std::string &path) {
  std::vector<RingSpec> specs;
  std::istringstream lines(slurp(path));
  for (std::string line; std::getline(lines, line);) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#')
      continue;
    specs.push_back(parse_ring_spec(line.substr(start)));
  }
  return specs;
}

struct Settings {
  std::uint64_t budget = kDefaultValidationBudget;
  std::uint64_t seed = validation_seed_from_env();
  std::size_t element_cap = BuildOptions{}.element_cap;
  std::size_t basis_cap = BuildOptions{}.basis_cap;

  BuildOptions build() const {
    BuildOptions b;
    b.element_cap = element_cap;
    b.basis_cap = basis_cap;
    b.quotient.validation_budget = budget;
    b.quotient.validation_seed = seed;
    return b;
  }
};

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Zero-divisor class graphs of finite commutative rings"};
  app.require_subcommand(1);
  Settings settings;
  app.add_option("--budget", settings.budget,
                 "ring-axiom triples sampled when exhaustive checking is too big");
  app.add_option("--seed", settings.seed, "sampling seed (default: $ZDCLASS_SEED or built-in)");
  app.add_option("--element-cap", settings.element_cap, "largest ring order accepted");
  app.add_option("--basis-cap", settings.basis_cap, "largest quotient basis accepted");

  std::string spec_text, format = "text";

  auto *graph = app.add_subcommand("graph", "print Gamma_E of a ring");
  bool classic = false;
  graph->add_option("spec", spec_text, "ring spec, e.g. Z12 or product(Z4,Z4)")->required();
  graph->add_option("--format", format)->check(CLI::IsMember({"dot", "json", "text"}));
  graph->add_flag("--classic", classic, "print the element graph Gamma instead");

  auto *ass = app.add_subcommand("ass", "list associated primes");
  ass->add_option("spec", spec_text)->required();
  ass->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto *check = app.add_subcommand("check", "run every theorem check");
  check->add_option("spec", spec_text)->required();
  check->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto *census = app.add_subcommand("census", "check a family of rings");
  std::string spec_file;
  unsigned threads = 0;
  std::uint64_t max_n = 200, max_factor = 9;
  census->add_option("--file", spec_file, "one ring spec per line ('-' for stdin)");
  census->add_option("--threads", threads, "worker threads (0: all cores)");
  census->add_option("--max-n", max_n, "largest n in the Z_n family");
  census->add_option("--max-factor", max_factor, "largest factor in the Z_a x Z_b family");
  census->add_option("--format", format)->check(CLI::IsMember({"jsonl", "text"}));

  auto *screen = app.add_subcommand("screen", "test necessary realizability conditions");
  std::string graph_file;
  screen->add_option("graph", graph_file, "JSON {n, edges} or DOT file ('-' for stdin)")->required();
  screen->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto *sweep = app.add_subcommand("sweep", "Gamma_E across truncations var^N");
  std::string var;
  std::uint32_t lo = 2, hi = 4;
  sweep->add_option("spec", spec_text, "quotient spec")->required();
  sweep->add_option("--var", var, "truncation variable")->required();
  sweep->add_option("--from", lo, "first exponent");
  sweep->add_option("--to", hi, "last exponent");
  sweep->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  try {
    const BuildOptions options = settings.build();
    if (*graph) {
      const Ring r = build_ring(spec_text, options);
      if (classic) {
        const Graph g = gamma(r);
        if (format == "dot")
          std::cout << graph_dot(g, r.name());
        else if (format == "json")
          std::cout << graph_json(g).dump(2) << "\n";
        else
          std::cout << graph_text(g);
        return ok;
      }
      const EGraph e = gamma_e(r);
      if (format == "dot")
        std::cout << graph_dot(e.graph, e.ring);
      else if (format == "json")
        std::cout << egraph_json(r, e).dump(2) << "\n";
      else
        std::cout << egraph_text(e);
      return ok;
    }
    if (*ass) {
      const Ring r = build_ring(spec_text, options);
      const EGraph e = gamma_e(r);
      const auto primes = associated_primes(e);
      if (format == "json") {
        json out = json::array();
        for (const auto &p : primes)
          out.push_back({{"rep", e.graph.label(p.vertex)},
                         {"ann_size", e.classes[p.vertex].annihilator.count()},
                         {"degree", e.degree(p.vertex)},
                         {"is_max_in_F", static_cast<bool>(e.is_maximal_in_F[p.vertex])}});
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << e.ring << ": " << primes.size() << " associated prime"
                  << (primes.size() == 1 ? "" : "s") << "\n";
        for (const auto &p : primes)
          std::cout << "  ann(" << e.graph.label(p.vertex) << "), |ann| "
                    << e.classes[p.vertex].annihilator.count() << ", degree "
                    << e.degree(p.vertex)
                    << (e.is_maximal_in_F[p.vertex] ? ", maximal in F" : "")
                    << "\n";
      }
      return ok;
    }
    if (*check) {
      const Ring r = build_ring(spec_text, options);
      const TheoremReport report = check_all(r);
      if (format == "json")
        std::cout << report_json(report).dump(2) << "\n";
      else
        std::cout << report.text();
      return report.all_pass() ? ok : theorem_failure;
    }
    if (*census) {
      const auto specs = spec_file.empty() ? default_census_specs(max_n, max_factor)
                                           : read_spec_list(spec_file);
      CensusOptions copts;
      copts.build = options;
      copts.threads = threads;
      const CensusResult result = run_census(specs, copts);
      if (format == "jsonl") {
        std::cout << census_jsonl(result);
      } else {
        std::cout << census_table(result);
        for (const auto &s : out_of_scope_statements())
          std::cout << "out-of-scope-exact " << s.id << ": " << s.statement
                    << " (evidence: " << s.evidence << ")\n";
      }
      return result.failures() == 0 ? ok : theorem_failure;
    }
    if (*screen) {
      const Graph g = read_graph(slurp(graph_file));
      const ScreenVerdict v = realizability_screen(g);
      if (format == "json") {
        json j = {{"passes_necessary", v.passes_necessary()},
                  {"failed", v.failed},
                  {"reasons", v.reasons}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << screen_text(v);
      }
      return ok;
    }
    if (*sweep) {
      const RingSpec spec = parse_ring_spec(spec_text);
      const auto *q = std::get_if<QuotientSpec>(&spec.node);
      if (q == nullptr)
        throw Error(ErrorKind::invalid_spec, "sweep needs a quot(...) spec");
      const SweepReport report = stabilization_sweep(*q, var, lo, hi, options);
      if (format == "json")
        std::cout << sweep_json(report).dump(2) << "\n";
      else
        std::cout << sweep_text(report);
      return ok;
    }
  } catch (const Error &e) {
    std::cerr << "zdclass: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return usage;
}
