#pragma once

#include "zdclass/graph_kit.hpp"
#include "zdclass/quotient.hpp"
#include "zdclass/ring_spec.hpp"
#include "zdclass/theorems.hpp"
#include "zdclass/zd_core.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace zdclass {

// ---------------------------------------------------------------------------
// Divisor oracle for Z_n

/// Gamma_E(Z_n) from divisor arithmetic alone: vertices are the divisors d of
/// n with 1 < d < n (ascending, labelled in decimal), d ~ e iff n | d*e.
inline Graph zn_oracle(std::uint64_t n) {
  if (n < 2)
    throw Error(ErrorKind::invalid_spec, "oracle needs n >= 2");
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 2; d < n; ++d)
    if (n % d == 0)
      divisors.push_back(d);
  std::vector<std::string> labels;
  for (auto d : divisors)
    labels.push_back(std::to_string(d));
  Graph g(std::move(labels));
  for (std::size_t i = 0; i < divisors.size(); ++i)
    for (std::size_t j = i + 1; j < divisors.size(); ++j)
      if ((divisors[i] * divisors[j]) % n == 0)
        g.add_edge(i, j);
  return g;
}

// ---------------------------------------------------------------------------
// Census

struct CensusEntry {
  std::string spec;
  std::string error;          // construction failure; other fields unset
  ErrorKind error_kind = ErrorKind::internal;
  std::size_t order = 0;
  std::string label;          // canonical label of Gamma_E (hex)
  bool label_exact = true;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t ass_count = 0;
  std::optional<std::size_t> fan;
  bool has_leaf = false;
  bool is_path = false;
  std::uint64_t characteristic = 0;
  bool local = false;
  std::vector<std::string> failed_checks;
  std::optional<bool> oracle_match; // Z_n specs only

  bool built() const { return error.empty(); }
  bool ok() const {
    return built() && failed_checks.empty() && oracle_match.value_or(true);
  }
};

/// Isomorphism class of Gamma_E with every spec realizing it.
struct CensusClass {
  std::string label;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<std::string> witnesses;
};

struct CensusResult {
  std::vector<CensusEntry> entries;
  std::vector<CensusClass> classes; // ordered by (vertices, edges, label)

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(
        entries.begin(), entries.end(),
        [](const CensusEntry &e) { return e.built() && !e.ok(); }));
  }
  std::size_t construction_errors() const {
    return static_cast<std::size_t>(std::count_if(
        entries.begin(), entries.end(),
        [](const CensusEntry &e) { return !e.built(); }));
  }
};

struct CensusOptions {
  BuildOptions build;
  unsigned threads = 0; // 0: one per hardware thread
};

inline CensusEntry census_entry(const RingSpec &spec, const BuildOptions &options) {
  CensusEntry entry;
  entry.spec = render(spec);
  try {
    const Ring r = build_ring(spec, options);
    const EGraph e = gamma_e(r);
    const TheoremReport report = check_all(r, e);
    const CanonicalLabel label = canonical_form(e.graph);
    entry.order = r.order();
    entry.label = label.hex();
    entry.label_exact = label.exact;
    entry.vertices = e.size();
    entry.edges = e.graph.edge_count();
    entry.ass_count = static_cast<std::size_t>(std::count(
        e.is_associated_prime.begin(), e.is_associated_prime.end(), true));
    if (e.size() > 0) {
      entry.fan = fan_shape(e.graph);
      entry.has_leaf = !leaves(e.graph).empty();
      entry.is_path = is_path(e.graph);
    }
    entry.characteristic = characteristic(r);
    entry.local = is_local(r);
    for (const auto &c : report.checks)
      if (c.status == CheckStatus::fail)
        entry.failed_checks.push_back(c.id);
    if (const auto *z = std::get_if<ZmodSpec>(&spec.node)) {
      const Graph oracle = zn_oracle(z->modulus);
      entry.oracle_match = oracle.same_edges(e.graph) &&
                           oracle.labels() == e.graph.labels() &&
                           is_isomorphic(oracle, e.graph);
    }
  } catch (const Error &err) {
    entry.error = err.what();
    entry.error_kind = err.kind();
  }
  return entry;
}

/// Builds and checks every spec (in parallel), then groups the graphs by
/// canonical label. Entries keep the input order.
inline CensusResult run_census(const std::vector<RingSpec> &specs,
                               const CensusOptions &options = {}) {
  CensusResult result;
  result.entries.resize(specs.size());
  unsigned threads = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(specs.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++)
      result.entries[i] = census_entry(specs[i], options.build);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(work);
  work();
  for (auto &t : pool)
    t.join();

  std::map<std::string, std::size_t> by_label;
  for (const auto &e : result.entries) {
    if (!e.built())
      continue;
    auto [it, inserted] = by_label.try_emplace(e.label, result.classes.size());
    if (inserted)
      result.classes.push_back({e.label, e.vertices, e.edges, {}});
    result.classes[it->second].witnesses.push_back(e.spec);
  }
  std::sort(result.classes.begin(), result.classes.end(),
            [](const CensusClass &a, const CensusClass &b) {
              return std::tie(a.vertices, a.edges, a.label) <
                     std::tie(b.vertices, b.edges, b.label);
            });
  return result;
}

/// Rings named in the examples, finite fields through the same machinery,
/// and small truncations of the infinite examples.
inline std::vector<std::string> curated_quotients() {
  return {
      "quot(Z3; x,y; xy, x^3, y^3, x^2-y^2)",
      "quot(Z2; x,y; x^2, y^2)",
      "quot(Z2; t,x,y; t^2+t+1, x^2, y^2)",
      "quot(Z3; x,y; x^2, y^2)",
      "quot(Z2; x,y,z; x^2, y^2, z^2)",
      "quot(Z4; x,y; x^2, xy, 2x)trunc(y,2)",
      "quot(Z4; x,y; x^2, xy, 2x)trunc(y,3)",
      "quot(Z4; x; x^2, 2x)",
      "quot(Z4; x; x^2)",
      "quot(Z2; x; x^3)",
      "quot(Z2; x; x^4)",
      "quot(Z3; x; x^3)",
      "quot(Z2; x,y; x^2, xy, y^2)",
      "quot(Z2; x,y; x^3, xy, y^2)",
      "quot(Z8; x; x^2, 2x)",
      "quot(Z9; x; x^2, 3x)",
      "quot(Z3; x,y; x^3, xy)trunc(y,3)",
      "quot(Z3; x,y; x^3, xy)trunc(y,4)",
      "quot(Z2; x,y,z; x^2, y^2)trunc(z,2)",
      "quot(Z2; x,y,z; x^2, y^2)trunc(z,3)",
      "product(Z2, quot(Z2; x,y; x^2, y^2))",
      "product(Z2, Z2, Z2)",
      "product(Z3, quot(Z2; x; x^2))",
  };
}

/// Z_n for 4 <= n <= max_n, Z_a x Z_b for 2 <= a <= b <= max_factor, and the
/// curated quotients.
inline std::vector<RingSpec> default_census_specs(std::uint64_t max_n = 200,
                                                  std::uint64_t max_factor = 9) {
  std::vector<RingSpec> specs;
  for (std::uint64_t n = 4; n <= max_n; ++n)
    specs.push_back(RingSpec{ZmodSpec{n}});
  for (std::uint64_t a = 2; a <= max_factor; ++a)
    for (std::uint64_t b = a; b <= max_factor; ++b)
      specs.push_back(RingSpec{ProductSpec{{RingSpec{ZmodSpec{a}}, RingSpec{ZmodSpec{b}}}}});
  for (const auto &text : curated_quotients())
    specs.push_back(parse_ring_spec(text));
  return specs;
}

// ---------------------------------------------------------------------------
// Realizability screen

struct ScreenVerdict {
  std::vector<std::string> failed; // condition ids
  std::vector<std::string> reasons;

  /// Passing is necessary for realizability, not sufficient.
  bool passes_necessary() const { return failed.empty(); }
};

/// Evaluates every necessary condition a class graph satisfies.
inline ScreenVerdict realizability_screen(const Graph &g) {
  if (g.empty())
    throw Error(ErrorKind::domain, "cannot screen the empty graph");
  ScreenVerdict v;
  auto add = [&](const char *id, std::string why) {
    v.failed.push_back(id);
    v.reasons.push_back(std::move(why));
  };
  const std::size_t n = g.size();
  const auto d = diameter(g);
  if (!d)
    add("CONN_DIAM", "disconnected");
  else if (*d > 3)
    add("CONN_DIAM", "diameter " + std::to_string(*d) + " > 3");
  const bool complete = is_complete(g);
  if (n >= 3 && complete)
    add("INCOMPLETE", "complete on " + std::to_string(n) + " vertices");
  if (n == 3 && !is_path(g))
    add("THREE", "three vertices but not the path P3");
  if (n >= 2 && !complete) {
    if (const auto parts = multipartite_decomposition(g)) {
      const bool star = parts->size() == 2 &&
                        ((*parts)[0].size() == 1 || (*parts)[1].size() == 1);
      if (!star)
        add("RPARTITE", "complete " + std::to_string(parts->size()) +
                            "-partite but not K_{n,1}");
    }
  }
  if (is_cycle(g))
    add("NOCYCLE", "cycle C" + std::to_string(n));
  if (n > 2 && is_regular(g))
    add("NONREGULAR", std::to_string(g.degree(0)) + "-regular");
  return v;
}

// ---------------------------------------------------------------------------
// Fan search

struct FanFinding {
  std::string spec;
  std::size_t n = 0; // K_{n,1}
  std::uint64_t characteristic = 0;
  std::size_t ass_count = 0;
  bool local = false;
};

struct FanSearchResult {
  std::vector<FanFinding> findings;
  std::set<std::size_t> realized_n;
  std::set<std::uint64_t> characteristics; // among fans with >= 4 vertices
  std::vector<std::string> errors;
};

inline FanSearchResult fan_search(const std::vector<RingSpec> &specs,
                                  const BuildOptions &options = {}) {
  FanSearchResult out;
  for (const auto &spec : specs) {
    try {
      const Ring r = build_ring(spec, options);
      const EGraph e = gamma_e(r);
      if (e.size() < 2)
        continue;
      const auto n = fan_shape(e.graph);
      if (!n)
        continue;
      FanFinding f;
      f.spec = render(spec);
      f.n = *n;
      f.characteristic = characteristic(r);
      f.ass_count = static_cast<std::size_t>(std::count(
          e.is_associated_prime.begin(), e.is_associated_prime.end(), true));
      f.local = is_local(r);
      out.realized_n.insert(f.n);
      if (f.n >= 3)
        out.characteristics.insert(f.characteristic);
      out.findings.push_back(std::move(f));
    } catch (const Error &err) {
      out.errors.push_back(render(spec) + ": " + err.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Truncation sweep

/// One truncation level: Gamma_E of the truncated ring plus its
/// truncation-stable part.
///
/// Stability is judged on the low part L of the ring, the elements whose
/// degree in the truncation variable is at most N-2. An element r of L is
/// stable when its key {w in L : rw = 0} is non-zero and comes out the same
/// with products taken at level N+1 and at level N+2. Stable elements with
/// equal keys form one stable class; two stable classes are adjacent when
/// their elements multiply to zero at level N+1. A class is named after its least member that
/// is also a representative of Gamma_E, otherwise after its least member.
struct SweepLevel {
  std::uint32_t exponent = 0;
  std::string spec;
  std::string error;
  std::size_t order = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t leaves = 0;
  std::vector<std::string> reps;
  std::vector<std::size_t> degrees;
  std::vector<bool> ass;

  std::size_t low_size = 0;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> key_levels;
  std::string probe_error; // a deeper level could not be formed
  Graph stable_graph;
  std::vector<std::size_t> stable_weights; // low elements per stable class
  std::vector<std::string> transient;      // Gamma_E reps outside every stable class

  bool built() const { return error.empty(); }
  std::size_t stable_count() const { return stable_graph.size(); }
  std::size_t stable_leaves() const { return zdclass::leaves(stable_graph).size(); }
  std::vector<std::string> stable_cut_vertices() const {
    std::vector<std::string> out;
    for (Vertex v : cut_vertices(stable_graph))
      out.push_back(stable_graph.label(v));
    return out;
  }
};

enum class SweepVerdict { stabilized, growing, inconclusive };

inline const char *to_string(SweepVerdict v) {
  switch (v) {
  case SweepVerdict::stabilized:
    return "stabilized";
  case SweepVerdict::growing:
    return "growing";
  case SweepVerdict::inconclusive:
    return "inconclusive";
  }
  return "?";
}

struct SweepReport {
  std::string spec;
  std::string var;
  std::uint32_t lo = 0, hi = 0;
  std::vector<SweepLevel> levels;
  SweepVerdict verdict = SweepVerdict::inconclusive;
  std::optional<std::uint32_t> stabilized_at;

  const SweepLevel &level(std::uint32_t n) const {
    for (const auto &l : levels)
      if (l.exponent == n)
        return l;
    throw Error(ErrorKind::domain, "exponent " + std::to_string(n) + " not swept");
  }

  /// Stable class count per exponent.
  std::vector<std::size_t> growth() const {
    std::vector<std::size_t> out;
    for (const auto &l : levels)
      out.push_back(l.stable_count());
    return out;
  }
};

namespace detail {

inline bool same_labelled_graph(const Graph &a, const Graph &b) {
  if (a.size() != b.size())
    return false;
  const std::set<std::string> la(a.labels().begin(), a.labels().end());
  const std::set<std::string> lb(b.labels().begin(), b.labels().end());
  if (la != lb || la.size() != a.size())
    return false;
  auto collect = [](const Graph &g) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto &[u, v] : g.edges())
      out.insert(std::minmax(g.label(u), g.label(v)));
    return out;
  };
  return collect(a) == collect(b);
}

inline void stable_part(SweepLevel &level, const Ring &r, const EGraph &e,
                        const QuotientSpec &base, const std::string &var) {
  const auto *q = as_quotient(r);
  const auto var_index = static_cast<std::size_t>(
      std::find(base.vars.begin(), base.vars.end(), var) - base.vars.begin());
  const std::uint64_t bound = level.exponent >= 2 ? level.exponent - 2 : 0;

  std::vector<ElementId> low;
  std::vector<Poly> low_poly;
  for (ElementId x = 1; x < r.order(); ++x) {
    Poly p = q->to_poly(x);
    if (level.exponent >= 2 && p.degree_in(var_index) <= bound) {
      low.push_back(x);
      low_poly.push_back(std::move(p));
    }
  }
  level.low_size = low.size();

  auto make_probe = [&](std::uint32_t power) -> std::optional<QuotientBackend> {
    QuotientSpec deeper = truncate(base, var, power);
    deeper.basis_cap = std::max(deeper.basis_cap, q->spec().basis_cap);
    deeper.element_cap = std::numeric_limits<ElementId>::max();
    try {
      return QuotientBackend(std::move(deeper));
    } catch (const Error &err) {
      level.probe_error = err.what();
      return std::nullopt;
    }
  };
  const auto near = make_probe(level.exponent + 1);
  const auto far = near ? make_probe(level.exponent + 2) : std::nullopt;

  // Stable elements grouped by their annihilator inside L.
  std::map<std::vector<bool>, std::vector<std::size_t>> groups;
  if (near && far) {
    const std::size_t m = low.size();
    std::vector<ElementId> in_near, in_far;
    for (const auto &p : low_poly) {
      in_near.push_back(near->encode_poly(p));
      in_far.push_back(far->encode_poly(p));
    }
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<bool> key(m);
      bool any = false, same = true;
      for (std::size_t j = 0; j < m && same; ++j) {
        key[j] = near->mul(in_near[i], in_near[j]) == near->zero();
        same = key[j] == (far->mul(in_far[i], in_far[j]) == far->zero());
        any = any || key[j];
      }
      if (any && same)
        groups[key].push_back(i);
    }
    level.key_levels = {level.exponent + 1, level.exponent + 2};
  }

  std::vector<std::vector<std::size_t>> members;
  for (auto &[key, idx] : groups)
    members.push_back(idx);
  std::sort(members.begin(), members.end(),
            [&](const auto &a, const auto &b) { return low[a.front()] < low[b.front()]; });

  std::vector<bool> is_rep(r.order(), false);
  for (const auto &c : e.classes)
    is_rep[c.representative] = true;
  std::vector<bool> rep_is_stable(r.order(), false);
  std::vector<std::string> labels;
  for (const auto &idx : members) {
    ElementId name = low[idx.front()];
    for (std::size_t i : idx) {
      if (is_rep[low[i]]) {
        name = low[i];
        break;
      }
    }
    for (std::size_t i : idx)
      rep_is_stable[low[i]] = is_rep[low[i]];
    labels.push_back(r.element_name(name));
    level.stable_weights.push_back(idx.size());
  }
  Graph g(std::move(labels));
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (near->mul(near->encode_poly(low_poly[members[a].front()]),
                    near->encode_poly(low_poly[members[b].front()])) == near->zero())
        g.add_edge(a, b);
  level.stable_graph = std::move(g);
  for (const auto &c : e.classes)
    if (!rep_is_stable[c.representative])
      level.transient.push_back(r.element_name(c.representative));
}

} // namespace detail

/// Gamma_E of spec + (var^N) for N = lo..hi, each with its truncation-stable
/// part (see SweepLevel). The verdict is "stabilized" at the first N whose
/// stable graph equals the one at N+1 with the same class names, "growing"
/// when the stable class count strictly increases across the whole range.
inline SweepReport stabilization_sweep(const QuotientSpec &base,
                                       const std::string &var, std::uint32_t lo,
                                       std::uint32_t hi,
                                       const BuildOptions &options = {}) {
  if (lo < 1 || hi < lo)
    throw Error(ErrorKind::invalid_spec, "sweep range must satisfy 1 <= lo <= hi");
  SweepReport report;
  report.spec = base.to_string();
  report.var = var;
  report.lo = lo;
  report.hi = hi;
  for (std::uint32_t n = lo; n <= hi; ++n) {
    SweepLevel level;
    level.exponent = n;
    try {
      const QuotientSpec spec = truncate(base, var, n);
      level.spec = spec.to_string();
      const Ring r = build_ring(RingSpec{spec}, options);
      const EGraph e = gamma_e(r);
      level.order = r.order();
      level.vertices = e.size();
      level.edges = e.graph.edge_count();
      level.leaves = leaves(e.graph).size();
      level.reps = e.graph.labels();
      level.degrees = e.graph.degrees();
      level.ass = e.is_associated_prime;
      detail::stable_part(level, r, e, base, var);
    } catch (const Error &err) {
      level.error = err.what();
    }
    report.levels.push_back(std::move(level));
  }

  const auto &lv = report.levels;
  auto usable = [](const SweepLevel &l) { return l.built() && l.probe_error.empty(); };
  for (std::size_t i = 0; i + 1 < lv.size(); ++i) {
    if (usable(lv[i]) && usable(lv[i + 1]) && lv[i].stable_count() > 0 &&
        detail::same_labelled_graph(lv[i].stable_graph, lv[i + 1].stable_graph)) {
      report.verdict = SweepVerdict::stabilized;
      report.stabilized_at = lv[i].exponent;
      return report;
    }
  }
  bool growing = lv.size() >= 2;
  for (std::size_t i = 0; i + 1 < lv.size(); ++i)
    if (!usable(lv[i]) || !usable(lv[i + 1]) ||
        lv[i + 1].stable_count() <= lv[i].stable_count())
      growing = false;
  if (growing)
    report.verdict = SweepVerdict::growing;
  return report;
}

// ---------------------------------------------------------------------------
// Statements about infinite rings

struct OutOfScopeStatement {
  std::string id;
  std::string statement;
  std::string evidence;
};

/// Statements that finite enumeration cannot decide. The tool reports them
/// as out-of-scope-exact with the finite evidence it has; it never marks
/// them true or false.
inline std::vector<OutOfScopeStatement> out_of_scope_statements() {
  return {
      {"INFINITE_VERTEX_SET",
       "the vertex set is infinite iff some associated prime maximal in F "
       "has infinite degree",
       "truncation sweep of quot(Z2; x,y,z; x^2, y^2) in z: stable vertex "
       "count and the degree of the centre [xy] grow with the exponent"},
      {"FINITENESS_NEEDED",
       "without finiteness a vertex of maximal degree need not be maximal in "
       "F (four classes of infinite degree, one associated prime)",
       "finite analogue quot(Z2; x,y,z; x^2, y^2, z^2): degrees of [xy], "
       "[xz], [yz] and [xyz] with only ann(xyz) prime"},
  };
}

} // namespace zdclass
