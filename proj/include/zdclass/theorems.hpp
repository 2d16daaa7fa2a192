#pragma once

#include "zdclass/graph_kit.hpp"
#include "zdclass/ring.hpp"
#include "zdclass/zd_core.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace zdclass {

enum class CheckStatus { pass, fail, not_applicable };

inline const char *to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::pass:
    return "pass";
  case CheckStatus::fail:
    return "FAIL";
  case CheckStatus::not_applicable:
    return "n/a";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  std::string anchor;
  CheckStatus status = CheckStatus::pass;
  std::string detail;             // witness on failure, reason when n/a
  std::vector<std::string> notes; // observations that are not verdicts
};

struct TheoremReport {
  std::string ring;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult &c) {
      return c.status == CheckStatus::fail;
    });
  }

  const CheckResult &at(std::string_view id) const {
    for (const auto &c : checks)
      if (c.id == id)
        return c;
    throw Error(ErrorKind::domain, "no check named " + std::string(id));
  }

  /// One line per check.
  std::string text() const {
    std::string out;
    for (const auto &c : checks) {
      std::string line = c.id;
      line.resize(std::max<std::size_t>(line.size() + 1, 15), ' ');
      line += to_string(c.status);
      line.resize(std::max<std::size_t>(line.size() + 1, 20), ' ');
      line += c.anchor;
      if (!c.detail.empty())
        line += " | " + c.detail;
      for (const auto &n : c.notes)
        line += " | note: " + n;
      out += line + "\n";
    }
    return out;
  }
};

/// Check ids in report order.
inline const std::vector<std::string> &theorem_ids() {
  static const std::vector<std::string> ids = {
      "ASS_EDGE",      "CONN_DIAM",   "INCOMPLETE",   "THREE",
      "RPARTITE",      "NOCYCLE",     "NONREGULAR",   "CONTAIN",
      "FAN",           "MAXDEG_UNIQUE", "NO_ASS_LEAF", "LEAF_NEIGHBOR",
      "CHAIN_DEGREES", "ALLMAX",      "COVER"};
  return ids;
}

namespace detail {

struct CheckContext {
  const Ring &ring;
  const EGraph &e;

  const Graph &g() const { return e.graph; }
  std::size_t size() const { return e.size(); }
  std::string name(std::size_t v) const { return "[" + e.graph.label(v) + "]"; }
  bool ass(std::size_t v) const { return e.is_associated_prime[v]; }
  bool max(std::size_t v) const { return e.is_maximal_in_F[v]; }
  const IdSet &ann(std::size_t v) const { return e.classes[v].annihilator; }
};

inline CheckResult make(std::string id, std::string anchor) {
  CheckResult r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  return r;
}

inline void na(CheckResult &r, std::string reason) {
  r.status = CheckStatus::not_applicable;
  r.detail = std::move(reason);
}

inline void fail(CheckResult &r, std::string witness) {
  r.status = CheckStatus::fail;
  r.detail = std::move(witness);
}

inline const char *kNoVertices = "no zero divisors, the graph is empty";

inline CheckResult check_ass_edge(const CheckContext &c) {
  auto r = make("ASS_EDGE", "associated primes are pairwise adjacent; every "
                            "vertex is one or touches one maximal in F");
  if (c.size() == 0) {
    na(r, kNoVertices);
    return r;
  }
  for (std::size_t u = 0; u < c.size(); ++u)
    for (std::size_t v = u + 1; v < c.size(); ++v)
      if (c.ass(u) && c.ass(v) && !c.g().adjacent(u, v)) {
        fail(r, "associated primes " + c.name(u) + " and " + c.name(v) +
                    " are not adjacent");
        return r;
      }
  for (std::size_t v = 0; v < c.size(); ++v) {
    if (c.ass(v))
      continue;
    const auto &nb = c.g().neighbors(v);
    if (std::none_of(nb.begin(), nb.end(),
                     [&](Vertex w) { return c.ass(w) && c.max(w); }))
    {
      fail(r, c.name(v) + " is not adjacent to an associated prime maximal in F");
      return r;
    }
  }
  return r;
}

inline CheckResult check_conn_diam(const CheckContext &c) {
  auto r = make("CONN_DIAM", "connected with diameter at most 3");
  if (c.size() == 0) {
    na(r, kNoVertices);
    return r;
  }
  const auto d = diameter(c.g());
  if (!d) {
    fail(r, "graph is disconnected");
    return r;
  }
  r.detail = "diameter " + std::to_string(*d);
  if (*d > 3)
    r.status = CheckStatus::fail;
  return r;
}

inline CheckResult check_incomplete(const CheckContext &c) {
  auto r = make("INCOMPLETE", "not complete once there are three vertices");
  if (c.size() < 3) {
    na(r, "fewer than three vertices");
    return r;
  }
  if (is_complete(c.g()))
    fail(r, "complete graph on " + std::to_string(c.size()) + " vertices");
  return r;
}

inline CheckResult check_three(const CheckContext &c) {
  auto r = make("THREE", "the only three-vertex graph is the path P3");
  if (c.size() != 3) {
    na(r, "vertex count is " + std::to_string(c.size()) + ", not 3");
    return r;
  }
  if (!is_path(c.g()))
    fail(r, "three vertices but not a path");
  return r;
}

inline CheckResult check_rpartite(const CheckContext &c) {
  auto r = make("RPARTITE", "a complete r-partite graph is a star K_{n,1}");
  if (c.size() < 2) {
    na(r, "fewer than two vertices");
    return r;
  }
  const auto parts = multipartite_decomposition(c.g());
  if (!parts) {
    na(r, "not complete multipartite");
    return r;
  }
  const bool star = parts->size() == 2 &&
                    ((*parts)[0].size() == 1 || (*parts)[1].size() == 1);
  if (!star)
    fail(r, "complete " + std::to_string(parts->size()) +
                "-partite but not K_{n,1}");
  else
    r.detail = "K_{" + std::to_string(c.size() - 1) + ",1}";
  return r;
}

inline CheckResult check_nocycle(const CheckContext &c) {
  auto r = make("NOCYCLE", "not a cycle graph");
  if (c.size() == 0) {
    na(r, kNoVertices);
    return r;
  }
  if (is_cycle(c.g()))
    fail(r, "graph is the cycle C" + std::to_string(c.size()));
  return r;
}

inline CheckResult check_nonregular(const CheckContext &c) {
  auto r = make("NONREGULAR", "not regular once there are more than two vertices");
  if (c.size() <= 2) {
    na(r, "at most two vertices");
    return r;
  }
  if (is_regular(c.g()))
    fail(r, "every vertex has degree " + std::to_string(c.g().degree(0)));
  return r;
}

inline CheckResult check_contain(const CheckContext &c) {
  auto r = make("CONTAIN", "ann(x) properly inside ann(y) gives deg[x] <= deg[y]");
  if (c.size() == 0) {
    na(r, kNoVertices);
    return r;
  }
  std::size_t pairs = 0;
  std::vector<std::string> ties;
  for (std::size_t u = 0; u < c.size(); ++u) {
    for (std::size_t v = 0; v < c.size(); ++v) {
      if (u == v || !c.ann(u).is_proper_subset_of(c.ann(v)))
        continue;
      ++pairs;
      const auto du = c.g().degree(u), dv = c.g().degree(v);
      if (du > dv) {
        fail(r, "ann" + c.name(u) + " inside ann" + c.name(v) + " but deg " +
                    std::to_string(du) + " > " + std::to_string(dv));
        return r;
      }
      if (du == dv)
        ties.push_back("deg" + c.name(u) + " = deg" + c.name(v) + " = " +
                       std::to_string(du));
    }
  }
  r.detail = std::to_string(pairs) + " containment pair(s)";
  for (auto &t : ties)
    r.notes.push_back("equality with proper containment: " + t);
  return r;
}

// Every product of three elements of p is zero.
inline bool cube_is_zero(const Ring &ring, const std::vector<std::size_t> &p) {
  IdSet squares(ring.order());
  for (auto a : p)
    for (auto b : p)
      squares.insert(ring.mul(static_cast<ElementId>(a), static_cast<ElementId>(b)));
  bool zero = true;
  squares.for_each([&](std::size_t s) {
    if (!zero)
      return;
    for (auto c : p)
      if (ring.mul(static_cast<ElementId>(s), static_cast<ElementId>(c)) != ring.zero()) {
        zero = false;
        return;
      }
  });
  return zero;
}

inline CheckResult check_fan(const CheckContext &c) {
  auto r = make("FAN", "a fan with at least four vertices has one associated "
                       "prime p, p^3 = 0, char 2, 4 or 8, and R local");
  const auto n = c.size() >= 4 ? fan_shape(c.g()) : std::nullopt;
  if (!n) {
    na(r, "not a fan with at least four vertices");
    return r;
  }
  std::vector<std::size_t> ass;
  for (std::size_t v = 0; v < c.size(); ++v)
    if (c.ass(v))
      ass.push_back(v);
  if (ass.size() != 1) {
    fail(r, std::to_string(ass.size()) + " associated primes");
    return r;
  }
  if (!cube_is_zero(c.ring, c.ann(ass[0]).to_vector())) {
    fail(r, "p^3 != 0 for p = ann" + c.name(ass[0]));
    return r;
  }
  const auto ch = characteristic(c.ring);
  if (ch != 2 && ch != 4 && ch != 8) {
    fail(r, "characteristic " + std::to_string(ch));
    return r;
  }
  if (!is_local(c.ring)) {
    fail(r, "ring is not local");
    return r;
  }
  r.detail = "K_{" + std::to_string(*n) + ",1}, p = ann" + c.name(ass[0]) +
             ", char " + std::to_string(ch) + ", local";
  return r;
}

inline std::vector<std::size_t> max_degree_vertices(const Graph &g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.size(); ++v)
    best = std::max(best, g.degree(v));
  std::vector<std::size_t> out;
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) == best)
      out.push_back(v);
  return out;
}

inline CheckResult check_maxdeg_unique(const CheckContext &c) {
  auto r = make("MAXDEG_UNIQUE",
                "a vertex of strictly largest degree is maximal in F");
  if (c.size() == 0) {
    na(r, kNoVertices);
    return r;
  }
  const auto top = max_degree_vertices(c.g());
  if (top.size() != 1) {
    na(r, "largest degree shared by " + std::to_string(top.size()) + " vertices");
    return r;
  }
  if (!c.max(top[0]))
    fail(r, c.name(top[0]) + " has the largest degree but is not maximal in F");
  else
    r.detail = c.name(top[0]) + " degree " + std::to_string(c.g().degree(top[0]));
  return r;
}

inline CheckResult check_no_ass_leaf(const CheckContext &c) {
  auto r = make("NO_ASS_LEAF", "with more than three vertices no associated "
                               "prime is a leaf");
  if (c.size() <= 3) {
    na(r, "at most three vertices");
    return r;
  }
  for (std::size_t v = 0; v < c.size(); ++v)
    if (c.ass(v) && c.g().degree(v) == 1) {
      fail(r, "associated prime " + c.name(v) + " is a leaf");
      return r;
    }
  return r;
}

inline CheckResult check_leaf_neighbor(const CheckContext &c) {
  auto r = make("LEAF_NEIGHBOR", "with at least three vertices a vertex next to "
                                 "a leaf is an associated prime maximal in F");
  if (c.size() < 3) {
    na(r, "fewer than three vertices");
    return r;
  }
  const auto lv = leaves(c.g());
  for (Vertex leaf : lv) {
    const Vertex v = c.g().neighbors(leaf).front();
    if (!(c.ass(v) && c.max(v))) {
      fail(r, c.name(v) + " carries leaf " + c.name(leaf) +
                  " but is not an associated prime maximal in F");
      return r;
    }
  }
  r.detail = lv.empty() ? "no leaves" : std::to_string(lv.size()) + " leaf/leaves";
  return r;
}

inline CheckResult check_chain_degrees(const CheckContext &c) {
  auto r = make("CHAIN_DEGREES", "degrees increase strictly along a chain of "
                                 "associated primes");
  if (c.size() < 3) {
    na(r, "fewer than three vertices");
    return r;
  }
  std::vector<std::size_t> ass;
  for (std::size_t v = 0; v < c.size(); ++v)
    if (c.ass(v))
      ass.push_back(v);
  // DAG on Ass by proper containment; every path is a chain.
  std::vector<std::vector<std::size_t>> up(ass.size());
  for (std::size_t i = 0; i < ass.size(); ++i)
    for (std::size_t j = 0; j < ass.size(); ++j)
      if (i != j && c.ann(ass[i]).is_proper_subset_of(c.ann(ass[j])))
        up[i].push_back(j);

  std::size_t chains = 0;
  std::string witness;
  std::vector<std::size_t> path;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    path.push_back(i);
    if (path.size() >= 2) {
      ++chains;
      for (std::size_t k = 0; k + 1 < path.size() && witness.empty(); ++k) {
        const auto a = ass[path[k]], b = ass[path[k + 1]];
        if (c.g().degree(a) >= c.g().degree(b))
          witness = "ann" + c.name(a) + " inside ann" + c.name(b) + " but deg " +
                    std::to_string(c.g().degree(a)) +
                    " >= " + std::to_string(c.g().degree(b));
      }
    }
    for (auto j : up[i])
      walk(j);
    path.pop_back();
  };
  for (std::size_t i = 0; i < ass.size(); ++i)
    walk(i);
  if (chains == 0) {
    na(r, "associated primes are pairwise incomparable");
    return r;
  }
  if (!witness.empty())
    fail(r, witness);
  else
    r.detail = std::to_string(chains) + " chain(s)";
  return r;
}

inline CheckResult check_allmax(const CheckContext &c) {
  auto r = make("ALLMAX", "every vertex of maximal degree is maximal in F");
  if (c.size() <= 2) {
    na(r, "at most two vertices");
    return r;
  }
  const auto top = max_degree_vertices(c.g());
  std::string names;
  for (auto v : top) {
    if (!(c.max(v) && c.ass(v))) {
      fail(r, c.name(v) + " has maximal degree but is not maximal in F");
      return r;
    }
    names += (names.empty() ? "" : ", ") + c.name(v);
  }
  r.detail = names + " of degree " + std::to_string(c.g().degree(top[0]));
  for (std::size_t v = 0; v < c.size(); ++v)
    if (c.max(v) && c.g().degree(v) < c.g().degree(top[0]))
      r.notes.push_back("converse fails: " + c.name(v) +
                        " is maximal in F with degree " +
                        std::to_string(c.g().degree(v)) + " < " +
                        std::to_string(c.g().degree(top[0])));
  return r;
}

inline CheckResult check_cover(const CheckContext &c) {
  auto r = make("COVER", "weighted cover equals Gamma(R) iff every class "
                         "with x^2 = 0 has one element");
  const auto v = cover_equality_check(c.ring, c.e);
  if (!v.consistent()) {
    std::string why;
    if (v.equal != v.criterion)
      why = std::string("cover ") + (v.equal ? "equals" : "differs from") +
            " Gamma(R) while the criterion says " +
            (v.criterion ? "equal" : "different");
    else if (!v.is_subgraph)
      why = "cover is not a subgraph of Gamma(R)";
    else
      why = "cover plus cliques on x^2 = 0 classes is not Gamma(R)";
    fail(r, why);
    return r;
  }
  r.detail = v.equal ? "equal" : "differs";
  if (v.witness_class)
    r.detail += ", witness " + c.name(*v.witness_class) + " squares to 0 with " +
                std::to_string(c.e.classes[*v.witness_class].weight()) +
                " elements";
  return r;
}

} // namespace detail

/// Runs every check on R and its class graph E.
inline TheoremReport check_all(const Ring &r, const EGraph &e) {
  const detail::CheckContext c{r, e};
  TheoremReport report;
  report.ring = r.name();
  report.checks = {
      detail::check_ass_edge(c),      detail::check_conn_diam(c),
      detail::check_incomplete(c),    detail::check_three(c),
      detail::check_rpartite(c),      detail::check_nocycle(c),
      detail::check_nonregular(c),    detail::check_contain(c),
      detail::check_fan(c),           detail::check_maxdeg_unique(c),
      detail::check_no_ass_leaf(c),   detail::check_leaf_neighbor(c),
      detail::check_chain_degrees(c), detail::check_allmax(c),
      detail::check_cover(c)};
  return report;
}

inline TheoremReport check_all(const Ring &r) { return check_all(r, gamma_e(r)); }

} // namespace zdclass
