#pragma once

#include "zdclass/error.hpp"
#include "zdclass/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

namespace zdclass {

namespace detail {

inline void require_non_empty(const Graph &g, const char *op) {
  if (g.empty())
    throw Error(ErrorKind::domain, std::string(op) + " of the empty graph");
}

inline std::vector<std::size_t> bfs_distances(const Graph &g, Vertex source) {
  constexpr auto unreached = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.size(), unreached);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == unreached) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

} // namespace detail

/// Greatest shortest-path distance; nullopt when disconnected.
inline std::optional<std::size_t> diameter(const Graph &g) {
  detail::require_non_empty(g, "diameter");
  std::size_t best = 0;
  for (Vertex s = 0; s < g.size(); ++s) {
    for (std::size_t d : detail::bfs_distances(g, s)) {
      if (d == static_cast<std::size_t>(-1))
        return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

inline bool is_connected(const Graph &g) {
  detail::require_non_empty(g, "connectivity");
  const auto dist = detail::bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) {
    return d == static_cast<std::size_t>(-1);
  });
}

inline bool is_complete(const Graph &g) {
  detail::require_non_empty(g, "completeness");
  const std::size_t n = g.size();
  return g.edge_count() == n * (n - 1) / 2;
}

inline bool is_regular(const Graph &g) {
  detail::require_non_empty(g, "regularity");
  for (Vertex v = 1; v < g.size(); ++v)
    if (g.degree(v) != g.degree(0))
      return false;
  return true;
}

inline bool is_cycle(const Graph &g) {
  if (g.size() < 3 || g.edge_count() != g.size())
    return false;
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) != 2)
      return false;
  return is_connected(g);
}

inline bool is_path(const Graph &g) {
  if (g.empty() || g.edge_count() + 1 != g.size())
    return false;
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) > 2)
      return false;
  return is_connected(g);
}

/// Parts of G when G is complete multipartite (its complement is a disjoint
/// union of cliques), ordered by smallest member; nullopt otherwise.
inline std::optional<std::vector<std::vector<Vertex>>>
multipartite_decomposition(const Graph &g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> part(n, n);
  std::vector<std::vector<Vertex>> parts;
  for (Vertex s = 0; s < n; ++s) {
    if (part[s] != n)
      continue;
    // component of s in the complement
    std::vector<Vertex> members{s};
    part[s] = parts.size();
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Vertex u = members[i];
      for (Vertex w = 0; w < n; ++w) {
        if (w != u && part[w] == n && !g.adjacent(u, w)) {
          part[w] = parts.size();
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (g.adjacent(members[i], members[j]))
          return std::nullopt;
    parts.push_back(std::move(members));
  }
  return parts;
}

/// Star centres of K_{n,1}: for K_2 both endpoints qualify.
inline std::vector<Vertex> fan_centers(const Graph &g) {
  const std::size_t n = g.size();
  if (n < 2 || g.edge_count() != n - 1)
    return {};
  std::vector<Vertex> centers;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == n - 1)
      centers.push_back(v);
  return centers;
}

/// n when G is the fan K_{n,1}.
inline std::optional<std::size_t> fan_shape(const Graph &g) {
  if (fan_centers(g).empty())
    return std::nullopt;
  return g.size() - 1;
}

inline std::vector<Vertex> leaves(const Graph &g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) == 1)
      out.push_back(v);
  return out;
}

inline const std::vector<Vertex> &neighborhood(const Graph &g, Vertex v) {
  return g.neighbors(v);
}

struct NeighborhoodLemmaResult {
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
};

/// Hypothesis: distinct vertices are non-adjacent exactly when their
/// neighbourhoods coincide. Conclusion: G is complete r-partite.
inline NeighborhoodLemmaResult neighborhood_lemma_check(const Graph &g) {
  NeighborhoodLemmaResult result;
  result.hypothesis_holds = true;
  for (Vertex v = 0; v < g.size() && result.hypothesis_holds; ++v) {
    for (Vertex w = v + 1; w < g.size(); ++w) {
      const bool same = g.neighbors(v) == g.neighbors(w);
      if (g.adjacent(v, w) == same) {
        result.hypothesis_holds = false;
        break;
      }
    }
  }
  result.conclusion_holds = multipartite_decomposition(g).has_value();
  if (result.hypothesis_holds && !result.conclusion_holds)
    throw Error(ErrorKind::internal,
                "neighbourhood hypothesis holds but graph is not multipartite");
  return result;
}

/// Vertices whose removal increases the number of connected components.
inline std::vector<Vertex> cut_vertices(const Graph &g) {
  auto components = [&](Vertex skip) {
    std::vector<bool> seen(g.size(), false);
    std::size_t count = 0;
    for (Vertex s = 0; s < g.size(); ++s) {
      if (s == skip || seen[s])
        continue;
      ++count;
      std::vector<Vertex> stack{s};
      seen[s] = true;
      while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u))
          if (w != skip && !seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
      }
    }
    return count;
  };
  const std::size_t base = components(g.size());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v)
    if (components(v) > base)
      out.push_back(v);
  return out;
}

inline std::size_t triangle_count(const Graph &g) {
  std::size_t count = 0;
  for (const auto &[u, v] : g.edges())
    for (Vertex w : g.neighbors(v))
      if (w > v && g.adjacent(u, w))
        ++count;
  return count;
}

// ---------------------------------------------------------------------------
// Canonical labelling

inline constexpr std::size_t kExactCanonicalLimit = 64;

/// Relabelling-invariant code. When `exact` is false the code only encodes
/// (order, edge count, degree multiset, triangle count).
struct CanonicalLabel {
  bool exact = true;
  std::string code;

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out = exact ? "" : "~";
    for (unsigned char c : code) {
      out += digits[c >> 4];
      out += digits[c & 15];
    }
    return out;
  }

  friend bool operator==(const CanonicalLabel &, const CanonicalLabel &) = default;
  friend auto operator<=>(const CanonicalLabel &, const CanonicalLabel &) = default;
};

namespace detail {

using Cells = std::vector<std::vector<Vertex>>;

// Refines an ordered partition to the coarsest equitable one below it. The
// order of new cells depends only on neighbour-count signatures, so the
// result commutes with relabelling.
inline Cells refine(const Graph &g, Cells cells) {
  const std::size_t n = g.size();
  std::vector<std::size_t> cell_of(n);
  while (true) {
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (Vertex v : cells[c])
        cell_of[v] = c;
    Cells next;
    bool changed = false;
    for (const auto &cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<std::size_t>, Vertex>> keyed;
      for (Vertex v : cell) {
        std::vector<std::size_t> counts(cells.size(), 0);
        for (Vertex w : g.neighbors(v))
          ++counts[cell_of[w]];
        keyed.emplace_back(std::move(counts), v);
      }
      std::sort(keyed.begin(), keyed.end());
      std::size_t start = 0;
      for (std::size_t i = 1; i <= keyed.size(); ++i) {
        if (i == keyed.size() || keyed[i].first != keyed[start].first) {
          std::vector<Vertex> part;
          for (std::size_t j = start; j < i; ++j)
            part.push_back(keyed[j].second);
          next.push_back(std::move(part));
          start = i;
        }
      }
      changed = changed || keyed.front().first != keyed.back().first;
    }
    cells = std::move(next);
    if (!changed)
      return cells;
  }
}

class CanonicalSearch {
public:
  explicit CanonicalSearch(const Graph &g) : g_(g) {}

  std::string run() {
    Cells root;
    if (g_.size() > 0) {
      std::vector<Vertex> all(g_.size());
      std::iota(all.begin(), all.end(), Vertex{0});
      root.push_back(std::move(all));
    }
    std::vector<Vertex> prefix;
    search(std::move(root), prefix);
    return best_code_;
  }

private:
  std::string encode(const std::vector<Vertex> &order) const {
    const std::size_t n = order.size();
    std::string code;
    code.push_back(static_cast<char>(n));
    std::uint8_t byte = 0;
    int bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        byte = static_cast<std::uint8_t>(
            (byte << 1) | (g_.adjacent(order[i], order[j]) ? 1 : 0));
        if (++bits == 8) {
          code.push_back(static_cast<char>(byte));
          byte = 0;
          bits = 0;
        }
      }
    }
    if (bits != 0)
      code.push_back(static_cast<char>(byte << (8 - bits)));
    return code;
  }

  void record_automorphism(const std::vector<Vertex> &from,
                           const std::vector<Vertex> &to) {
    std::vector<Vertex> gamma(g_.size());
    for (std::size_t i = 0; i < from.size(); ++i)
      gamma[from[i]] = to[i];
    automorphisms_.push_back(std::move(gamma));
  }

  // Orbit representatives of the group generated by the automorphisms found
  // so far that fix every vertex of `prefix`.
  std::vector<Vertex> orbit_roots(const std::vector<Vertex> &prefix) const {
    std::vector<Vertex> parent(g_.size());
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex v) {
      while (parent[v] != v)
        v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto &gamma : automorphisms_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](Vertex v) { return gamma[v] == v; });
      if (!fixes)
        continue;
      for (Vertex v = 0; v < g_.size(); ++v) {
        const Vertex a = find(v), b = find(gamma[v]);
        if (a != b)
          parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < g_.size(); ++v)
      parent[v] = find(v);
    return parent;
  }

  void search(Cells cells, std::vector<Vertex> &prefix) {
    cells = refine(g_, std::move(cells));
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const auto &c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<Vertex> order;
      for (const auto &c : cells)
        order.push_back(c.front());
      std::string code = encode(order);
      if (first_order_.empty() && !order.empty()) {
        first_order_ = order;
        first_code_ = code;
      } else if (code == first_code_) {
        record_automorphism(first_order_, order);
      } else if (code == best_code_) {
        record_automorphism(best_order_, order);
      }
      if (best_order_.empty() || code > best_code_) {
        best_code_ = std::move(code);
        best_order_ = std::move(order);
      }
      return;
    }
    const std::size_t index = static_cast<std::size_t>(target - cells.begin());
    const std::vector<Vertex> candidates = *target;
    std::vector<Vertex> explored;
    for (Vertex v : candidates) {
      if (!explored.empty()) {
        const auto roots = orbit_roots(prefix);
        const bool pruned =
            std::any_of(explored.begin(), explored.end(),
                        [&](Vertex u) { return roots[u] == roots[v]; });
        if (pruned)
          continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != index) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[c])
          if (w != v)
            rest.push_back(w);
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  const Graph &g_;
  std::vector<std::vector<Vertex>> automorphisms_;
  std::vector<Vertex> first_order_, best_order_;
  std::string first_code_, best_code_;
};

} // namespace detail

/// Exact canonical code for graphs up to kExactCanonicalLimit vertices
/// (refinement plus individualisation search); invariant tuple beyond that.
inline CanonicalLabel canonical_form(const Graph &g) {
  if (g.size() <= kExactCanonicalLimit)
    return {true, detail::CanonicalSearch(g).run()};
  auto degrees = g.degrees();
  std::sort(degrees.begin(), degrees.end());
  std::string code;
  auto put = [&](std::uint64_t v) {
    for (int i = 7; i >= 0; --i)
      code.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  put(g.size());
  put(g.edge_count());
  for (auto d : degrees)
    put(d);
  put(triangle_count(g));
  return {false, std::move(code)};
}

inline bool is_isomorphic(const Graph &a, const Graph &b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count())
    return false;
  return canonical_form(a) == canonical_form(b);
}

} // namespace zdclass
