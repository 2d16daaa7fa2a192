#pragma once

#include "zdclass/error.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace zdclass {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph with labelled vertices and sorted adjacency lists.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n) : labels_(n), adj_(n) {
    for (std::size_t i = 0; i < n; ++i)
      labels_[i] = std::to_string(i);
  }
  explicit Graph(std::vector<std::string> labels)
      : labels_(std::move(labels)), adj_(labels_.size()) {}

  static Graph from_edges(std::size_t n, const std::vector<Edge> &edges) {
    Graph g(n);
    for (const auto &[u, v] : edges)
      g.add_edge(u, v);
    return g;
  }

  std::size_t size() const noexcept { return adj_.size(); }
  bool empty() const noexcept { return adj_.empty(); }

  const std::string &label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string> &labels() const noexcept { return labels_; }
  void set_label(Vertex v, std::string label) { labels_[v] = std::move(label); }

  /// Ignores repeated edges; rejects loops and out-of-range endpoints.
  void add_edge(Vertex u, Vertex v) {
    if (u >= size() || v >= size())
      throw Error(ErrorKind::invalid_spec,
                  "edge endpoint out of range: " + std::to_string(u) + "-" +
                      std::to_string(v));
    if (u == v)
      throw Error(ErrorKind::invalid_spec,
                  "loop at vertex " + std::to_string(u) + " in a simple graph");
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
  }

  bool adjacent(Vertex u, Vertex v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  const std::vector<Vertex> &neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(size());
    for (Vertex v = 0; v < size(); ++v)
      d[v] = degree(v);
    return d;
  }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto &nbrs : adj_)
      total += nbrs.size();
    return total / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < size(); ++u)
      for (Vertex v : adj_[u])
        if (u < v)
          out.emplace_back(u, v);
    return out;
  }

  Graph induced(const std::vector<Vertex> &keep) const {
    std::vector<std::string> labels;
    std::vector<std::size_t> index(size(), size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      index[keep[i]] = i;
      labels.push_back(labels_[keep[i]]);
    }
    Graph g(std::move(labels));
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (Vertex w : adj_[keep[i]])
        if (index[w] != size() && i < index[w])
          g.add_edge(i, index[w]);
    return g;
  }

  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph permuted(const std::vector<Vertex> &perm) const {
    std::vector<std::string> labels(size());
    for (Vertex v = 0; v < size(); ++v)
      labels[perm[v]] = labels_[v];
    Graph g(std::move(labels));
    for (const auto &[u, v] : edges())
      g.add_edge(perm[u], perm[v]);
    return g;
  }

  Graph complement() const {
    Graph g(labels_);
    for (Vertex u = 0; u < size(); ++u)
      for (Vertex v = u + 1; v < size(); ++v)
        if (!adjacent(u, v))
          g.add_edge(u, v);
    return g;
  }

  /// Same vertex count and edge set; labels are ignored.
  bool same_edges(const Graph &other) const {
    return size() == other.size() && adj_ == other.adj_;
  }

private:
  static void insert_sorted(std::vector<Vertex> &list, Vertex v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v)
      list.insert(it, v);
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adj_;
};

// Small named graphs used by tests, the screen and the acceptance suite.

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3)
    g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

/// Complete multipartite graph with the given part sizes; parts are laid out
/// consecutively.
inline Graph complete_multipartite_graph(const std::vector<std::size_t> &parts) {
  std::size_t n = 0;
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    n += parts[p];
    part_of.insert(part_of.end(), parts[p], p);
  }
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v])
        g.add_edge(u, v);
  return g;
}

/// Star K_{n,1}: vertex 0 is the centre.
inline Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i)
    g.add_edge(0, i);
  return g;
}

inline Graph petersen_graph() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

} // namespace zdclass
