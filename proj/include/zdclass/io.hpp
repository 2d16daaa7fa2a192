#pragma once

#include "zdclass/census.hpp"
#include "zdclass/graph.hpp"
#include "zdclass/theorems.hpp"
#include "zdclass/zd_core.hpp"

#include <json.hpp>

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace zdclass {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Writers

inline json egraph_json(const Ring &r, const EGraph &e) {
  json vertices = json::array();
  for (std::size_t v = 0; v < e.size(); ++v) {
    const auto &c = e.classes[v];
    json members = json::array();
    for (ElementId m : c.members)
      members.push_back(r.element_name(m));
    vertices.push_back({{"id", v},
                        {"rep", e.graph.label(v)},
                        {"members", std::move(members)},
                        {"weight", c.weight()},
                        {"ann_size", c.annihilator.count()},
                        {"is_ass", static_cast<bool>(e.is_associated_prime[v])},
                        {"is_max_in_F", static_cast<bool>(e.is_maximal_in_F[v])}});
  }
  json edges = json::array();
  for (const auto &[u, v] : e.graph.edges())
    edges.push_back({std::min(u, v), std::max(u, v)});
  return {{"ring", e.ring}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

inline json graph_json(const Graph &g) {
  json edges = json::array();
  for (const auto &[u, v] : g.edges())
    edges.push_back({std::min(u, v), std::max(u, v)});
  return {{"n", g.size()}, {"labels", g.labels()}, {"edges", std::move(edges)}};
}

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

/// `graph "name" { "a"; "a" -- "b"; }`, vertices in id order. Unlabelled
/// vertices print as their index.
inline std::string graph_dot(const Graph &g, std::string_view name = "G") {
  auto label = [&](Vertex v) {
    return g.label(v).empty() ? std::to_string(v) : g.label(v);
  };
  std::string out = "graph " + dot_quote(name) + " {\n";
  for (Vertex v = 0; v < g.size(); ++v)
    out += "  " + dot_quote(label(v)) + ";\n";
  for (const auto &[u, v] : g.edges())
    out += "  " + dot_quote(label(u)) + " -- " + dot_quote(label(v)) + ";\n";
  return out + "}\n";
}

inline std::string egraph_text(const EGraph &e) {
  std::ostringstream out;
  out << e.ring << ": " << e.size() << " classes, " << e.graph.edge_count()
      << " edges\n";
  for (std::size_t v = 0; v < e.size(); ++v) {
    const auto &c = e.classes[v];
    out << "  [" << e.graph.label(v) << "] weight " << c.weight() << ", |ann| "
        << c.annihilator.count() << ", degree " << e.degree(v);
    if (e.is_associated_prime[v])
      out << ", associated prime";
    if (e.is_maximal_in_F[v])
      out << ", maximal in F";
    out << "\n";
  }
  for (const auto &[u, v] : e.graph.edges())
    out << "  [" << e.graph.label(u) << "] -- [" << e.graph.label(v) << "]\n";
  return out.str();
}

inline std::string graph_text(const Graph &g) {
  std::ostringstream out;
  out << g.size() << " vertices, " << g.edge_count() << " edges\n";
  for (const auto &[u, v] : g.edges())
    out << "  " << g.label(u) << " -- " << g.label(v) << "\n";
  return out.str();
}

inline json report_json(const TheoremReport &report) {
  json checks = json::array();
  for (const auto &c : report.checks)
    checks.push_back({{"id", c.id},
                      {"anchor", c.anchor},
                      {"status", to_string(c.status)},
                      {"witness", c.detail},
                      {"notes", c.notes}});
  return {{"ring", report.ring}, {"all_pass", report.all_pass()}, {"checks", std::move(checks)}};
}

inline json census_entry_json(const CensusEntry &e) {
  json j = {{"spec", e.spec}};
  if (!e.built()) {
    j["error"] = e.error;
    j["error_kind"] = to_string(e.error_kind);
    return j;
  }
  j["order"] = e.order;
  j["label"] = e.label;
  j["vertices"] = e.vertices;
  j["edges"] = e.edges;
  j["ass"] = e.ass_count;
  j["fan"] = e.fan ? json(*e.fan) : json(nullptr);
  j["has_leaf"] = e.has_leaf;
  j["is_path"] = e.is_path;
  j["characteristic"] = e.characteristic;
  j["local"] = e.local;
  j["failed"] = e.failed_checks;
  j["oracle_match"] = e.oracle_match ? json(*e.oracle_match) : json(nullptr);
  return j;
}

/// One JSON object per entry, newline separated.
inline std::string census_jsonl(const CensusResult &result) {
  std::string out;
  for (const auto &e : result.entries)
    out += census_entry_json(e).dump() + "\n";
  return out;
}

inline std::string census_table(const CensusResult &result) {
  std::ostringstream out;
  out << result.entries.size() << " rings, " << result.classes.size()
      << " graphs up to isomorphism, " << result.failures() << " failing, "
      << result.construction_errors() << " not constructed\n";
  out << "   V    E  witnesses\n";
  for (const auto &c : result.classes) {
    char head[32];
    std::snprintf(head, sizeof head, "%4zu %4zu  ", c.vertices, c.edges);
    out << head;
    for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
      if (i == 6) {
        out << " (+" << c.witnesses.size() - 6 << ")";
        break;
      }
      out << (i ? ", " : "") << c.witnesses[i];
    }
    out << "\n";
  }
  for (const auto &e : result.entries) {
    if (!e.built())
      out << "not constructed: " << e.spec << ": " << e.error << "\n";
    else if (!e.ok()) {
      out << "FAIL " << e.spec << ":";
      for (const auto &id : e.failed_checks)
        out << " " << id;
      if (e.oracle_match == false)
        out << " oracle";
      out << "\n";
    }
  }
  return out.str();
}

inline json sweep_json(const SweepReport &s) {
  json levels = json::array();
  for (const auto &l : s.levels) {
    json j = {{"N", l.exponent}, {"spec", l.spec}};
    if (!l.built()) {
      j["error"] = l.error;
      levels.push_back(std::move(j));
      continue;
    }
    j["order"] = l.order;
    j["vertices"] = l.vertices;
    j["edges"] = l.edges;
    j["leaves"] = l.leaves;
    j["reps"] = l.reps;
    if (!l.probe_error.empty())
      j["probe_error"] = l.probe_error;
    j["stable"] = {{"vertices", l.stable_graph.labels()},
                   {"degrees", l.stable_graph.degrees()},
                   {"edges", graph_json(l.stable_graph)["edges"]},
                   {"leaves", l.stable_leaves()},
                   {"cut_vertices", l.stable_cut_vertices()}};
    j["transient"] = l.transient;
    levels.push_back(std::move(j));
  }
  json j = {{"spec", s.spec},
            {"var", s.var},
            {"range", {s.lo, s.hi}},
            {"verdict", to_string(s.verdict)},
            {"growth", s.growth()},
            {"levels", std::move(levels)}};
  if (s.stabilized_at)
    j["stabilized_at"] = *s.stabilized_at;
  return j;
}

inline std::string sweep_text(const SweepReport &s) {
  std::ostringstream out;
  out << s.spec << " truncated in " << s.var << ", N = " << s.lo << ".." << s.hi
      << "\n";
  for (const auto &l : s.levels) {
    out << "N=" << l.exponent << ": ";
    if (!l.built()) {
      out << "not constructed: " << l.error << "\n";
      continue;
    }
    out << "|R|=" << l.order << ", Gamma_E " << l.vertices << " vertices, "
        << l.edges << " edges, " << l.leaves << " leaves; stable "
        << l.stable_count() << " classes, " << l.stable_graph.edge_count()
        << " edges, " << l.stable_leaves() << " leaves, cut vertices {";
    const auto cuts = l.stable_cut_vertices();
    for (std::size_t i = 0; i < cuts.size(); ++i)
      out << (i ? ", " : "") << "[" << cuts[i] << "]";
    out << "}, " << l.transient.size() << " transient\n";
    if (!l.probe_error.empty())
      out << "  deeper level unavailable: " << l.probe_error << "\n";
    const auto deg = l.stable_graph.degrees();
    out << "  stable:";
    for (std::size_t v = 0; v < deg.size() && v < 12; ++v)
      out << " [" << l.stable_graph.label(v) << "]:" << deg[v];
    if (deg.size() > 12)
      out << " ...";
    out << "\n";
  }
  out << "verdict: " << to_string(s.verdict);
  if (s.stabilized_at)
    out << " at N=" << *s.stabilized_at;
  out << "; stable class counts";
  for (auto n : s.growth())
    out << " " << n;
  return out.str() + "\n";
}

inline std::string screen_text(const ScreenVerdict &v) {
  if (v.passes_necessary())
    return "passes every necessary condition (realizability not decided)\n";
  std::string out = "not realizable:\n";
  for (std::size_t i = 0; i < v.failed.size(); ++i)
    out += "  " + v.failed[i] + ": " + v.reasons[i] + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Readers

/// `{"n": 4, "edges": [[0,1], ...]}`, optional "labels".
inline Graph read_graph_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &err) {
    throw Error(ErrorKind::parse, std::string("graph JSON: ") + err.what());
  }
  try {
    const auto n = j.at("n").get<std::size_t>();
    Graph g(n);
    if (j.contains("labels")) {
      const auto labels = j["labels"].get<std::vector<std::string>>();
      if (labels.size() != n)
        throw Error(ErrorKind::invalid_spec, "graph JSON: label count differs from n");
      for (std::size_t v = 0; v < n; ++v)
        g.set_label(v, labels[v]);
    } else {
      for (std::size_t v = 0; v < n; ++v)
        g.set_label(v, std::to_string(v));
    }
    for (const auto &e : j.at("edges")) {
      const auto u = e.at(0).get<std::size_t>();
      const auto v = e.at(1).get<std::size_t>();
      if (u >= n || v >= n || u == v)
        throw Error(ErrorKind::invalid_spec, "graph JSON: bad edge [" +
                                                 std::to_string(u) + "," +
                                                 std::to_string(v) + "]");
      if (!g.adjacent(u, v))
        g.add_edge(u, v);
    }
    return g;
  } catch (const json::exception &err) {
    throw Error(ErrorKind::invalid_spec, std::string("graph JSON: ") + err.what());
  }
}

/// Undirected DOT subset: node statements `a;` and edge chains `a -- b -- c;`
/// with bare or quoted ids. Attribute lists are skipped.
inline Graph read_graph_dot(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string &what) -> Error {
    return ParseError(pos, "DOT: " + what);
  };
  auto skip = [&] {
    for (;;) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (text.substr(pos, 2) == "//" || (pos < text.size() && text[pos] == '#')) {
        while (pos < text.size() && text[pos] != '\n')
          ++pos;
        continue;
      }
      if (text.substr(pos, 2) == "/*") {
        const auto end = text.find("*/", pos + 2);
        pos = end == std::string_view::npos ? text.size() : end + 2;
        continue;
      }
      return;
    }
  };
  auto ident = [&]() -> std::optional<std::string> {
    skip();
    if (pos >= text.size())
      return std::nullopt;
    if (text[pos] == '"') {
      std::string out;
      for (++pos; pos < text.size() && text[pos] != '"'; ++pos) {
        if (text[pos] == '\\' && pos + 1 < text.size())
          ++pos;
        out += text[pos];
      }
      if (pos >= text.size())
        throw fail("unterminated string");
      ++pos;
      return out;
    }
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
            text[pos] == '.'))
      ++pos;
    if (start == pos)
      return std::nullopt;
    return std::string(text.substr(start, pos - start));
  };

  auto keyword = ident();
  if (keyword == "strict")
    keyword = ident();
  if (keyword != "graph")
    throw fail("expected 'graph'");
  skip();
  if (pos < text.size() && text[pos] != '{')
    ident();
  skip();
  if (pos >= text.size() || text[pos] != '{')
    throw fail("expected '{'");
  ++pos;

  std::vector<std::string> names;
  std::map<std::string, Vertex> index;
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto vertex = [&](const std::string &name) {
    auto [it, inserted] = index.try_emplace(name, names.size());
    if (inserted)
      names.push_back(name);
    return it->second;
  };
  auto skip_attributes = [&] {
    skip();
    if (pos < text.size() && text[pos] == '[') {
      const auto end = text.find(']', pos);
      if (end == std::string_view::npos)
        throw fail("unterminated attribute list");
      pos = end + 1;
    }
  };
  for (;;) {
    skip();
    if (pos >= text.size())
      throw fail("expected '}'");
    if (text[pos] == '}')
      break;
    if (text[pos] == ';') {
      ++pos;
      continue;
    }
    const auto first = ident();
    if (!first)
      throw fail("expected a node id");
    if (*first == "node" || *first == "edge" || *first == "graph") {
      skip_attributes();
      continue;
    }
    Vertex prev = vertex(*first);
    skip();
    while (text.substr(pos, 2) == "--") {
      pos += 2;
      const auto next = ident();
      if (!next)
        throw fail("expected a node id after '--'");
      const Vertex cur = vertex(*next);
      if (cur == prev)
        throw fail("self-loop on " + *next);
      edges.emplace_back(prev, cur);
      prev = cur;
      skip();
    }
    skip_attributes();
  }
  Graph g(names);
  for (const auto &[u, v] : edges)
    if (!g.adjacent(u, v))
      g.add_edge(u, v);
  return g;
}

/// JSON when the text starts with '{', DOT otherwise.
inline Graph read_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{')
    return read_graph_json(text);
  return read_graph_dot(text);
}

} // namespace zdclass
