#pragma once

#include "zdclass/error.hpp"
#include "zdclass/graph.hpp"
#include "zdclass/id_set.hpp"
#include "zdclass/ring.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zdclass {

/// ann(owner) as a set of element ids.
struct AnnSet {
  ElementId owner = 0;
  IdSet members;

  std::size_t size() const { return members.count(); }
  bool contains(ElementId y) const { return members.contains(y); }
};

/// { y : x*y = 0 } for x != 0.
inline AnnSet annihilator(const Ring &r, ElementId x) {
  if (x == r.zero())
    throw Error(ErrorKind::domain, "ann(0) is the whole ring and is not in F");
  return AnnSet{x, AnnihilatorScanner(r)(x)};
}

/// One equivalence class [x] of non-zero zero divisors.
struct ZdClass {
  ElementId representative = 0;   // smallest member id
  std::vector<ElementId> members; // ascending
  IdSet annihilator;              // shared by every member
  bool squares_to_zero = false;   // x^2 = 0 (independent of the member)

  std::size_t weight() const { return members.size(); }
};

/// Partition of Z*(R) by annihilator, ordered by representative id.
/// Grouping compares complete annihilator bitsets.
inline std::vector<ZdClass> zero_divisor_classes(const Ring &r) {
  std::map<IdSet, std::size_t> by_ann;
  std::vector<ZdClass> classes;
  const IdSet trivial = [&] {
    IdSet s(r.order());
    s.insert(r.zero());
    return s;
  }();
  const AnnihilatorScanner scan(r);
  for (ElementId x = 0; x < r.order(); ++x) {
    if (x == r.zero())
      continue;
    IdSet ann = scan(x);
    if (ann == trivial)
      continue;
    auto [it, inserted] = by_ann.try_emplace(ann, classes.size());
    if (inserted) {
      ZdClass c;
      c.representative = x;
      c.squares_to_zero = ann.contains(x);
      c.annihilator = std::move(ann);
      classes.push_back(std::move(c));
    }
    classes[it->second].members.push_back(x);
  }
  return classes;
}

/// Orders up to this size use the plain pair scan for primality.
inline constexpr std::size_t kPairScanLimit = 4096;

namespace detail {

inline std::vector<ElementId> nilpotents(const Ring &r) {
  std::vector<ElementId> out;
  for (ElementId a = 0; a < r.order(); ++a) {
    ElementId p = a;
    for (std::size_t k = 0; k < 64 && p != r.zero(); ++k)
      p = r.mul(p, p);
    if (p == r.zero())
      out.push_back(a);
  }
  return out;
}

// ab in A for a, b outside A depends only on the cosets a + A and b + A, so
// one representative per coset suffices.
inline bool prime_by_cosets(const Ring &r, const IdSet &ann,
                            const std::vector<ElementId> &nil) {
  for (ElementId a : nil)
    if (!ann.contains(a))
      return false;
  const auto members = ann.to_vector();
  std::vector<bool> covered(r.order(), false);
  std::vector<ElementId> reps;
  for (ElementId t = 0; t < r.order(); ++t) {
    if (covered[t])
      continue;
    for (auto a : members)
      covered[r.add(t, static_cast<ElementId>(a))] = true;
    if (!ann.contains(t))
      reps.push_back(t);
  }
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i; j < reps.size(); ++j)
      if (ann.contains(r.mul(reps[i], reps[j])))
        return false;
  return true;
}

inline bool prime_by_pairs(const Ring &r, const IdSet &ann) {
  std::vector<ElementId> outside;
  for (ElementId a = 0; a < r.order(); ++a)
    if (!ann.contains(a))
      outside.push_back(a);
  for (std::size_t i = 0; i < outside.size(); ++i)
    for (std::size_t j = i; j < outside.size(); ++j)
      if (ann.contains(r.mul(outside[i], outside[j])))
        return false;
  return true;
}

} // namespace detail

/// True iff the annihilator `ann` is a prime ideal: proper, and ab in A
/// implies a in A or b in A.
inline bool is_prime_annihilator(const Ring &r, const IdSet &ann) {
  if (ann.contains(r.one()))
    return false;
  if (r.order() <= kPairScanLimit)
    return detail::prime_by_pairs(r, ann);
  return detail::prime_by_cosets(r, ann, detail::nilpotents(r));
}

/// Vertices whose annihilator is not properly contained in another class's.
inline std::vector<bool> maximal_flags(const std::vector<ZdClass> &classes) {
  std::vector<bool> flags(classes.size(), true);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j)
      if (i != j &&
          classes[i].annihilator.is_proper_subset_of(classes[j].annihilator)) {
        flags[i] = false;
        break;
      }
  return flags;
}

/// Graph of equivalence classes of zero divisors.
struct EGraph {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::string ring;
  std::vector<ZdClass> classes;
  Graph graph;                         // vertex i <-> classes[i]
  std::vector<bool> is_associated_prime;
  std::vector<bool> is_maximal_in_F;
  std::vector<std::size_t> class_of;   // element id -> vertex, or npos

  std::size_t size() const noexcept { return classes.size(); }
  std::size_t degree(std::size_t v) const { return graph.degree(v); }

  /// Vertex of the class containing x; throws if x is not a zero divisor.
  std::size_t vertex_of(ElementId x) const {
    if (x >= class_of.size() || class_of[x] == npos)
      throw Error(ErrorKind::domain,
                  "element " + std::to_string(x) + " is not a non-zero zero divisor");
    return class_of[x];
  }
};

namespace detail {

/// Member pairs multiplied out directly up to this many; above it the check
/// reads products off the annihilator of each class.
inline constexpr std::size_t kMemberPairLimit = std::size_t{1} << 24;

// Representative-level adjacency must agree with every member pair.
inline void check_well_defined(const Ring &r, const EGraph &e) {
  std::size_t zd = 0;
  for (const auto &c : e.classes)
    zd += c.weight();
  auto fail = [&](ElementId x, ElementId y) {
    throw Error(ErrorKind::internal, "class multiplication is not well defined at " +
                                         r.element_name(x) + " * " +
                                         r.element_name(y));
  };
  if (zd * zd <= kMemberPairLimit) {
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        const bool edge = e.graph.adjacent(i, j);
        for (ElementId x : e.classes[i].members)
          for (ElementId y : e.classes[j].members)
            if ((r.mul(x, y) == r.zero()) != edge)
              fail(x, y);
      }
    return;
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto &c = e.classes[i];
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j)
        continue;
      const bool edge = e.graph.adjacent(i, j);
      for (ElementId y : e.classes[j].members)
        if (c.annihilator.contains(y) != edge)
          fail(c.representative, y);
    }
  }
}

} // namespace detail

/// Builds the class graph with associated-prime and maximal-in-F flags.
/// Distinct classes are adjacent iff their representatives multiply to 0.
inline EGraph gamma_e(const Ring &r) {
  EGraph e;
  e.ring = r.name();
  e.classes = zero_divisor_classes(r);
  std::vector<std::string> labels;
  labels.reserve(e.classes.size());
  for (const auto &c : e.classes)
    labels.push_back(r.element_name(c.representative));
  e.graph = Graph(std::move(labels));
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (r.mul(e.classes[i].representative, e.classes[j].representative) ==
          r.zero())
        e.graph.add_edge(i, j);

  e.class_of.assign(r.order(), EGraph::npos);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (ElementId x : e.classes[i].members)
      e.class_of[x] = i;

  e.is_associated_prime.resize(e.size());
  if (r.order() <= kPairScanLimit) {
    for (std::size_t i = 0; i < e.size(); ++i)
      e.is_associated_prime[i] =
          !e.classes[i].annihilator.contains(r.one()) &&
          detail::prime_by_pairs(r, e.classes[i].annihilator);
  } else {
    const auto nil = detail::nilpotents(r);
    for (std::size_t i = 0; i < e.size(); ++i)
      e.is_associated_prime[i] =
          !e.classes[i].annihilator.contains(r.one()) &&
          detail::prime_by_cosets(r, e.classes[i].annihilator, nil);
  }
  e.is_maximal_in_F = maximal_flags(e.classes);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e.is_maximal_in_F[i] && !e.is_associated_prime[i])
      throw Error(ErrorKind::internal,
                  "annihilator of " + e.graph.label(i) +
                      " is maximal in F but not prime");

  detail::check_well_defined(r, e);
  return e;
}

/// Zero-divisor graph on individual elements of Z*(R), ascending id.
inline Graph gamma(const Ring &r) {
  std::vector<ElementId> vertices;
  const auto mask = zero_divisor_mask(r);
  for (ElementId x = 0; x < r.order(); ++x)
    if (x != r.zero() && mask[x])
      vertices.push_back(x);
  std::vector<std::string> labels;
  for (ElementId x : vertices)
    labels.push_back(r.element_name(x));
  Graph g(std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (r.mul(vertices[i], vertices[j]) == r.zero())
        g.add_edge(i, j);
  return g;
}

struct AssociatedPrime {
  std::size_t vertex = 0;
  AnnSet ann;
};

inline std::vector<AssociatedPrime> associated_primes(const EGraph &e) {
  std::vector<AssociatedPrime> out;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e.is_associated_prime[i])
      out.push_back({i, AnnSet{e.classes[i].representative,
                               e.classes[i].annihilator}});
  return out;
}

inline std::vector<AssociatedPrime> associated_primes(const Ring &r) {
  return associated_primes(gamma_e(r));
}

inline std::vector<std::size_t> maximal_in_F(const EGraph &e) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e.is_maximal_in_F[i])
      out.push_back(i);
  return out;
}

inline std::vector<std::size_t> maximal_in_F(const Ring &r) {
  return maximal_in_F(gamma_e(r));
}

// ---------------------------------------------------------------------------
// Weighted cover

/// Blow-up of G: vertex i becomes weights[i] copies (labelled "label#k"),
/// copies of i and j adjacent iff i-j is an edge, copies of one vertex never.
/// Copies are laid out vertex by vertex.
inline Graph weighted_cover(const Graph &g, const std::vector<std::size_t> &weights) {
  if (weights.size() != g.size())
    throw Error(ErrorKind::domain, "weight vector has " +
                                       std::to_string(weights.size()) +
                                       " entries for " + std::to_string(g.size()) +
                                       " vertices");
  std::vector<std::size_t> offset(g.size() + 1, 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (weights[i] < 1)
      throw Error(ErrorKind::domain, "weights must be at least 1");
    offset[i + 1] = offset[i] + weights[i];
    for (std::size_t k = 1; k <= weights[i]; ++k)
      labels.push_back(g.label(i) + "#" + std::to_string(k));
  }
  Graph cover(std::move(labels));
  for (const auto &[u, v] : g.edges())
    for (std::size_t a = offset[u]; a < offset[u + 1]; ++a)
      for (std::size_t b = offset[v]; b < offset[v + 1]; ++b)
        cover.add_edge(a, b);
  return cover;
}

inline Graph weighted_cover(const EGraph &e, const std::vector<std::size_t> &weights) {
  return weighted_cover(e.graph, weights);
}

/// Class sizes of E, in vertex order.
inline std::vector<std::size_t> class_weights(const EGraph &e) {
  std::vector<std::size_t> w;
  for (const auto &c : e.classes)
    w.push_back(c.weight());
  return w;
}

struct CoverVerdict {
  bool equal = false;            // cover with class weights equals Gamma(R)
  bool criterion = false;        // every class with x^2 = 0 has weight 1
  bool is_subgraph = true;       // cover maps into Gamma(R)
  bool cliques_complete = true;  // cover + cliques on x^2 = 0 classes == Gamma(R)
  std::optional<std::size_t> witness_class; // x^2 = 0 and weight > 1
  std::optional<std::pair<ElementId, ElementId>> missing_edge;

  bool consistent() const {
    return equal == criterion && is_subgraph && cliques_complete;
  }
};

/// Z*(R) sizes up to this build Gamma(R) explicitly for the cover check.
inline constexpr std::size_t kExplicitCoverLimit = 4096;

namespace detail {

inline void fill_criterion(const EGraph &e, CoverVerdict &verdict) {
  verdict.criterion = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e.classes[i].squares_to_zero && e.classes[i].weight() > 1) {
      verdict.criterion = false;
      if (!verdict.witness_class)
        verdict.witness_class = i;
    }
  }
}

inline CoverVerdict explicit_cover_check(const Ring &r, const EGraph &e) {
  const Graph classic = gamma(r);
  std::vector<ElementId> element_at;
  std::vector<std::size_t> vertex_of_element(r.order(), EGraph::npos);
  for (ElementId x = 0; x < r.order(); ++x) {
    if (e.class_of[x] != EGraph::npos) {
      vertex_of_element[x] = element_at.size();
      element_at.push_back(x);
    }
  }
  if (element_at.size() != classic.size())
    throw Error(ErrorKind::internal, "classes do not cover Z*(R)");
  const Graph cover = weighted_cover(e, class_weights(e));

  // copy k of class i  <->  k-th member of class i
  std::vector<std::size_t> image;
  for (const auto &c : e.classes)
    for (ElementId x : c.members)
      image.push_back(vertex_of_element[x]);

  CoverVerdict verdict;
  Graph mapped(classic.labels());
  for (const auto &[a, b] : cover.edges()) {
    if (!classic.adjacent(image[a], image[b]))
      verdict.is_subgraph = false;
    mapped.add_edge(image[a], image[b]);
  }

  verdict.equal = verdict.is_subgraph && mapped.same_edges(classic);
  fill_criterion(e, verdict);
  if (!verdict.equal) {
    for (const auto &[a, b] : classic.edges()) {
      if (!mapped.adjacent(a, b)) {
        verdict.missing_edge = {element_at[a], element_at[b]};
        break;
      }
    }
  }

  Graph completed = mapped;
  for (const auto &c : e.classes)
    if (c.squares_to_zero)
      for (std::size_t i = 0; i < c.members.size(); ++i)
        for (std::size_t j = i + 1; j < c.members.size(); ++j)
          completed.add_edge(vertex_of_element[c.members[i]],
                             vertex_of_element[c.members[j]]);
  verdict.cliques_complete = completed.same_edges(classic);
  return verdict;
}

// Same comparison without materializing Gamma(R): the neighbours of x in
// Gamma(R) are ann(x) minus {0, x}, recomputed for every member x and
// compared with what the cover (and the cover plus cliques) predicts.
inline CoverVerdict implicit_cover_check(const Ring &r, const EGraph &e) {
  CoverVerdict verdict;
  fill_criterion(e, verdict);
  const AnnihilatorScanner scan(r);
  std::vector<IdSet> members;
  for (const auto &c : e.classes) {
    IdSet m(r.order());
    for (ElementId x : c.members)
      m.insert(x);
    members.push_back(std::move(m));
  }
  bool equal = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    IdSet predicted(r.order());
    predicted.insert(r.zero());
    for (Vertex j : e.graph.neighbors(i))
      predicted |= members[j];
    IdSet with_clique = predicted;
    if (e.classes[i].squares_to_zero)
      with_clique |= members[i];
    for (ElementId x : e.classes[i].members) {
      const IdSet ann = scan(x);
      if (!predicted.is_subset_of(ann))
        verdict.is_subgraph = false;
      if (ann != with_clique)
        verdict.cliques_complete = false;
      IdSet exact = predicted;
      if (ann.contains(x))
        exact.insert(x);
      if (ann != exact) {
        equal = false;
        if (!verdict.missing_edge)
          if (auto y = ann.first_not_in(exact))
            verdict.missing_edge = {x, static_cast<ElementId>(*y)};
      }
    }
  }
  verdict.equal = equal && verdict.is_subgraph;
  return verdict;
}

} // namespace detail

/// Compares the class-weighted cover of Gamma_E(R) with Gamma(R) under the
/// member-to-copy correspondence, and evaluates the nilpotent-weight
/// criterion independently of that comparison.
inline CoverVerdict cover_equality_check(const Ring &r, const EGraph &e) {
  std::size_t zd = 0;
  for (const auto &c : e.classes)
    zd += c.weight();
  if (zd <= kExplicitCoverLimit)
    return detail::explicit_cover_check(r, e);
  return detail::implicit_cover_check(r, e);
}

inline CoverVerdict cover_equality_check(const Ring &r) {
  return cover_equality_check(r, gamma_e(r));
}

} // namespace zdclass
