// Properties checked over generated families rather than single examples.
#include "zdclass/zdclass.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace zdclass;

namespace {

Graph random_graph(std::mt19937_64 &rng, std::size_t n, double p) {
  Graph g(n);
  std::bernoulli_distribution edge(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (edge(rng))
        g.add_edge(u, v);
  return g;
}

std::vector<Vertex> random_permutation(std::mt19937_64 &rng, std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Complete multipartite iff non-adjacency is an equivalence relation.
bool multipartite_brute(const Graph &g) {
  for (Vertex a = 0; a < g.size(); ++a)
    for (Vertex b = 0; b < g.size(); ++b)
      for (Vertex c = 0; c < g.size(); ++c)
        if (a != b && b != c && a != c && !g.adjacent(a, b) && !g.adjacent(b, c) &&
            g.adjacent(a, c))
          return false;
  return true;
}

} // namespace

TEST(Property, CanonicalLabelIsRelabelInvariant) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Graph g = random_graph(rng, n, 0.4);
    const Graph h = g.permuted(random_permutation(rng, n));
    EXPECT_EQ(canonical_form(g).hex(), canonical_form(h).hex());
  }
}

TEST(Property, CanonicalLabelSeparatesNonIsomorphicGraphs) {
  // Brute-force permutation search on 6 vertices.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph a = random_graph(rng, 6, 0.5);
    const Graph b = random_graph(rng, 6, 0.5);
    std::vector<Vertex> p(6);
    std::iota(p.begin(), p.end(), 0);
    bool iso = false;
    do {
      iso = a.permuted(p).same_edges(b);
    } while (!iso && std::next_permutation(p.begin(), p.end()));
    EXPECT_EQ(is_isomorphic(a, b), iso);
  }
}

TEST(Property, MultipartiteMatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    Graph g = trial % 3 == 0
                  ? complete_multipartite_graph({1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 2})
                  : random_graph(rng, n, 0.7);
    EXPECT_EQ(multipartite_decomposition(g).has_value(), multipartite_brute(g));
  }
}

TEST(Property, ReduceIsIdempotent) {
  const auto spec = make_quotient_spec(3, {"x", "y"}, {"x*y", "x^3", "y^3", "x^2-y^2"});
  const RewriteSystem rules(spec);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Poly p(3, 2);
    for (int t = 0; t < 4; ++t)
      p.add_term(Monomial({static_cast<std::uint32_t>(rng() % 5),
                           static_cast<std::uint32_t>(rng() % 5)}),
                 rng() % 3);
    const Poly once = rules.reduce(p);
    EXPECT_EQ(rules.reduce(once), once);
  }
}

TEST(Property, ParseRenderRoundTrip) {
  std::mt19937_64 rng(9);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t m = 2 + rng() % 9;
    Poly p(m, 3);
    for (int t = 0; t < 5; ++t)
      p.add_term(Monomial({static_cast<std::uint32_t>(rng() % 4),
                           static_cast<std::uint32_t>(rng() % 3),
                           static_cast<std::uint32_t>(rng() % 3)}),
                 rng() % m);
    EXPECT_EQ(parse_poly(render(p, vars), vars, m), p);
  }
  for (const char *text : {"Z12", "product(Z4,Z4)", "product(Z2,product(Z3,Z4))",
                           "quot(Z3; x,y; xy, x^3, y^3, 2y^2+x^2)"}) {
    const RingSpec s = parse_ring_spec(text);
    EXPECT_EQ(parse_ring_spec(render(s)), s) << text;
  }
}

TEST(Property, QuotientByVariableIsZm) {
  for (std::uint64_t m : {2, 6, 9, 12}) {
    const Ring q = quotient_ring(make_quotient_spec(m, {"x"}, {"x"}));
    EXPECT_TRUE(is_isomorphic(gamma_e(q).graph, gamma_e(mod_ring(m)).graph)) << m;
    ASSERT_EQ(q.order(), m);
    for (ElementId a = 0; a < m; ++a)
      for (ElementId b = 0; b < m; ++b)
        EXPECT_EQ(q.element_name(q.mul(a, b)), std::to_string((a * b) % m));
  }
}

TEST(Property, PipelineMatchesDivisorOracle) {
  for (std::uint64_t n = 2; n <= 512; ++n) {
    const Graph oracle = zn_oracle(n);
    const EGraph e = gamma_e(mod_ring(static_cast<std::int64_t>(n)));
    ASSERT_EQ(e.graph.labels(), oracle.labels()) << n;
    ASSERT_TRUE(e.graph.same_edges(oracle)) << n;
  }
}

TEST(Property, ClassesPartitionZeroDivisors) {
  for (const char *spec : {"Z72", "product(Z6,Z4)", "quot(Z2; x,y,z; x^2, y^2, z^2)"}) {
    const Ring r = build_ring(spec);
    const EGraph e = gamma_e(r);
    const auto zd = zero_divisor_mask(r);
    std::size_t covered = 0;
    for (const auto &c : e.classes) {
      covered += c.weight();
      for (ElementId m : c.members) {
        EXPECT_TRUE(zd[m]);
        EXPECT_TRUE(annihilator(r, m).members == c.annihilator);
      }
    }
    EXPECT_EQ(covered, static_cast<std::size_t>(std::count(zd.begin() + 1, zd.end(), true)));
  }
}

TEST(Property, DegreeMonotoneUnderContainment) {
  for (const char *spec : {"Z360", "product(Z8,Z9)", "quot(Z2; x,y,z; x^2, y^2, z^3)"}) {
    const EGraph e = gamma_e(build_ring(spec));
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = 0; b < e.size(); ++b)
        if (e.classes[a].annihilator.is_proper_subset_of(e.classes[b].annihilator)) {
          EXPECT_LE(e.degree(a), e.degree(b)) << spec;
        }
  }
}
