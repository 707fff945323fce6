#include <doctest.h>

#include <set>
#include <vector>

#include "graphonlab/graph.hpp"

using namespace graphonlab;

TEST_CASE("automorphism counts of small graphs") {
  CHECK(automorphism_count(Graph::triangle()) == 6);
  CHECK(automorphism_count(Graph::path(3)) == 2);
  CHECK(automorphism_count(Graph::cycle(4)) == 8);
  CHECK(automorphism_count(Graph::complete(4)) == 24);
  CHECK(automorphism_count(Graph::empty(4)) == 24);
  CHECK(automorphism_count(Graph::cherry()) == 2);
}

TEST_CASE("rooted automorphisms fix every root") {
  // rooted edge: the non-root cannot move either
  CHECK(automorphism_count(RootedGraph::rooted_edge()) == 1);
  // star K_{1,3} rooted at the center: leaves permute freely
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(automorphism_count(RootedGraph(star, {0})) == 6);
  CHECK(automorphism_count(RootedGraph(star, {0, 1})) == 2);
}

TEST_CASE("automorphism count divides order factorial") {
  std::vector<Graph> corpus = {Graph::triangle(),   Graph::path(4), Graph::cycle(5),
                               Graph::complete(5),  Graph::empty(3), Graph::cherry(),
                               Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}})};
  for (const auto& g : corpus) {
    CHECK(factorial(g.order()) % automorphism_count(g) == 0);
  }
}

TEST_CASE("automorphism cutoff") {
  CHECK_THROWS_AS(automorphism_count(Graph::empty(9)), unsupported_error);
  CHECK_THROWS_AS(are_isomorphic(Graph::empty(9), Graph::empty(9)), unsupported_error);
}

TEST_CASE("induced density in finite graphs") {
  CHECK(induced_density_finite(Graph::single_edge(), Graph::triangle()) == Rational(1, 1));
  CHECK(induced_density_finite(Graph::single_edge(), Graph::path(3)) == Rational(2, 3));
  CHECK(induced_density_finite(Graph::complete(4), Graph::triangle()) == Rational(0, 1));
  // cherries in the path on 4 vertices: {0,1,2} and {1,2,3} out of 4 triples
  CHECK(induced_density_finite(Graph::cherry(), Graph::path(4)) == Rational(1, 2));
}

TEST_CASE("induced densities over all isomorphism classes sum to one") {
  // all 4 isomorphism classes on 3 vertices
  std::vector<Graph> classes = {Graph::empty(3), Graph(3, {{0, 1}}), Graph::cherry(), Graph::triangle()};
  Graph host(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {1, 4}});
  std::vector<Rational> densities;
  for (const auto& h : classes) densities.push_back(induced_density_finite(h, host));
  CHECK(rational_sum(densities) == Rational(1, 1));
}

TEST_CASE("isomorphism on small graphs") {
  CHECK(are_isomorphic(Graph::triangle(), Graph::cycle(3)));
  CHECK(are_isomorphic(Graph::cherry(), Graph::path(3)));
  CHECK_FALSE(are_isomorphic(Graph::path(4), Graph(4, {{0, 1}, {0, 2}, {0, 3}})));
  CHECK_FALSE(are_isomorphic(Graph::path(3), Graph::triangle()));
}

TEST_CASE("isomorphism is an equivalence on a generated corpus") {
  std::vector<Graph> corpus;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j, ++bit) {
        if ((mask >> bit) & 1) edges.emplace_back(i, j);
      }
    }
    corpus.emplace_back(4, edges);
  }
  for (std::size_t a = 0; a < corpus.size(); a += 7) {
    CHECK(are_isomorphic(corpus[a], corpus[a]));  // reflexive
    for (std::size_t b = 0; b < corpus.size(); b += 5) {
      bool ab = are_isomorphic(corpus[a], corpus[b]);
      CHECK(ab == are_isomorphic(corpus[b], corpus[a]));  // symmetric
      if (!ab) continue;
      for (std::size_t c = 0; c < corpus.size(); c += 11) {
        if (are_isomorphic(corpus[b], corpus[c])) CHECK(are_isomorphic(corpus[a], corpus[c]));
      }
    }
  }
}

TEST_CASE("rooted isomorphism maps i-th root to i-th root") {
  Graph edge = Graph::single_edge();
  CHECK(are_isomorphic(RootedGraph(edge, {0}), RootedGraph(edge, {1})));
  Graph p3 = Graph::path(3);
  CHECK_FALSE(are_isomorphic(RootedGraph(p3, {1}), RootedGraph(p3, {0})));  // center vs leaf
  CHECK(are_isomorphic(RootedGraph(p3, {0}), RootedGraph(p3, {2})));
}

TEST_CASE("rooted compatibility compares root-induced subgraphs") {
  Graph p3 = Graph::path(3);
  Graph k3 = Graph::triangle();
  CHECK(rooted_compatible(RootedGraph(p3, {0}), RootedGraph(k3, {2})));
  // roots induce an edge vs a non-edge
  CHECK_FALSE(rooted_compatible(RootedGraph(p3, {0, 1}), RootedGraph(p3, {0, 2})));
  RootedGraph same(p3, {0, 1});
  CHECK(rooted_compatible(same, same));
}

TEST_CASE("partition spec validation") {
  CHECK_THROWS_AS(PartitionSpec({0.5, 0.6}, {0.1, 0.2}), error);       // sizes exceed 1
  CHECK_THROWS_AS(PartitionSpec({0.5, 0.5}, {0.3, 0.3}), error);       // repeated degree
  CHECK_THROWS_AS(PartitionSpec({0.5, 0.5}, {0.3, 1.2}), error);       // degree outside [0,1]
  PartitionSpec spec({0.25, 0.75}, {0.2, 0.6});
  CHECK(spec.part_of(0.1) == 0);
  CHECK(spec.part_of(0.9) == 1);
  CHECK(spec.part_start(1) == doctest::Approx(0.25));
}

TEST_CASE("graph construction invariants") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), error);   // self-loop
  CHECK_THROWS_AS(Graph(3, {{0, 5}}), error);   // out of range
  CHECK_THROWS_AS(RootedGraph(Graph(3), {0, 0}), error);
  CHECK_THROWS_AS(DecoratedGraph(Graph(3), {0, 1}), error);  // one part label per vertex
  Graph g(4, {{0, 1}, {1, 2}});
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
}
