#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "ergmlab/errors.hpp"
#include "ergmlab/motif.hpp"

using ergm::Motif;

namespace {

// Independent two-star recount: sum over vertices of C(deg, 2), with degrees
// tallied directly from the edge list.
long long two_stars_from_edges(int v,
                               const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> deg(v, 0);
  for (auto [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  long long s = 0;
  for (int d : deg) s += static_cast<long long>(d) * (d - 1) / 2;
  return s;
}

// Independent triangle recount over all vertex triples.
long long triangles_from_edges(int v,
                               const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<bool>> adj(v, std::vector<bool>(v, false));
  for (auto [a, b] : edges) adj[a][b] = adj[b][a] = true;
  long long t = 0;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      for (int k = j + 1; k < v; ++k)
        if (adj[i][j] && adj[i][k] && adj[j][k]) ++t;
  return t;
}

}  // namespace

TEST_CASE("canonical motifs carry the expected cached counts") {
  const Motif edge = Motif::single_edge();
  CHECK(edge.vertex_count() == 2);
  CHECK(edge.edge_count() == 1);
  CHECK(edge.two_star_count() == 0);
  CHECK(edge.triangle_count() == 0);
  CHECK(edge.automorphism_count() == 2);

  const Motif star = Motif::two_star();
  CHECK(star.vertex_count() == 3);
  CHECK(star.edge_count() == 2);
  CHECK(star.two_star_count() == 1);
  CHECK(star.triangle_count() == 0);
  // the two leaves can be swapped, the center is fixed
  CHECK(star.automorphism_count() == 2);

  const Motif tri = Motif::triangle();
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);
  CHECK(tri.two_star_count() == 3);
  CHECK(tri.triangle_count() == 1);
  CHECK(tri.automorphism_count() == 6);

  const Motif k4 = Motif::complete(4);
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.two_star_count() == 12);  // 4 vertices, C(3,2) each
  CHECK(k4.triangle_count() == 4);
  CHECK(k4.automorphism_count() == 24);

  const Motif k5 = Motif::complete(5);
  CHECK(k5.edge_count() == 10);
  CHECK(k5.two_star_count() == 30);
  CHECK(k5.triangle_count() == 10);
  CHECK(k5.automorphism_count() == 120);
}

TEST_CASE("hand-built motifs match independent recounts") {
  struct Case {
    int v;
    std::vector<std::pair<int, int>> edges;
    long long aut;
  };
  // automorphism counts worked out by hand for each shape
  const std::vector<Case> cases = {
      {4, {{0, 1}, {1, 2}, {2, 3}}, 2},                  // path on 4
      {4, {{0, 1}, {0, 2}, {0, 3}}, 6},                  // 3-star
      {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 8},          // 4-cycle
      {5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, 10}, // 5-cycle
      {5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}, 12},  // K(2,3)
      {4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}, 2},          // triangle + pendant
  };
  for (const Case& c : cases) {
    CAPTURE(c.v);
    CAPTURE(c.edges.size());
    const Motif m = Motif::from_edges(c.v, c.edges);
    CHECK(m.two_star_count() == two_stars_from_edges(c.v, c.edges));
    CHECK(m.triangle_count() == triangles_from_edges(c.v, c.edges));
    CHECK(m.automorphism_count() == c.aut);
  }
}

TEST_CASE("construction rejects malformed patterns") {
  CHECK_THROWS_AS(Motif::from_edges(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Motif::from_edges(3, {{0, 1}, {1, 0}}),
                  std::invalid_argument);  // duplicate edge, both orders
  CHECK_THROWS_AS(Motif::from_edges(3, {{0, 1}}),
                  std::invalid_argument);  // vertex 2 isolated
  CHECK_THROWS_AS(Motif::from_edges(2, {{0, 2}}),
                  std::invalid_argument);  // endpoint out of range
  CHECK_THROWS_AS(Motif::from_edges(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(Motif::complete(9), ergm::UnsupportedSizeError);
}

TEST_CASE("edges are normalized and adjacency accessors agree") {
  const Motif m = Motif::from_edges(3, {{2, 1}, {1, 0}});
  REQUIRE(m.edge_count() == 2);
  for (auto [a, b] : m.edges()) CHECK(a < b);
  CHECK(m.has_edge(0, 1));
  CHECK(m.has_edge(1, 2));
  CHECK(!m.has_edge(0, 2));
  CHECK(m.degree(1) == 2);
  CHECK(m.degree(0) == 1);
  CHECK(m == Motif::two_star());
}

TEST_CASE("deleting one edge recounts the remaining two-stars and triangles") {
  const Motif tri = Motif::triangle();
  for (int j = 0; j < 3; ++j) {
    const Motif::ReducedCounts rc = tri.counts_without_edge(j);
    CHECK(rc.two_stars == 1);  // a path remains
    CHECK(rc.triangles == 0);
  }

  const Motif star = Motif::two_star();
  for (int j = 0; j < 2; ++j) {
    const Motif::ReducedCounts rc = star.counts_without_edge(j);
    CHECK(rc.two_stars == 0);  // a bare edge remains
    CHECK(rc.triangles == 0);
  }

  const Motif k4 = Motif::complete(4);
  for (int j = 0; j < 6; ++j) {
    const Motif::ReducedCounts rc = k4.counts_without_edge(j);
    // K4 minus an edge: degrees (3,3,2,2) -> 3+3+1+1 two-stars; the two
    // triangles through the removed edge are gone, two remain
    CHECK(rc.two_stars == 8);
    CHECK(rc.triangles == 2);
  }

  // brute-force cross-check over every edge of a less symmetric pattern
  const std::vector<std::pair<int, int>> edges = {
      {0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {2, 4}};
  const Motif m = Motif::from_edges(5, edges);
  for (int j = 0; j < m.edge_count(); ++j) {
    std::vector<std::pair<int, int>> rest = m.edges();
    rest.erase(rest.begin() + j);
    const Motif::ReducedCounts rc = m.counts_without_edge(j);
    CHECK(rc.two_stars == two_stars_from_edges(5, rest));
    CHECK(rc.triangles == triangles_from_edges(5, rest));
  }
}

TEST_CASE("describe names the common patterns") {
  CHECK(Motif::single_edge().describe() == "edge");
  CHECK(Motif::two_star().describe() == "two_star");
  CHECK(Motif::triangle().describe() == "triangle");
  CHECK(Motif::complete(4).describe() == "motif(v=4,e=6)");
}
