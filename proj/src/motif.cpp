#include "ergmlab/motif.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "ergmlab/errors.hpp"

namespace ergm {
namespace {

long long two_stars_from_degrees(const std::vector<int>& degrees) {
  long long s = 0;
  for (int d : degrees) s += static_cast<long long>(d) * (d - 1) / 2;
  return s;
}

long long triangles_from_masks(const std::vector<std::uint32_t>& adjacency) {
  // Each triangle {u < v < w} is found once at its lexicographically first
  // edge {u, v} by intersecting neighborhoods above v.
  const int v_count = static_cast<int>(adjacency.size());
  long long t = 0;
  for (int u = 0; u < v_count; ++u) {
    for (int v = u + 1; v < v_count; ++v) {
      if (!((adjacency[u] >> v) & 1u)) continue;
      const std::uint32_t common = adjacency[u] & adjacency[v];
      t += std::popcount(common >> (v + 1));
    }
  }
  return t;
}

}  // namespace

Motif Motif::from_edges(int vertex_count, std::vector<std::pair<int, int>> edges) {
  if (vertex_count < 2) {
    throw std::invalid_argument("motif needs at least 2 vertices");
  }
  if (vertex_count > 8) {
    throw UnsupportedSizeError(
        "motif vertex count above 8 is not supported (automorphism search "
        "is brute-force)");
  }
  if (edges.empty()) {
    throw std::invalid_argument("motif needs at least one edge");
  }
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("motif has a self-loop");
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("motif edge endpoint out of range");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("motif has a repeated edge");
  }

  Motif m;
  m.vertex_count_ = vertex_count;
  m.edges_ = std::move(edges);
  m.degrees_.assign(vertex_count, 0);
  m.adjacency_.assign(vertex_count, 0);
  for (const auto& [u, v] : m.edges_) {
    ++m.degrees_[u];
    ++m.degrees_[v];
    m.adjacency_[u] |= 1u << v;
    m.adjacency_[v] |= 1u << u;
  }
  for (int v = 0; v < vertex_count; ++v) {
    if (m.degrees_[v] == 0) {
      throw std::invalid_argument("motif has an isolated vertex");
    }
  }
  m.two_star_count_ = two_stars_from_degrees(m.degrees_);
  m.triangle_count_ = triangles_from_masks(m.adjacency_);

  // Automorphisms: brute-force over vertex permutations (v <= 8, so at most
  // 8! = 40320 candidates).
  std::vector<int> perm(vertex_count);
  std::iota(perm.begin(), perm.end(), 0);
  long long aut = 0;
  do {
    bool preserves = true;
    for (const auto& [u, v] : m.edges_) {
      if (!((m.adjacency_[perm[u]] >> perm[v]) & 1u)) {
        preserves = false;
        break;
      }
    }
    // Edge count is preserved by any bijection of an edge set into itself,
    // so mapping edges to edges injectively is enough.
    if (preserves) ++aut;
  } while (std::next_permutation(perm.begin(), perm.end()));
  m.automorphism_count_ = aut;
  return m;
}

Motif Motif::single_edge() { return from_edges(2, {{0, 1}}); }

Motif Motif::two_star() { return from_edges(3, {{0, 1}, {1, 2}}); }

Motif Motif::triangle() { return from_edges(3, {{0, 1}, {0, 2}, {1, 2}}); }

Motif Motif::complete(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  }
  return from_edges(k, std::move(edges));
}

Motif::ReducedCounts Motif::counts_without_edge(int edge_index) const {
  if (edge_index < 0 || edge_index >= edge_count()) {
    throw std::invalid_argument("edge index out of range");
  }
  const auto [a, b] = edges_[edge_index];
  std::vector<std::uint32_t> adjacency = adjacency_;
  adjacency[a] &= ~(1u << b);
  adjacency[b] &= ~(1u << a);
  std::vector<int> degrees = degrees_;
  --degrees[a];
  --degrees[b];
  return ReducedCounts{two_stars_from_degrees(degrees),
                       triangles_from_masks(adjacency)};
}

std::string Motif::describe() const {
  if (*this == single_edge()) return "edge";
  if (*this == two_star()) return "two_star";
  if (*this == triangle()) return "triangle";
  return "motif(v=" + std::to_string(vertex_count_) +
         ",e=" + std::to_string(edge_count()) + ")";
}

}  // namespace ergm
