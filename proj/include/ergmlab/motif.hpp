#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ergm {

/// A small simple graph used as a model term (an interaction pattern).
///
/// Invariants enforced at construction:
///   - no self-loops, no multi-edges,
///   - no isolated vertices (every vertex in [0, vertex_count) touches an edge),
///   - at most 8 vertices (the automorphism search is a brute-force over
///     vertex permutations and the rest of the library only needs tiny
///     patterns).
///
/// Edge/two-star/triangle/automorphism counts are computed once and cached;
/// they are consumed by every closed-form moment expression.
class Motif {
 public:
  /// Builds a motif from an explicit edge list on vertices 0..vertex_count-1.
  /// Edges are stored normalized (u < v) and sorted.
  /// Throws std::invalid_argument on invariant violations and
  /// UnsupportedSizeError for vertex_count > 8.
  static Motif from_edges(int vertex_count,
                          std::vector<std::pair<int, int>> edges);

  /// K2: a single edge.
  static Motif single_edge();
  /// Path on three vertices (two edges sharing a center).
  static Motif two_star();
  /// K3.
  static Motif triangle();
  /// Complete graph on k vertices (k <= 8).
  static Motif complete(int k);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Number of two-stars contained in the motif: sum over vertices of
  /// C(degree, 2).
  long long two_star_count() const { return two_star_count_; }
  /// Number of triangles contained in the motif.
  long long triangle_count() const { return triangle_count_; }
  /// Number of vertex permutations mapping the edge set onto itself.
  long long automorphism_count() const { return automorphism_count_; }

  int degree(int v) const { return degrees_[v]; }
  /// Adjacency row as a bit mask over the (at most 8) motif vertices.
  std::uint32_t adjacency_mask(int v) const { return adjacency_[v]; }
  bool has_edge(int u, int v) const {
    return (adjacency_[u] >> v) & 1u;
  }

  /// Copy with one edge removed; vertices are retained even if isolated
  /// (so two-star/triangle recounts see the same vertex set). Because the
  /// result may contain isolated vertices it is returned as raw counts
  /// rather than a Motif.
  struct ReducedCounts {
    long long two_stars = 0;
    long long triangles = 0;
  };
  ReducedCounts counts_without_edge(int edge_index) const;

  bool operator==(const Motif& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

  /// Short human-readable tag: "edge", "two_star", "triangle", or
  /// "motif(v=…,e=…)" for anything else.
  std::string describe() const;

 private:
  Motif() = default;

  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> degrees_;
  std::vector<std::uint32_t> adjacency_;
  long long two_star_count_ = 0;
  long long triangle_count_ = 0;
  long long automorphism_count_ = 1;
};

}  // namespace ergm
