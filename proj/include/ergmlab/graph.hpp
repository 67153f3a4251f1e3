#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ergmlab/model.hpp"
#include "ergmlab/motif.hpp"

namespace ergm {

/// Dense undirected simple graph stored as packed adjacency bit rows plus a
/// degree array. Designed for the sampler's inner loop: edge flips are O(1)
/// and common-neighborhood sizes are word-parallel popcounts.
class DenseGraph {
 public:
  explicit DenseGraph(int n);

  static DenseGraph complete(int n);
  static DenseGraph from_edge_list(int n,
                                   const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  long long pair_count() const {
    return static_cast<long long>(n_) * (n_ - 1) / 2;
  }

  bool has_edge(int i, int j) const {
    return (rows_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >>
            (j & 63)) & 1ull;
  }
  /// Sets the indicator of pair {i,j}; keeps degrees consistent. No-op when
  /// the indicator already has the requested value.
  void set_edge(int i, int j, bool present);
  int degree(int i) const { return degrees_[i]; }
  long long edge_count() const;

  /// |N(i) ∩ N(j)|: the number of common neighbors (triangles closed by the
  /// pair). Independent of the pair's own indicator.
  int common_neighbors(int i, int j) const;

  const std::uint64_t* row(int i) const {
    return rows_.data() + static_cast<std::size_t>(i) * words_;
  }
  int words_per_row() const { return words_; }

  /// Edge-list text: one "u v" per line, 0-indexed, u < v, sorted.
  std::string to_edge_list_text() const;
  /// Parses the edge-list text format. Throws std::invalid_argument on
  /// malformed lines or out-of-range vertices.
  static DenseGraph parse_edge_list_text(int n, const std::string& text);

  bool operator==(const DenseGraph& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
  }

 private:
  int n_;
  int words_;
  std::vector<std::uint64_t> rows_;
  std::vector<int> degrees_;
};

/// Exact edge / two-star / triangle counts of a graph state.
struct GraphCounts {
  long long edges = 0;
  long long two_stars = 0;
  long long triangles = 0;

  bool operator==(const GraphCounts&) const = default;
};

/// From-scratch recount: edges by degree sum, two-stars as
/// sum_i C(deg(i), 2), triangles by row-intersection popcounts.
GraphCounts count_statistics(const DenseGraph& g);

/// Toggles pair {i,j} and updates counts incrementally:
/// adding the edge changes two-stars by deg(i)+deg(j) (degrees before the
/// flip, the pair itself excluded) and triangles by |N(i) ∩ N(j)|; removal
/// is the exact inverse. O(n/64) per flip.
void flip_edge(DenseGraph& g, GraphCounts& counts, int i, int j);

/// Number of injective edge-preserving maps from the motif's vertices into
/// g. (Equals the number of distinct copies of the motif times its
/// automorphism count. For the single edge this is twice the edge count; for
/// the triangle, six times the triangle count.)
long long injective_hom_count(const Motif& motif, const DenseGraph& g);

/// Number of injective edge-preserving maps that place some motif edge onto
/// the pair {i,j}. All other motif edges must land on present edges; the
/// pair's own indicator is ignored, so the count is unchanged by flipping
/// {i,j}. Closed forms in degrees / common neighborhoods are used for the
/// edge, two-star, and triangle motifs; anything else falls back to pinned
/// backtracking.
long long injective_hom_count_through_pair(const Motif& motif,
                                           const DenseGraph& g, int i, int j);

/// Interaction part of the conditional log-odds of pair {i,j}: the sum over
/// non-edge terms of beta_l * n^{2 - v_l} * (pinned map count). This equals
/// the Hamiltonian difference between the graph with the pair present and
/// absent, restricted to non-edge terms; it is what edge-count-preserving
/// moves pay per flip.
double edge_interaction_log_weight(const Model& model, const DenseGraph& g,
                                   int i, int j);

/// Full conditional log-odds of pair {i,j} given the rest of the graph:
/// 2 * beta_1 + edge_interaction_log_weight. The single-step dynamics set
/// the pair to present with probability sigmoid of this value.
double edge_conditional_log_odds(const Model& model, const DenseGraph& g,
                                 int i, int j);

}  // namespace ergm
