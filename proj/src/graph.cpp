#include "ergmlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ergm {

DenseGraph::DenseGraph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
  degrees_.assign(n_, 0);
}

DenseGraph DenseGraph::complete(int n) {
  DenseGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.set_edge(i, j, true);
  }
  return g;
}

DenseGraph DenseGraph::from_edge_list(
    int n, const std::vector<std::pair<int, int>>& edges) {
  DenseGraph g(n);
  for (const auto& [u, v] : edges) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    g.set_edge(u, v, true);
  }
  return g;
}

void DenseGraph::set_edge(int i, int j, bool present) {
  if (has_edge(i, j) == present) return;
  const std::uint64_t bi = 1ull << (j & 63);
  const std::uint64_t bj = 1ull << (i & 63);
  std::uint64_t& wi = rows_[static_cast<std::size_t>(i) * words_ + (j >> 6)];
  std::uint64_t& wj = rows_[static_cast<std::size_t>(j) * words_ + (i >> 6)];
  if (present) {
    wi |= bi;
    wj |= bj;
    ++degrees_[i];
    ++degrees_[j];
  } else {
    wi &= ~bi;
    wj &= ~bj;
    --degrees_[i];
    --degrees_[j];
  }
}

long long DenseGraph::edge_count() const {
  long long twice = 0;
  for (int d : degrees_) twice += d;
  return twice / 2;
}

int DenseGraph::common_neighbors(int i, int j) const {
  const std::uint64_t* ri = row(i);
  const std::uint64_t* rj = row(j);
  int count = 0;
  for (int w = 0; w < words_; ++w) {
    count += std::popcount(ri[w] & rj[w]);
  }
  // i and j are never their own neighbors (zero diagonal), so the
  // intersection can only spuriously contain i or j via the pair's own
  // indicator, which lives in the other row; the intersection excludes it.
  return count;
}

std::string DenseGraph::to_edge_list_text() const {
  std::ostringstream out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (has_edge(i, j)) out << i << ' ' << j << '\n';
    }
  }
  return out.str();
}

DenseGraph DenseGraph::parse_edge_list_text(int n, const std::string& text) {
  DenseGraph g(n);
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::istringstream fields(line);
    int u, v;
    if (!(fields >> u >> v)) {
      throw std::invalid_argument("edge list line " +
                                  std::to_string(line_number) +
                                  " is not \"u v\"");
    }
    std::string rest;
    if (fields >> rest) {
      throw std::invalid_argument("edge list line " +
                                  std::to_string(line_number) +
                                  " has trailing content");
    }
    if (u < 0 || v < 0 || u >= n || v >= n || u >= v) {
      throw std::invalid_argument("edge list line " +
                                  std::to_string(line_number) +
                                  " needs 0 <= u < v < n");
    }
    g.set_edge(u, v, true);
  }
  return g;
}

GraphCounts count_statistics(const DenseGraph& g) {
  GraphCounts counts;
  const int n = g.n();
  for (int i = 0; i < n; ++i) {
    const long long d = g.degree(i);
    counts.edges += d;
    counts.two_stars += d * (d - 1) / 2;
  }
  counts.edges /= 2;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) {
        counts.triangles += g.common_neighbors(i, j);
      }
    }
  }
  // Each triangle is seen once per each of its three edges.
  counts.triangles /= 3;
  return counts;
}

void flip_edge(DenseGraph& g, GraphCounts& counts, int i, int j) {
  if (i == j) throw std::invalid_argument("cannot flip a diagonal pair");
  const int closed = g.common_neighbors(i, j);
  if (!g.has_edge(i, j)) {
    // Degrees before the flip exclude the pair itself.
    counts.two_stars += g.degree(i) + g.degree(j);
    counts.triangles += closed;
    counts.edges += 1;
    g.set_edge(i, j, true);
  } else {
    g.set_edge(i, j, false);
    counts.two_stars -= g.degree(i) + g.degree(j);
    counts.triangles -= closed;
    counts.edges -= 1;
  }
}

namespace {

/// Backtracking count of injective edge-preserving maps. `assigned[u]` is
/// the image of motif vertex u or -1; motif vertices are filled in index
/// order. `fixed_count` vertices are pre-assigned by the caller.
long long extend_maps(const Motif& motif, const DenseGraph& g,
                      std::vector<int>& assigned, std::vector<char>& used,
                      int next_vertex, int skip_edge_index) {
  const int v_count = motif.vertex_count();
  while (next_vertex < v_count && assigned[next_vertex] >= 0) ++next_vertex;
  if (next_vertex == v_count) return 1;

  long long total = 0;
  const int n = g.n();
  for (int w = 0; w < n; ++w) {
    if (used[w]) continue;
    if (g.degree(w) < motif.degree(next_vertex)) continue;
    bool consistent = true;
    for (int u = 0; u < v_count; ++u) {
      if (assigned[u] < 0 || !motif.has_edge(next_vertex, u)) continue;
      // The skipped motif edge (the pinned one) is exempt from the
      // edge-presence requirement.
      if (skip_edge_index >= 0) {
        const auto& [a, b] = motif.edges()[skip_edge_index];
        if ((a == next_vertex && b == u) || (a == u && b == next_vertex)) {
          continue;
        }
      }
      if (!g.has_edge(w, assigned[u])) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    assigned[next_vertex] = w;
    used[w] = 1;
    total += extend_maps(motif, g, assigned, used, next_vertex + 1,
                         skip_edge_index);
    assigned[next_vertex] = -1;
    used[w] = 0;
  }
  return total;
}

}  // namespace

long long injective_hom_count(const Motif& motif, const DenseGraph& g) {
  if (motif.vertex_count() > g.n()) return 0;
  // Closed forms for the hot motifs.
  if (motif == Motif::single_edge()) {
    return 2 * count_statistics(g).edges;
  }
  std::vector<int> assigned(motif.vertex_count(), -1);
  std::vector<char> used(g.n(), 0);
  return extend_maps(motif, g, assigned, used, 0, -1);
}

long long injective_hom_count_through_pair(const Motif& motif,
                                           const DenseGraph& g, int i, int j) {
  if (i == j) throw std::invalid_argument("pinned pair must be off-diagonal");
  if (motif.vertex_count() > g.n()) return 0;

  // Closed forms: the counts below depend only on degrees and the common
  // neighborhood, never on the pair's own indicator.
  if (motif == Motif::single_edge()) {
    return 2;
  }
  if (motif == Motif::two_star()) {
    const int di = g.degree(i) - (g.has_edge(i, j) ? 1 : 0);
    const int dj = g.degree(j) - (g.has_edge(i, j) ? 1 : 0);
    return 2LL * (di + dj);
  }
  if (motif == Motif::triangle()) {
    return 6LL * g.common_neighbors(i, j);
  }

  // General case: pin each motif edge onto {i,j} in both orientations and
  // count injective extensions, with the pinned edge exempt from the
  // presence requirement. Distinct pinnings generate disjoint map sets
  // (injectivity sends distinct motif edges to distinct pairs).
  long long total = 0;
  const int v_count = motif.vertex_count();
  for (int edge_index = 0; edge_index < motif.edge_count(); ++edge_index) {
    const auto& [a, b] = motif.edges()[edge_index];
    for (int orientation = 0; orientation < 2; ++orientation) {
      const int image_a = orientation == 0 ? i : j;
      const int image_b = orientation == 0 ? j : i;
      std::vector<int> assigned(v_count, -1);
      std::vector<char> used(g.n(), 0);
      assigned[a] = image_a;
      assigned[b] = image_b;
      used[image_a] = 1;
      used[image_b] = 1;
      // Pre-assigned endpoints must satisfy their other adjacency
      // constraints; extend_maps re-checks edges only as new vertices are
      // placed, so verify the a-b adjacency among pre-assigned pairs here.
      // The only pre-assigned pair is (a, b) itself — the pinned edge — and
      // it is exempt by construction.
      total += extend_maps(motif, g, assigned, used, 0, edge_index);
    }
  }
  return total;
}

double edge_interaction_log_weight(const Model& model, const DenseGraph& g,
                                   int i, int j) {
  double total = 0.0;
  const double n = static_cast<double>(model.n());
  const auto& terms = model.terms();
  for (std::size_t l = 1; l < terms.size(); ++l) {
    const Motif& motif = terms[l].motif;
    const double scale = std::pow(n, 2 - motif.vertex_count());
    total += terms[l].beta * scale *
             static_cast<double>(
                 injective_hom_count_through_pair(motif, g, i, j));
  }
  return total;
}

double edge_conditional_log_odds(const Model& model, const DenseGraph& g,
                                 int i, int j) {
  return 2.0 * model.edge_beta() + edge_interaction_log_weight(model, g, i, j);
}

}  // namespace ergm
