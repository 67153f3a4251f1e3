#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ergmlab/graph.hpp"
#include "ergmlab/model.hpp"
#include "ergmlab/rng.hpp"

namespace ergm {

/// How a chain is initialized.
enum class InitialState {
  kEmpty,
  kComplete,
  kIid,  ///< every pair present independently with probability initial_density
};

/// Run-length and reproducibility settings for one chain.
/// One sweep is pair_count proposed updates.
struct ChainConfig {
  std::uint64_t seed = 0;
  int burn_in_sweeps = 200;
  long long samples = 1000;
  int thinning_sweeps = 5;
  InitialState initial_state = InitialState::kIid;
  double initial_density = 0.5;
};

/// One emitted observation of the chain state.
struct SampleRecord {
  long long edges = 0;
  long long two_stars = 0;
  long long triangles = 0;
  long long sweep_index = 0;

  bool operator==(const SampleRecord&) const = default;
};

/// Bidirectional pair-id bookkeeping: dense ids for the n(n-1)/2 unordered
/// pairs plus present/absent membership arrays maintained with swap-remove,
/// so proposing a uniformly random present (or absent) pair is O(1).
class PairIndex {
 public:
  explicit PairIndex(const DenseGraph& g);

  static std::uint32_t pair_id(int n, int i, int j);
  static std::pair<int, int> pair_of(int n, std::uint32_t id);

  long long present_count() const {
    return static_cast<long long>(present_.size());
  }
  long long absent_count() const {
    return static_cast<long long>(absent_.size());
  }
  std::uint32_t pick_present(Rng& rng) const {
    return present_[rng.uniform_below(present_.size())];
  }
  std::uint32_t pick_absent(Rng& rng) const {
    return absent_[rng.uniform_below(absent_.size())];
  }
  bool is_present(std::uint32_t id) const { return present_flag_[id]; }

  /// Moves a pair between the membership arrays. Must mirror every edge
  /// flip applied to the graph it was built from.
  void mark(std::uint32_t id, bool present);

 private:
  std::vector<std::uint32_t> present_;
  std::vector<std::uint32_t> absent_;
  std::vector<std::uint32_t> slot_;  // position within its membership array
  std::vector<std::uint8_t> present_flag_;
};

/// One single-pair heat-bath update: a uniformly random pair is resampled
/// from its conditional law given the rest of the graph (present with
/// probability sigmoid(edge_conditional_log_odds)). Counts are maintained
/// incrementally. The chain's stationary law is the model's Gibbs measure.
void glauber_step(const Model& model, DenseGraph& g, GraphCounts& counts,
                  Rng& rng);

/// Outcome of one edge-count-preserving proposal.
enum class SwapOutcome {
  kAccepted,
  kRejected,
  kDegenerate,  ///< graph empty or complete: no move exists, flagged no-op
};

/// One Metropolis move on the fixed-edge-count slice: a uniformly random
/// present pair f and absent pair h are proposed to swap; the move is
/// accepted with min(1, exp(interaction delta)), where the delta sums the
/// non-edge terms only (the edge term is constant on the slice and cancels).
/// The edge count is invariant. The stationary law is the Gibbs measure
/// conditioned on the current edge count.
SwapOutcome edge_swap_step(const Model& model, DenseGraph& g,
                           GraphCounts& counts, PairIndex& index, Rng& rng);

/// Full chain output.
struct ChainResult {
  std::vector<SampleRecord> records;
  long long accepted_swaps = 0;    ///< conditional chains only
  long long degenerate_events = 0; ///< flagged no-op proposals
  long long realized_edge_count = -1;  ///< conditional chains: the slice k
};

/// Runs one chain: initializes per config (a conditional run initializes to
/// a uniformly random graph with exactly k edges), burns in, then emits one
/// record every thinning_sweeps sweeps. Deterministic given (model, config).
/// condition_on_edges outside [0, pair_count] throws std::invalid_argument.
ChainResult run_chain(const Model& model, const ChainConfig& config,
                      std::optional<long long> condition_on_edges = std::nullopt);

/// Unnormalized log-probability of a graph under the model:
/// 2*beta_1*edges + sum_{l>=2} beta_l n^{2-v_l} (injective hom count).
double graph_log_weight(const Model& model, const DenseGraph& g);

/// Exact law over all graphs on n vertices (n <= 6), indexed by pair
/// bitmask: bit PairIndex::pair_id(n, i, j) of the mask is the indicator of
/// pair {i,j}.
struct ExactDistribution {
  int n = 0;
  std::vector<double> probability;  // size 2^pair_count, sums to 1

  static DenseGraph graph_from_mask(int n, std::uint64_t mask);
  /// Expectation of an arbitrary mask functional under this law.
  double expectation(const std::function<double(std::uint64_t)>& f) const;
  /// Marginal law of the edge count (index = number of edges).
  std::vector<double> edge_count_distribution() const;
};

/// Normalizes exp(graph_log_weight) by direct summation over all 2^N graphs.
/// Throws UnsupportedSizeError for n > 6.
ExactDistribution exact_distribution(const Model& model);

/// Same law conditioned on exactly k edges: off-slice masks get probability
/// zero and the slice sums to 1. Independent of the edge coupling (which is
/// constant on the slice). Throws std::invalid_argument for invalid k.
ExactDistribution exact_conditional(const Model& model, long long k);

/// Long-run estimate of the mean edge density E(edges)/pair_count from an
/// unconditional chain, with a batch-means standard error.
struct DensityEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  long long samples = 0;
};
DensityEstimate estimate_mean_edge_density(const Model& model,
                                           const ChainConfig& config);

}  // namespace ergm
