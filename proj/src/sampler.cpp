#include "ergmlab/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ergmlab/errors.hpp"
#include "ergmlab/stats.hpp"

namespace ergm {
namespace {

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double ex = std::exp(x);
  return ex / (1.0 + ex);
}

/// Per-chain cache of the interaction terms: couplings pre-scaled by
/// n^{2-v_l} and hot motifs dispatched without re-deriving their shape on
/// every proposal.
class FlipWeightEvaluator {
 public:
  explicit FlipWeightEvaluator(const Model& model)
      : edge_log_odds_(2.0 * model.edge_beta()) {
    const auto& terms = model.terms();
    for (std::size_t l = 1; l < terms.size(); ++l) {
      CachedTerm cached;
      cached.motif = &terms[l].motif;
      cached.scaled_beta =
          terms[l].beta *
          std::pow(static_cast<double>(model.n()),
                   2 - terms[l].motif.vertex_count());
      if (*cached.motif == Motif::two_star()) {
        cached.kind = Kind::kTwoStar;
      } else if (*cached.motif == Motif::triangle()) {
        cached.kind = Kind::kTriangle;
      } else if (*cached.motif == Motif::single_edge()) {
        // A duplicate edge term is rejected by Model, but keep the dispatch
        // total just in case.
        cached.kind = Kind::kEdge;
      } else {
        cached.kind = Kind::kGeneral;
      }
      terms_.push_back(cached);
    }
  }

  /// Interaction part of the conditional log-odds of pair {i,j}.
  double interaction(const DenseGraph& g, int i, int j) const {
    double total = 0.0;
    for (const CachedTerm& term : terms_) {
      switch (term.kind) {
        case Kind::kEdge:
          total += term.scaled_beta * 2.0;
          break;
        case Kind::kTwoStar: {
          const int correction = g.has_edge(i, j) ? 2 : 0;
          total += term.scaled_beta *
                   (2.0 * (g.degree(i) + g.degree(j) - correction));
          break;
        }
        case Kind::kTriangle:
          total += term.scaled_beta * (6.0 * g.common_neighbors(i, j));
          break;
        case Kind::kGeneral:
          total += term.scaled_beta *
                   static_cast<double>(injective_hom_count_through_pair(
                       *term.motif, g, i, j));
          break;
      }
    }
    return total;
  }

  double log_odds(const DenseGraph& g, int i, int j) const {
    return edge_log_odds_ + interaction(g, i, j);
  }

 private:
  enum class Kind { kEdge, kTwoStar, kTriangle, kGeneral };
  struct CachedTerm {
    double scaled_beta = 0.0;
    Kind kind = Kind::kGeneral;
    const Motif* motif = nullptr;
  };
  double edge_log_odds_;
  std::vector<CachedTerm> terms_;
};

/// Uniformly random unordered pair via rejection on ordered draws.
std::pair<int, int> pick_pair(int n, Rng& rng) {
  int i = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
  int j;
  do {
    j = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
  } while (j == i);
  if (i > j) std::swap(i, j);
  return {i, j};
}

void glauber_step_impl(const FlipWeightEvaluator& evaluator, DenseGraph& g,
                       GraphCounts& counts, Rng& rng) {
  const auto [i, j] = pick_pair(g.n(), rng);
  const double p_present = sigmoid(evaluator.log_odds(g, i, j));
  const bool present = rng.uniform01() < p_present;
  if (present != g.has_edge(i, j)) {
    flip_edge(g, counts, i, j);
  }
}

SwapOutcome edge_swap_step_impl(const FlipWeightEvaluator& evaluator,
                                DenseGraph& g, GraphCounts& counts,
                                PairIndex& index, Rng& rng) {
  if (index.present_count() == 0 || index.absent_count() == 0) {
    return SwapOutcome::kDegenerate;
  }
  const std::uint32_t from_id = index.pick_present(rng);
  const std::uint32_t to_id = index.pick_absent(rng);
  const auto [fi, fj] = PairIndex::pair_of(g.n(), from_id);
  const auto [ti, tj] = PairIndex::pair_of(g.n(), to_id);

  // Interaction delta of moving the edge: pay for removing {fi,fj} at the
  // current state, then for adding {ti,tj} at the intermediate state.
  const double removal = evaluator.interaction(g, fi, fj);
  flip_edge(g, counts, fi, fj);
  const double addition = evaluator.interaction(g, ti, tj);
  const double delta = addition - removal;

  const bool accept =
      delta >= 0.0 || rng.uniform01() < std::exp(delta);
  if (accept) {
    flip_edge(g, counts, ti, tj);
    index.mark(from_id, false);
    index.mark(to_id, true);
    return SwapOutcome::kAccepted;
  }
  flip_edge(g, counts, fi, fj);  // restore
  return SwapOutcome::kRejected;
}

}  // namespace

PairIndex::PairIndex(const DenseGraph& g) {
  const int n = g.n();
  const long long total = g.pair_count();
  slot_.resize(static_cast<std::size_t>(total));
  present_flag_.resize(static_cast<std::size_t>(total));
  present_.reserve(static_cast<std::size_t>(total));
  absent_.reserve(static_cast<std::size_t>(total));
  std::uint32_t id = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++id) {
      const bool present = g.has_edge(i, j);
      present_flag_[id] = present;
      auto& bucket = present ? present_ : absent_;
      slot_[id] = static_cast<std::uint32_t>(bucket.size());
      bucket.push_back(id);
    }
  }
}

std::uint32_t PairIndex::pair_id(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  const long long row_start =
      static_cast<long long>(i) * (2LL * n - i - 1) / 2;
  return static_cast<std::uint32_t>(row_start + (j - i - 1));
}

std::pair<int, int> PairIndex::pair_of(int n, std::uint32_t id) {
  // Invert the row-major upper-triangle numbering: the largest i whose row
  // starts at or before id. The float solve is exact up to +-1, fixed below.
  const double nn = static_cast<double>(n);
  const double discriminant =
      (2.0 * nn - 1.0) * (2.0 * nn - 1.0) - 8.0 * static_cast<double>(id);
  int i = static_cast<int>((2.0 * nn - 1.0 - std::sqrt(discriminant)) / 2.0);
  const auto row_start = [n](int r) {
    return static_cast<long long>(r) * (2LL * n - r - 1) / 2;
  };
  while (i > 0 && row_start(i) > static_cast<long long>(id)) --i;
  while (i + 1 < n && row_start(i + 1) <= static_cast<long long>(id)) ++i;
  const int j = static_cast<int>(static_cast<long long>(id) - row_start(i)) +
                i + 1;
  return {i, j};
}

void PairIndex::mark(std::uint32_t id, bool present) {
  if (present_flag_[id] == static_cast<std::uint8_t>(present)) return;
  auto& from = present_flag_[id] ? present_ : absent_;
  auto& to = present ? present_ : absent_;
  // Swap-remove from the old bucket.
  const std::uint32_t pos = slot_[id];
  const std::uint32_t moved = from.back();
  from[pos] = moved;
  slot_[moved] = pos;
  from.pop_back();
  slot_[id] = static_cast<std::uint32_t>(to.size());
  to.push_back(id);
  present_flag_[id] = present;
}

void glauber_step(const Model& model, DenseGraph& g, GraphCounts& counts,
                  Rng& rng) {
  const auto [i, j] = pick_pair(g.n(), rng);
  const double p_present = sigmoid(edge_conditional_log_odds(model, g, i, j));
  const bool present = rng.uniform01() < p_present;
  if (present != g.has_edge(i, j)) {
    flip_edge(g, counts, i, j);
  }
}

SwapOutcome edge_swap_step(const Model& model, DenseGraph& g,
                           GraphCounts& counts, PairIndex& index, Rng& rng) {
  const FlipWeightEvaluator evaluator(model);
  return edge_swap_step_impl(evaluator, g, counts, index, rng);
}

ChainResult run_chain(const Model& model, const ChainConfig& config,
                      std::optional<long long> condition_on_edges) {
  if (config.samples < 1 || config.thinning_sweeps < 1 ||
      config.burn_in_sweeps < 0) {
    throw std::invalid_argument("bad chain configuration");
  }
  const int n = model.n();
  const long long total_pairs = model.pair_count();
  Rng rng(config.seed);

  DenseGraph g(n);
  if (condition_on_edges) {
    const long long k = *condition_on_edges;
    if (k < 0 || k > total_pairs) {
      throw std::invalid_argument("conditioned edge count out of range");
    }
    // Uniformly random k-edge start: partial Fisher–Yates over pair ids.
    std::vector<std::uint32_t> ids(static_cast<std::size_t>(total_pairs));
    std::iota(ids.begin(), ids.end(), 0u);
    for (long long t = 0; t < k; ++t) {
      const long long r =
          t + static_cast<long long>(rng.uniform_below(
                  static_cast<std::uint64_t>(total_pairs - t)));
      std::swap(ids[static_cast<std::size_t>(t)],
                ids[static_cast<std::size_t>(r)]);
      const auto [i, j] = PairIndex::pair_of(n, ids[static_cast<std::size_t>(t)]);
      g.set_edge(i, j, true);
    }
  } else {
    switch (config.initial_state) {
      case InitialState::kEmpty:
        break;
      case InitialState::kComplete:
        g = DenseGraph::complete(n);
        break;
      case InitialState::kIid:
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) {
            if (rng.bernoulli(config.initial_density)) g.set_edge(i, j, true);
          }
        }
        break;
    }
  }

  GraphCounts counts = count_statistics(g);
  const FlipWeightEvaluator evaluator(model);

  ChainResult result;
  const long long steps_per_sweep = total_pairs;

  if (condition_on_edges) {
    result.realized_edge_count = *condition_on_edges;
    PairIndex index(g);
    const auto run_sweeps = [&](long long sweeps) {
      for (long long s = 0; s < sweeps; ++s) {
        for (long long t = 0; t < steps_per_sweep; ++t) {
          switch (edge_swap_step_impl(evaluator, g, counts, index, rng)) {
            case SwapOutcome::kAccepted:
              ++result.accepted_swaps;
              break;
            case SwapOutcome::kDegenerate:
              ++result.degenerate_events;
              break;
            case SwapOutcome::kRejected:
              break;
          }
        }
      }
    };
    run_sweeps(config.burn_in_sweeps);
    long long sweep_index = config.burn_in_sweeps;
    result.records.reserve(static_cast<std::size_t>(config.samples));
    for (long long s = 0; s < config.samples; ++s) {
      run_sweeps(config.thinning_sweeps);
      sweep_index += config.thinning_sweeps;
      result.records.push_back(SampleRecord{counts.edges, counts.two_stars,
                                            counts.triangles, sweep_index});
    }
  } else {
    const auto run_sweeps = [&](long long sweeps) {
      for (long long s = 0; s < sweeps; ++s) {
        for (long long t = 0; t < steps_per_sweep; ++t) {
          glauber_step_impl(evaluator, g, counts, rng);
        }
      }
    };
    run_sweeps(config.burn_in_sweeps);
    long long sweep_index = config.burn_in_sweeps;
    result.records.reserve(static_cast<std::size_t>(config.samples));
    for (long long s = 0; s < config.samples; ++s) {
      run_sweeps(config.thinning_sweeps);
      sweep_index += config.thinning_sweeps;
      result.records.push_back(SampleRecord{counts.edges, counts.two_stars,
                                            counts.triangles, sweep_index});
    }
  }
  return result;
}

double graph_log_weight(const Model& model, const DenseGraph& g) {
  double total = 2.0 * model.edge_beta() *
                 static_cast<double>(count_statistics(g).edges);
  const auto& terms = model.terms();
  for (std::size_t l = 1; l < terms.size(); ++l) {
    const Motif& motif = terms[l].motif;
    total += terms[l].beta *
             std::pow(static_cast<double>(model.n()),
                      2 - motif.vertex_count()) *
             static_cast<double>(injective_hom_count(motif, g));
  }
  return total;
}

DenseGraph ExactDistribution::graph_from_mask(int n, std::uint64_t mask) {
  DenseGraph g(n);
  std::uint32_t id = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++id) {
      if ((mask >> id) & 1ull) g.set_edge(i, j, true);
    }
  }
  return g;
}

double ExactDistribution::expectation(
    const std::function<double(std::uint64_t)>& f) const {
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < probability.size(); ++mask) {
    if (probability[mask] > 0.0) {
      total += probability[mask] * f(mask);
    }
  }
  return total;
}

std::vector<double> ExactDistribution::edge_count_distribution() const {
  const long long total_pairs = static_cast<long long>(n) * (n - 1) / 2;
  std::vector<double> pmf(static_cast<std::size_t>(total_pairs + 1), 0.0);
  for (std::uint64_t mask = 0; mask < probability.size(); ++mask) {
    pmf[static_cast<std::size_t>(std::popcount(mask))] += probability[mask];
  }
  return pmf;
}

namespace {

ExactDistribution exact_over(const Model& model,
                             std::optional<long long> slice_edges) {
  const int n = model.n();
  if (n > 6) {
    throw UnsupportedSizeError(
        "exact enumeration is limited to n <= 6 (2^15 graphs)");
  }
  const long long total_pairs = model.pair_count();
  const std::uint64_t graph_count = 1ull << total_pairs;

  std::vector<double> log_weight(graph_count,
                                 -std::numeric_limits<double>::infinity());
  double max_log = -std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < graph_count; ++mask) {
    if (slice_edges && std::popcount(mask) != *slice_edges) continue;
    const DenseGraph g = ExactDistribution::graph_from_mask(n, mask);
    log_weight[mask] = graph_log_weight(model, g);
    max_log = std::max(max_log, log_weight[mask]);
  }
  if (max_log == -std::numeric_limits<double>::infinity()) {
    throw std::invalid_argument("conditioning slice is empty");
  }

  ExactDistribution dist;
  dist.n = n;
  dist.probability.assign(graph_count, 0.0);
  double normalizer = 0.0;
  for (std::uint64_t mask = 0; mask < graph_count; ++mask) {
    if (log_weight[mask] == -std::numeric_limits<double>::infinity()) continue;
    const double w = std::exp(log_weight[mask] - max_log);
    dist.probability[mask] = w;
    normalizer += w;
  }
  for (double& p : dist.probability) p /= normalizer;
  return dist;
}

}  // namespace

ExactDistribution exact_distribution(const Model& model) {
  return exact_over(model, std::nullopt);
}

ExactDistribution exact_conditional(const Model& model, long long k) {
  if (k < 0 || k > model.pair_count()) {
    throw std::invalid_argument("conditioned edge count out of range");
  }
  return exact_over(model, k);
}

DensityEstimate estimate_mean_edge_density(const Model& model,
                                           const ChainConfig& config) {
  const ChainResult chain = run_chain(model, config);
  std::vector<double> densities;
  densities.reserve(chain.records.size());
  const double total_pairs = static_cast<double>(model.pair_count());
  for (const SampleRecord& record : chain.records) {
    densities.push_back(static_cast<double>(record.edges) / total_pairs);
  }
  const BatchMeans bm = batch_means(densities);
  return DensityEstimate{bm.mean, bm.standard_error,
                         static_cast<long long>(densities.size())};
}

}  // namespace ergm
