#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "n2s/core/instance.hpp"
#include "n2s/core/random.hpp"
#include "n2s/core/route.hpp"
#include "n2s/nn/policy.hpp"
#include "n2s/search/transform.hpp"

namespace n2s::search {

struct RolloutOptions {
  int steps = 1000;
  int history_window = 0;  // 0 means floor(|V| / 2)
  nn::DecodeMode mode = nn::DecodeMode::kSample;
  bool trace = false;  // record the incumbent cost after every step
  std::uint64_t seed = 1;
};

struct RolloutResult {
  double initial_cost = 0.0;
  double best_cost = 0.0;
  Route best_route;
  std::vector<double> trace;  // steps + 1 entries when requested, starting at the initial cost
};

int inference_history_window(const Instance& instance, const RolloutOptions& options);

// Improves every start route for options.steps moves in one batch.
// Instances must share a size; rngs[i] drives state i.
std::vector<RolloutResult> rollout_batch(std::span<const std::shared_ptr<const Instance>> instances,
                                         std::span<const Route> starts, nn::PairPolicy& policy,
                                         const RolloutOptions& options, std::span<Rng> rngs);

// Single rollout from a random initial solution drawn from options.seed.
RolloutResult rollout(std::shared_ptr<const Instance> instance, nn::PairPolicy& policy,
                      const RolloutOptions& options);

struct AugmentedResult {
  double best_cost = 0.0;  // measured on the original instance
  Route best_route;
  int best_copy = 0;
  std::vector<TransformSpec> specs;
  std::vector<double> copy_costs;
};

int augment_count(const Instance& instance);

// floor(|V| / 2) transformed copies, each with its own random initial
// solution, searched in one batch; returns the cheapest result. With
// identity_first the first copy is the untransformed instance.
AugmentedResult n2s_a_infer(std::shared_ptr<const Instance> instance, nn::PairPolicy& policy,
                            const RolloutOptions& options, bool identity_first = false);

}  // namespace n2s::search
