#include "n2s/search/rollout.hpp"

#include <stdexcept>

#include "n2s/core/feasibility.hpp"
#include "n2s/core/search_state.hpp"

namespace n2s::search {

int inference_history_window(const Instance& instance, const RolloutOptions& options) {
  return options.history_window > 0 ? options.history_window : instance.num_nodes() / 2;
}

std::vector<RolloutResult> rollout_batch(std::span<const std::shared_ptr<const Instance>> instances,
                                         std::span<const Route> starts, nn::PairPolicy& policy,
                                         const RolloutOptions& options, std::span<Rng> rngs) {
  if (instances.size() != starts.size() || instances.size() != rngs.size()) {
    throw std::invalid_argument("rollout_batch: instances, starts and rngs must align");
  }
  if (options.steps < 0) throw std::invalid_argument("rollout: steps must be >= 0");
  std::vector<SearchState> envs;
  envs.reserve(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    envs.emplace_back(instances[i], starts[i], inference_history_window(*instances[i], options));
  }
  std::vector<double> initial;
  std::vector<std::vector<double>> traces(envs.size());
  for (std::size_t i = 0; i < envs.size(); ++i) {
    initial.push_back(envs[i].cost());
    if (options.trace) {
      traces[i].reserve(options.steps + 1);
      traces[i].push_back(envs[i].best_cost());
    }
  }
  std::vector<nn::StateSnapshot> states;
  states.reserve(envs.size());
  for (int t = 0; t < options.steps; ++t) {
    states.clear();
    for (const auto& env : envs) states.push_back(nn::snapshot(env));
    const auto out = policy.act(states, rngs, options.mode);
    for (std::size_t i = 0; i < envs.size(); ++i) {
      envs[i].step(out[i].action);
      if (options.trace) traces[i].push_back(envs[i].best_cost());
    }
  }
  std::vector<RolloutResult> results;
  results.reserve(envs.size());
  for (std::size_t i = 0; i < envs.size(); ++i) {
    results.push_back(RolloutResult{initial[i], envs[i].best_cost(), envs[i].best_route(),
                                    std::move(traces[i])});
  }
  return results;
}

RolloutResult rollout(std::shared_ptr<const Instance> instance, nn::PairPolicy& policy,
                      const RolloutOptions& options) {
  std::vector<Rng> rngs{Rng(derive_seed(options.seed, 0))};
  std::vector<Route> starts{random_initial_solution(*instance, instance->variant(), rngs[0])};
  std::vector<std::shared_ptr<const Instance>> instances{std::move(instance)};
  return rollout_batch(instances, starts, policy, options, rngs).front();
}

int augment_count(const Instance& instance) { return instance.num_nodes() / 2; }

AugmentedResult n2s_a_infer(std::shared_ptr<const Instance> instance, nn::PairPolicy& policy,
                            const RolloutOptions& options, bool identity_first) {
  const int copies = augment_count(*instance);
  Rng spec_rng(derive_seed(options.seed, 0));
  std::vector<TransformSpec> specs;
  std::vector<std::shared_ptr<const Instance>> instances;
  std::vector<Route> starts;
  std::vector<Rng> rngs;
  for (int c = 0; c < copies; ++c) {
    TransformSpec spec = TransformSpec::random(spec_rng);
    if (c == 0 && identity_first) spec = TransformSpec::identity();
    instances.push_back(std::make_shared<const Instance>(apply_transform(*instance, spec)));
    rngs.emplace_back(derive_seed(options.seed, c + 1));
    starts.push_back(random_initial_solution(*instances.back(), instance->variant(), rngs.back()));
    specs.push_back(spec);
  }
  const auto runs = rollout_batch(instances, starts, policy, options, rngs);
  std::vector<double> costs;
  int best = 0;
  for (int c = 0; c < copies; ++c) {
    // Same labels, isometric geometry: re-measure on the original instance.
    costs.push_back(objective(*instance, runs[c].best_route));
    if (costs[c] < costs[best]) best = c;
  }
  return AugmentedResult{costs[best], runs[best].best_route, best, std::move(specs),
                         std::move(costs)};
}

}  // namespace n2s::search
