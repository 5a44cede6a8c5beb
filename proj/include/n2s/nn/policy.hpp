#pragma once

#include <span>
#include <vector>

#include <torch/torch.h>

#include "n2s/core/random.hpp"
#include "n2s/core/route.hpp"
#include "n2s/nn/features.hpp"
#include "n2s/nn/handcrafted.hpp"
#include "n2s/nn/model.hpp"

namespace n2s::nn {

enum class DecodeMode { kSample, kGreedy };

struct PolicyOutput {
  PairAction action;
  double log_prob = 0.0;  // joint log-probability of removal and reinsertion
  // Filled only when distributions are requested.
  std::vector<double> removal_dist;      // n entries
  std::vector<double> reinsertion_dist;  // V*V entries
};

// Picks one pair action per state. The actor may be null when both halves
// use hand-crafted decoders. Draws come from rngs[i] for state i, so results
// do not depend on the batch composition.
class PairPolicy {
 public:
  PairPolicy(N2SActor actor, DecoderChoice removal, DecoderChoice reinsertion);
  explicit PairPolicy(N2SActor actor)
      : PairPolicy(std::move(actor), DecoderChoice::learned(), DecoderChoice::learned()) {}

  std::vector<PolicyOutput> act(std::span<const StateSnapshot> states, std::span<Rng> rngs,
                                DecodeMode mode, bool keep_distributions = false);

  const N2SActor& actor() const { return actor_; }
  const DecoderChoice& removal() const { return removal_; }
  const DecoderChoice& reinsertion() const { return reinsertion_; }

 private:
  N2SActor actor_;
  DecoderChoice removal_;
  DecoderChoice reinsertion_;
};

struct ActionEvaluation {
  torch::Tensor log_prob;    // [B]
  torch::Tensor entropy;     // [B], removal plus reinsertion entropy
  torch::Tensor embeddings;  // [B, V, d]
};

// Differentiable log-probabilities of stored actions under the learned
// decoders. removal: [B] int64 request ids; anchor: [B] int64 cells j*V+k.
ActionEvaluation evaluate_actions(N2SActor& actor, const StateBatch& batch,
                                  const torch::Tensor& removal, const torch::Tensor& anchor,
                                  const ReinsertionInputs& reinsertion);

}  // namespace n2s::nn
