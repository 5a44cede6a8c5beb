#include "n2s/nn/policy.hpp"

#include <cmath>
#include <stdexcept>

namespace n2s::nn {
namespace {

std::vector<double> row_to_vector(const torch::Tensor& row) {
  auto r = row.to(torch::kFloat64).contiguous();
  return std::vector<double>(r.data_ptr<double>(), r.data_ptr<double>() + r.numel());
}

std::size_t pick(const std::vector<double>& probs, Rng& rng, DecodeMode mode) {
  return mode == DecodeMode::kGreedy ? argmax_index(probs) : sample_index(probs, rng);
}

// Entropy of a softmax over logits where masked entries are -inf.
torch::Tensor masked_entropy(const torch::Tensor& logits) {
  auto log_p = torch::log_softmax(logits, -1);
  // Zero out -inf before the product so masked cells carry no NaN gradient.
  auto safe = torch::where(torch::isinf(logits), torch::zeros_like(log_p), log_p);
  return -(safe.exp() * safe).sum(-1);
}

}  // namespace

PairPolicy::PairPolicy(N2SActor actor, DecoderChoice removal, DecoderChoice reinsertion)
    : actor_(std::move(actor)), removal_(removal), reinsertion_(reinsertion) {
  const bool needs_actor =
      removal_.kind == DecoderKind::kLearned || reinsertion_.kind == DecoderKind::kLearned;
  if (needs_actor && actor_.is_empty()) {
    throw std::invalid_argument("PairPolicy: learned decoder without a network");
  }
}

std::vector<PolicyOutput> PairPolicy::act(std::span<const StateSnapshot> states,
                                          std::span<Rng> rngs, DecodeMode mode,
                                          bool keep_distributions) {
  if (states.size() != rngs.size()) throw std::invalid_argument("act: one rng per state");
  const std::size_t b = states.size();
  std::vector<PolicyOutput> out(b);
  if (b == 0) return out;
  torch::NoGradGuard no_grad;

  std::vector<std::vector<double>> removal_probs(b);
  torch::Tensor pooled;
  if (removal_.kind == DecoderKind::kLearned || reinsertion_.kind == DecoderKind::kLearned) {
    auto dtype = actor_->parameters().front().scalar_type();
    auto scores = actor_->score_removal(make_state_batch(states, dtype));
    pooled = scores.pooled;
    if (removal_.kind == DecoderKind::kLearned) {
      auto probs = torch::softmax(scores.removal_logits.to(torch::kFloat64), -1);
      for (std::size_t i = 0; i < b; ++i) removal_probs[i] = row_to_vector(probs[i]);
    }
  }
  if (removal_.kind != DecoderKind::kLearned) {
    for (std::size_t i = 0; i < b; ++i) {
      removal_probs[i] =
          handcrafted_removal_distribution(removal_, *states[i].instance, states[i].route);
    }
  }

  std::vector<int> requests(b);
  std::vector<ReducedView> views;
  views.reserve(b);
  for (std::size_t i = 0; i < b; ++i) {
    const std::size_t r = pick(removal_probs[i], rngs[i], mode);
    requests[i] = static_cast<int>(r) + 1;
    out[i].log_prob = std::log(removal_probs[i][r]);
    views.push_back(reduce(states[i], requests[i]));
  }

  std::vector<std::vector<double>> anchor_probs(b);
  if (reinsertion_.kind == DecoderKind::kLearned) {
    auto logits = actor_->score_reinsertion(pooled, make_reinsertion_inputs(views, requests));
    auto probs = torch::softmax(logits.to(torch::kFloat64), -1);
    for (std::size_t i = 0; i < b; ++i) anchor_probs[i] = row_to_vector(probs[i]);
  } else {
    for (std::size_t i = 0; i < b; ++i) {
      anchor_probs[i] = handcrafted_reinsertion_distribution(
          reinsertion_, *states[i].instance, views[i].reduced, requests[i], views[i].mask);
    }
  }

  for (std::size_t i = 0; i < b; ++i) {
    const int v = states[i].instance->num_nodes();
    const std::size_t cell = pick(anchor_probs[i], rngs[i], mode);
    out[i].action = PairAction{requests[i], static_cast<int>(cell) / v, static_cast<int>(cell) % v};
    out[i].log_prob += std::log(anchor_probs[i][cell]);
    if (keep_distributions) {
      out[i].removal_dist = std::move(removal_probs[i]);
      out[i].reinsertion_dist = std::move(anchor_probs[i]);
    }
  }
  return out;
}

ActionEvaluation evaluate_actions(N2SActor& actor, const StateBatch& batch,
                                  const torch::Tensor& removal, const torch::Tensor& anchor,
                                  const ReinsertionInputs& reinsertion) {
  auto scores = actor->score_removal(batch);
  auto removal_log_p = torch::log_softmax(scores.removal_logits, -1);
  auto anchor_logits = actor->score_reinsertion(scores.pooled, reinsertion);
  auto anchor_log_p = torch::log_softmax(anchor_logits, -1);

  ActionEvaluation eval;
  eval.log_prob = removal_log_p.gather(1, (removal - 1).unsqueeze(1)).squeeze(1) +
                  anchor_log_p.gather(1, anchor.unsqueeze(1)).squeeze(1);
  eval.entropy = masked_entropy(scores.removal_logits) + masked_entropy(anchor_logits);
  eval.embeddings = scores.encoded.embeddings;
  return eval;
}

}  // namespace n2s::nn
