#include "n2s/nn/model.hpp"

namespace n2s::nn {

N2SActorImpl::N2SActorImpl(const ModelConfig& config) : config_(config) {
  config_.validate();
  encoder = register_module("encoder", Encoder(config));
  pooling = register_module("pooling", MaxPooling(config.embedding_dim));
  removal = register_module("removal", RemovalDecoder(config));
  reinsertion = register_module("reinsertion", ReinsertionDecoder(config));
}

N2SActorImpl::Scores N2SActorImpl::score_removal(const StateBatch& batch) {
  Scores scores;
  scores.encoded = encoder->forward(batch.coords, batch.positions);
  scores.pooled = pooling->forward(scores.encoded.embeddings);
  scores.removal_logits =
      removal->forward(scores.pooled, batch.pred, batch.succ, batch.history);
  return scores;
}

torch::Tensor N2SActorImpl::score_reinsertion(const torch::Tensor& pooled,
                                              const ReinsertionInputs& inputs) {
  return reinsertion->forward(pooled, inputs.request, inputs.reduced_succ, inputs.mask);
}

std::int64_t count_parameters(const torch::nn::Module& module) {
  std::int64_t total = 0;
  for (const auto& p : module.parameters()) total += p.numel();
  return total;
}

}  // namespace n2s::nn
