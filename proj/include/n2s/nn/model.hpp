#pragma once

#include <cstdint>

#include <torch/torch.h>

#include "n2s/nn/config.hpp"
#include "n2s/nn/decoders.hpp"
#include "n2s/nn/encoder.hpp"
#include "n2s/nn/features.hpp"

namespace n2s::nn {

// Policy network: encoder, max-pooling and the two pair decoders.
class N2SActorImpl : public torch::nn::Module {
 public:
  explicit N2SActorImpl(const ModelConfig& config);

  struct Scores {
    EncoderOutput encoded;
    torch::Tensor pooled;          // [B, V, d]
    torch::Tensor removal_logits;  // [B, n], clamped
  };

  Scores score_removal(const StateBatch& batch);
  torch::Tensor score_reinsertion(const torch::Tensor& pooled, const ReinsertionInputs& inputs);

  const ModelConfig& config() const { return config_; }

  Encoder encoder{nullptr};
  MaxPooling pooling{nullptr};
  RemovalDecoder removal{nullptr};
  ReinsertionDecoder reinsertion{nullptr};

 private:
  ModelConfig config_;
};
TORCH_MODULE(N2SActor);

std::int64_t count_parameters(const torch::nn::Module& module);

}  // namespace n2s::nn
