#pragma once

#include <cstdint>

#include <torch/torch.h>

#include "n2s/nn/config.hpp"

namespace n2s::nn {

// Small feed-forward stack with ReLU between layers and a linear output,
// e.g. widths {8, 8, 4} gives Linear(8,8) -> ReLU -> Linear(8,4).
torch::nn::Sequential make_mlp(std::initializer_list<std::int64_t> widths);

// Multi-head attention over node embeddings.
//
// With synthesis enabled, the per-head self scores (queries/keys from h) and
// the externally supplied auxiliary scores are stacked into 2m channels per
// node pair and blended by a 2m -> 2m -> m MLP before the row softmax.
// Without synthesis the auxiliary scores are ignored (plain attention).
class SynthAttentionImpl : public torch::nn::Module {
 public:
  SynthAttentionImpl(std::int64_t heads, std::int64_t input_dim, std::int64_t key_dim,
                     bool synthesize);

  // h: [B, V, input_dim]; aux: [B, heads, V, V] or undefined.
  torch::Tensor forward(const torch::Tensor& h, const torch::Tensor& aux = {});

  // Scaled dot-product scores [B, heads, V, V] before any blending.
  torch::Tensor self_scores(const torch::Tensor& h) const;
  // Row-normalized attention weights [B, heads, V, V].
  torch::Tensor attention_weights(const torch::Tensor& h, const torch::Tensor& aux = {});

  bool synthesizes() const { return synthesize_; }

  torch::Tensor w_query, w_key, w_value, w_out;
  torch::nn::Sequential score_mlp{nullptr};

 private:
  std::int64_t heads_;
  std::int64_t input_dim_;
  std::int64_t key_dim_;
  std::int64_t value_dim_;
  bool synthesize_;
};
TORCH_MODULE(SynthAttention);

// Per-head bilinear scores between positional embeddings:
// (g_i Wq_m)(g_j Wk_m)^T / sqrt(d_k).
class AuxiliaryScoresImpl : public torch::nn::Module {
 public:
  AuxiliaryScoresImpl(std::int64_t heads, std::int64_t positional_dim, std::int64_t key_dim);

  // g: [B, V, positional_dim] -> [B, heads, V, V]
  torch::Tensor forward(const torch::Tensor& g);

  torch::Tensor w_query, w_key;

 private:
  std::int64_t key_dim_;
};
TORCH_MODULE(AuxiliaryScores);

// Normalizes every channel over the node axis of each instance, with a
// learned per-channel scale and shift.
class InstanceNormImpl : public torch::nn::Module {
 public:
  explicit InstanceNormImpl(std::int64_t dim);
  torch::Tensor forward(const torch::Tensor& x);  // x: [B, V, dim]

  torch::nn::InstanceNorm1d norm{nullptr};
};
TORCH_MODULE(InstanceNorm);

// Transformer encoder block: attention + residual + norm, then feed-forward
// + residual + norm.
class EncoderLayerImpl : public torch::nn::Module {
 public:
  explicit EncoderLayerImpl(const ModelConfig& config);
  torch::Tensor forward(const torch::Tensor& h, const torch::Tensor& aux);

  SynthAttention attention{nullptr};
  InstanceNorm norm1{nullptr};
  torch::nn::Sequential feed_forward{nullptr};
  InstanceNorm norm2{nullptr};
};
TORCH_MODULE(EncoderLayer);

struct EncoderOutput {
  torch::Tensor embeddings;  // [B, V, embedding_dim]
  torch::Tensor aux_scores;  // [B, heads, V, V]; undefined for the vanilla variant
};

class EncoderImpl : public torch::nn::Module {
 public:
  explicit EncoderImpl(const ModelConfig& config);

  // coords: [B, V, 2]; positions: [B, V] (int64) with positions[b][x] the
  // tour index of node x.
  EncoderOutput forward(const torch::Tensor& coords, const torch::Tensor& positions);

  // Positional embeddings [B, V, positional_dim]: node x gets the cyclic
  // encoding row of its tour position.
  torch::Tensor positional_embeddings(const torch::Tensor& positions) const;

  const ModelConfig& config() const { return config_; }

  torch::nn::Linear node_embedding{nullptr};
  AuxiliaryScores aux{nullptr};
  torch::nn::ModuleList layers{nullptr};

 private:
  ModelConfig config_;
};
TORCH_MODULE(Encoder);

// Uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)) with fan_in = size(-2).
void init_projection(torch::Tensor& weight);

}  // namespace n2s::nn
