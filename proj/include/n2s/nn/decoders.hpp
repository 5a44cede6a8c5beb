#pragma once

#include <cstdint>

#include <torch/torch.h>

#include "n2s/nn/config.hpp"
#include "n2s/nn/encoder.hpp"

namespace n2s::nn {

// h_i W_local + max_j(h_j) W_global, element-wise max over nodes.
class MaxPoolingImpl : public torch::nn::Module {
 public:
  explicit MaxPoolingImpl(std::int64_t dim);
  torch::Tensor forward(const torch::Tensor& h);  // [B, V, dim] -> [B, V, dim]

  torch::nn::Linear local{nullptr};
  torch::nn::Linear global{nullptr};
};
TORCH_MODULE(MaxPooling);

// Scores each request for removal.
//
// Per node and head, lambda_i measures how tightly node i sits between its
// tour neighbours: q(pred).k(i) + q(i).k(succ) - q(pred).k(succ). The pickup
// and delivery scores of a request plus its history features (window count
// and the three "chosen k steps ago" flags) go through a (2m+4, 32, 32, 1)
// MLP, and the output is squashed to [-C, C].
class RemovalDecoderImpl : public torch::nn::Module {
 public:
  explicit RemovalDecoderImpl(const ModelConfig& config);

  // Per-node closeness scores [B, V, heads].
  torch::Tensor node_scores(const torch::Tensor& pooled, const torch::Tensor& pred,
                            const torch::Tensor& succ);

  // pooled: [B, V, d]; pred/succ: [B, V] int64 node ids along the tour;
  // history: [B, n, 4]. Returns clamped logits [B, n], request r at column r-1.
  torch::Tensor forward(const torch::Tensor& pooled, const torch::Tensor& pred,
                        const torch::Tensor& succ, const torch::Tensor& history);

  torch::nn::Linear w_query{nullptr};
  torch::nn::Linear w_key{nullptr};
  torch::nn::Sequential mlp{nullptr};

 private:
  std::int64_t heads_;
  double clip_;
};
TORCH_MODULE(RemovalDecoder);

// Scores anchor pairs (j, k) for putting a removed request back.
//
// mu_p[a, b] / mu_s[a, b] are per-head bilinear preferences of node a for b
// as predecessor / successor. For anchors (j, k) the (4m, 32, 32, 1) MLP sees
// mu_p[i+, succ(j)], mu_p[i-, succ(k)], mu_s[i+, j], mu_s[i-, k] with succ
// taken on the tour without the pair. Infeasible anchors get -inf.
class ReinsertionDecoderImpl : public torch::nn::Module {
 public:
  explicit ReinsertionDecoderImpl(const ModelConfig& config);

  // pooled: [B, V, d]; request: [B] int64 ids in 1..n; reduced_succ: [B, V]
  // int64 successor on the reduced tour (any valid id for removed nodes);
  // mask: [B, V, V] bool. Returns logits [B, V * V], entry j * V + k.
  torch::Tensor forward(const torch::Tensor& pooled, const torch::Tensor& request,
                        const torch::Tensor& reduced_succ, const torch::Tensor& mask);

  torch::nn::Linear w_query_pred{nullptr};
  torch::nn::Linear w_key_pred{nullptr};
  torch::nn::Linear w_query_succ{nullptr};
  torch::nn::Linear w_key_succ{nullptr};
  torch::nn::Sequential mlp{nullptr};

 private:
  std::int64_t heads_;
  double clip_;
};
TORCH_MODULE(ReinsertionDecoder);

// State-value head on top of the encoder embeddings: one plain attention
// layer, mean pooling into d/2 channels, then an MLP over
// [max_i y_i, mean_i y_i, best cost] of widths (d+1, d, d/2, 1).
class CriticImpl : public torch::nn::Module {
 public:
  explicit CriticImpl(const ModelConfig& config);

  // embeddings: [B, V, d]; best_cost: [B]. Returns [B].
  torch::Tensor forward(const torch::Tensor& embeddings, const torch::Tensor& best_cost);

  // Width of the value MLP's input layer.
  std::int64_t value_input_dim() const { return value_input_dim_; }

  SynthAttention attention{nullptr};
  torch::nn::Linear local{nullptr};
  torch::nn::Linear global{nullptr};
  torch::nn::Sequential mlp{nullptr};

 private:
  std::int64_t value_input_dim_;
};
TORCH_MODULE(Critic);

}  // namespace n2s::nn
