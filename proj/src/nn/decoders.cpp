#include "n2s/nn/decoders.hpp"

#include <limits>

namespace n2s::nn {
namespace {

torch::nn::Linear projection(std::int64_t in, std::int64_t out) {
  return torch::nn::Linear(torch::nn::LinearOptions(in, out).bias(false));
}

// x: [B, V, ...], index: [B, W] -> [B, W, ...]
torch::Tensor gather_nodes(const torch::Tensor& x, const torch::Tensor& index) {
  const auto batch = torch::arange(x.size(0), index.options()).unsqueeze(1);
  return x.index({batch, index});
}

}  // namespace

MaxPoolingImpl::MaxPoolingImpl(std::int64_t dim) {
  local = register_module("local", projection(dim, dim));
  global = register_module("global", projection(dim, dim));
}

torch::Tensor MaxPoolingImpl::forward(const torch::Tensor& h) {
  const auto pooled = std::get<0>(h.max(1));
  return local->forward(h) + global->forward(pooled).unsqueeze(1);
}

RemovalDecoderImpl::RemovalDecoderImpl(const ModelConfig& config)
    : heads_(config.heads), clip_(config.logit_clip) {
  w_query = register_module("w_query", projection(config.embedding_dim, config.embedding_dim));
  w_key = register_module("w_key", projection(config.embedding_dim, config.embedding_dim));
  mlp = register_module("mlp", make_mlp({2 * config.heads + 4, 32, 32, 1}));
}

torch::Tensor RemovalDecoderImpl::node_scores(const torch::Tensor& pooled,
                                              const torch::Tensor& pred,
                                              const torch::Tensor& succ) {
  const auto b = pooled.size(0);
  const auto v = pooled.size(1);
  const auto q = w_query->forward(pooled).view({b, v, heads_, -1});
  const auto k = w_key->forward(pooled).view({b, v, heads_, -1});
  const auto q_pred = gather_nodes(q, pred);
  const auto k_succ = gather_nodes(k, succ);
  return (q_pred * k).sum(-1) + (q * k_succ).sum(-1) - (q_pred * k_succ).sum(-1);
}

torch::Tensor RemovalDecoderImpl::forward(const torch::Tensor& pooled, const torch::Tensor& pred,
                                          const torch::Tensor& succ,
                                          const torch::Tensor& history) {
  const auto n = (pooled.size(1) - 1) / 2;
  const auto lambda = node_scores(pooled, pred, succ);
  using torch::indexing::Slice;
  const auto features = torch::cat({lambda.index({Slice(), Slice(1, n + 1)}),
                                    lambda.index({Slice(), Slice(n + 1, 2 * n + 1)}),
                                    history.to(pooled.scalar_type())},
                                   -1);
  return clip_ * torch::tanh(mlp->forward(features).squeeze(-1));
}

ReinsertionDecoderImpl::ReinsertionDecoderImpl(const ModelConfig& config)
    : heads_(config.heads), clip_(config.logit_clip) {
  const auto d = config.embedding_dim;
  w_query_pred = register_module("w_query_pred", projection(d, d));
  w_key_pred = register_module("w_key_pred", projection(d, d));
  w_query_succ = register_module("w_query_succ", projection(d, d));
  w_key_succ = register_module("w_key_succ", projection(d, d));
  mlp = register_module("mlp", make_mlp({4 * config.heads, 32, 32, 1}));
}

torch::Tensor ReinsertionDecoderImpl::forward(const torch::Tensor& pooled,
                                              const torch::Tensor& request,
                                              const torch::Tensor& reduced_succ,
                                              const torch::Tensor& mask) {
  const auto b = pooled.size(0);
  const auto v = pooled.size(1);
  const auto n = (v - 1) / 2;
  const auto batch = torch::arange(b, request.options());
  const auto h_pickup = pooled.index({batch, request});
  const auto h_delivery = pooled.index({batch, request + n});

  // Preference of a fixed node for every other node, per head: [B, V, m].
  auto preference = [&](const torch::Tensor& h_row, torch::nn::Linear& wq,
                        torch::nn::Linear& wk) {
    const auto q = wq->forward(h_row).view({b, heads_, -1});
    const auto k = wk->forward(pooled).view({b, v, heads_, -1});
    return torch::einsum("bmk,bvmk->bvm", {q, k});
  };
  const auto pred_pickup = preference(h_pickup, w_query_pred, w_key_pred);
  const auto pred_delivery = preference(h_delivery, w_query_pred, w_key_pred);
  const auto succ_pickup = preference(h_pickup, w_query_succ, w_key_succ);
  const auto succ_delivery = preference(h_delivery, w_query_succ, w_key_succ);

  const auto batch_col = batch.unsqueeze(1);
  const auto row_j = torch::cat({pred_pickup.index({batch_col, reduced_succ}), succ_pickup}, -1);
  const auto col_k =
      torch::cat({pred_delivery.index({batch_col, reduced_succ}), succ_delivery}, -1);
  const auto m = heads_;
  using torch::indexing::Slice;
  // Feature order: mu_p(i+, succ j), mu_p(i-, succ k), mu_s(i+, j), mu_s(i-, k).
  const auto features = torch::cat(
      {row_j.index({Slice(), Slice(), Slice(0, m)}).unsqueeze(2).expand({b, v, v, m}),
       col_k.index({Slice(), Slice(), Slice(0, m)}).unsqueeze(1).expand({b, v, v, m}),
       row_j.index({Slice(), Slice(), Slice(m, 2 * m)}).unsqueeze(2).expand({b, v, v, m}),
       col_k.index({Slice(), Slice(), Slice(m, 2 * m)}).unsqueeze(1).expand({b, v, v, m})},
      -1);
  auto logits = clip_ * torch::tanh(mlp->forward(features).squeeze(-1));
  logits = logits.masked_fill(mask.logical_not(), -std::numeric_limits<double>::infinity());
  return logits.reshape({b, v * v});
}

CriticImpl::CriticImpl(const ModelConfig& config) {
  const auto d = config.embedding_dim;
  const auto half = d / 2;
  attention = register_module("attention",
                              SynthAttention(config.heads, d, d / config.heads, false));
  local = register_module("local", projection(d, half));
  global = register_module("global", projection(d, half));
  value_input_dim_ = 2 * half + 1;
  mlp = register_module("mlp", make_mlp({value_input_dim_, d, half, 1}));
}

torch::Tensor CriticImpl::forward(const torch::Tensor& embeddings,
                                  const torch::Tensor& best_cost) {
  const auto y = attention->forward(embeddings);
  const auto pooled = local->forward(y) + global->forward(y.mean(1)).unsqueeze(1);
  const auto features =
      torch::cat({std::get<0>(pooled.max(1)), pooled.mean(1),
                  best_cost.to(embeddings.scalar_type()).unsqueeze(1)},
                 -1);
  return mlp->forward(features).squeeze(-1);
}

}  // namespace n2s::nn
