#include "n2s/nn/encoder.hpp"

#include <cmath>
#include <stdexcept>

#include "n2s/nn/cpe.hpp"

namespace n2s::nn {

void init_projection(torch::Tensor& weight) {
  torch::NoGradGuard no_grad;
  const double bound = 1.0 / std::sqrt(static_cast<double>(weight.size(-2)));
  weight.uniform_(-bound, bound);
}

torch::nn::Sequential make_mlp(std::initializer_list<std::int64_t> widths) {
  torch::nn::Sequential mlp;
  const std::vector<std::int64_t> w(widths);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (i > 0) mlp->push_back(torch::nn::ReLU());
    mlp->push_back(torch::nn::Linear(w[i], w[i + 1]));
  }
  return mlp;
}

SynthAttentionImpl::SynthAttentionImpl(std::int64_t heads, std::int64_t input_dim,
                                       std::int64_t key_dim, bool synthesize)
    : heads_(heads),
      input_dim_(input_dim),
      key_dim_(key_dim),
      value_dim_(input_dim / heads),
      synthesize_(synthesize) {
  w_query = register_parameter("w_query", torch::empty({heads, input_dim, key_dim}));
  w_key = register_parameter("w_key", torch::empty({heads, input_dim, key_dim}));
  w_value = register_parameter("w_value", torch::empty({heads, input_dim, value_dim_}));
  w_out = register_parameter("w_out", torch::empty({heads * value_dim_, input_dim}));
  for (auto* w : {&w_query, &w_key, &w_value, &w_out}) init_projection(*w);
  if (synthesize_) {
    score_mlp = register_module("score_mlp", make_mlp({2 * heads, 2 * heads, heads}));
  }
}

torch::Tensor SynthAttentionImpl::self_scores(const torch::Tensor& h) const {
  const auto q = torch::einsum("bvd,mdk->bmvk", {h, w_query});
  const auto k = torch::einsum("bvd,mdk->bmvk", {h, w_key});
  return torch::matmul(q, k.transpose(-1, -2)) / std::sqrt(static_cast<double>(key_dim_));
}

torch::Tensor SynthAttentionImpl::attention_weights(const torch::Tensor& h,
                                                    const torch::Tensor& aux) {
  if (h.dim() != 3 || h.size(2) != input_dim_) {
    throw std::invalid_argument("attention: expected [B, V, " +
                                std::to_string(input_dim_) + "] input");
  }
  auto scores = self_scores(h);
  if (synthesize_) {
    if (!aux.defined() || aux.sizes() != scores.sizes()) {
      throw std::invalid_argument("attention: auxiliary scores do not match [B, m, V, V]");
    }
    const auto stacked = torch::cat({scores, aux}, 1).permute({0, 2, 3, 1});
    scores = score_mlp->forward(stacked).permute({0, 3, 1, 2});
  }
  return torch::softmax(scores, -1);
}

torch::Tensor SynthAttentionImpl::forward(const torch::Tensor& h, const torch::Tensor& aux) {
  const auto weights = attention_weights(h, aux);
  const auto values = torch::einsum("bvd,mde->bmve", {h, w_value});
  const auto heads = torch::matmul(weights, values);  // [B, m, V, dv]
  const auto merged = heads.permute({0, 2, 1, 3}).reshape({h.size(0), h.size(1), -1});
  return torch::matmul(merged, w_out);
}

AuxiliaryScoresImpl::AuxiliaryScoresImpl(std::int64_t heads, std::int64_t positional_dim,
                                         std::int64_t key_dim)
    : key_dim_(key_dim) {
  w_query = register_parameter("w_query", torch::empty({heads, positional_dim, key_dim}));
  w_key = register_parameter("w_key", torch::empty({heads, positional_dim, key_dim}));
  init_projection(w_query);
  init_projection(w_key);
}

torch::Tensor AuxiliaryScoresImpl::forward(const torch::Tensor& g) {
  const auto q = torch::einsum("bvd,mdk->bmvk", {g, w_query});
  const auto k = torch::einsum("bvd,mdk->bmvk", {g, w_key});
  return torch::matmul(q, k.transpose(-1, -2)) / std::sqrt(static_cast<double>(key_dim_));
}

InstanceNormImpl::InstanceNormImpl(std::int64_t dim) {
  norm = register_module("norm", torch::nn::InstanceNorm1d(
                                     torch::nn::InstanceNorm1dOptions(dim).affine(true)));
}

torch::Tensor InstanceNormImpl::forward(const torch::Tensor& x) {
  return norm->forward(x.transpose(1, 2)).transpose(1, 2);
}

EncoderLayerImpl::EncoderLayerImpl(const ModelConfig& config) {
  attention = register_module(
      "attention", SynthAttention(config.heads, config.embedding_dim, config.key_dim(),
                                  config.encoder == EncoderVariant::kSynth));
  norm1 = register_module("norm1", InstanceNorm(config.embedding_dim));
  feed_forward = register_module(
      "feed_forward",
      make_mlp({config.embedding_dim, config.feed_forward_dim(), config.embedding_dim}));
  norm2 = register_module("norm2", InstanceNorm(config.embedding_dim));
}

torch::Tensor EncoderLayerImpl::forward(const torch::Tensor& h, const torch::Tensor& aux) {
  const auto mixed = norm1->forward(h + attention->forward(h, aux));
  return norm2->forward(mixed + feed_forward->forward(mixed));
}

EncoderImpl::EncoderImpl(const ModelConfig& config) : config_(config) {
  config_.validate();
  node_embedding = register_module("node_embedding", torch::nn::Linear(2, config.embedding_dim));
  if (config.encoder == EncoderVariant::kSynth) {
    aux = register_module("aux", AuxiliaryScores(config.heads, config.positional_dim,
                                                 config.key_dim()));
  }
  layers = register_module("layers", torch::nn::ModuleList());
  for (std::int64_t l = 0; l < config.layers; ++l) layers->push_back(EncoderLayer(config));
}

torch::Tensor EncoderImpl::positional_embeddings(const torch::Tensor& positions) const {
  const auto dtype = node_embedding->weight.scalar_type();
  const std::int64_t num_nodes = positions.size(1);
  const auto table = cyclic_positional_encoding(num_nodes, config_.positional_dim, dtype)
                         .to(node_embedding->weight.device());
  return table.index({positions});
}

EncoderOutput EncoderImpl::forward(const torch::Tensor& coords, const torch::Tensor& positions) {
  EncoderOutput out;
  if (aux) out.aux_scores = aux->forward(positional_embeddings(positions));
  auto h = node_embedding->forward(coords);
  for (const auto& layer : *layers) {
    h = layer->as<EncoderLayer>()->forward(h, out.aux_scores);
  }
  out.embeddings = h;
  return out;
}

}  // namespace n2s::nn
