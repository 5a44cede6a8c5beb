#pragma once

#include <cstdint>
#include <string_view>

#include <nlohmann/json.hpp>

namespace n2s::nn {

enum class EncoderVariant { kSynth, kVanilla };

std::string_view to_string(EncoderVariant variant);
EncoderVariant parse_encoder_variant(std::string_view text);

// Architecture hyperparameters. Embedding widths must split evenly across
// heads: per-head query/key width is positional_dim / heads and value width
// embedding_dim / heads.
struct ModelConfig {
  std::int64_t embedding_dim = 128;
  std::int64_t positional_dim = 128;
  std::int64_t heads = 4;
  std::int64_t layers = 3;
  double logit_clip = 6.0;
  EncoderVariant encoder = EncoderVariant::kSynth;

  std::int64_t key_dim() const { return positional_dim / heads; }
  std::int64_t value_dim() const { return embedding_dim / heads; }
  std::int64_t feed_forward_dim() const { return 4 * embedding_dim; }

  // Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;

  // Same width for node and positional embeddings.
  static ModelConfig with_dim(std::int64_t dim);
};

void to_json(nlohmann::json& j, const ModelConfig& config);
// Keys present in j overwrite the fields of config; unknown keys throw.
void from_json(const nlohmann::json& j, ModelConfig& config);

}  // namespace n2s::nn
