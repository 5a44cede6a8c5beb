#include "n2s/nn/config.hpp"

#include <stdexcept>
#include <string>

namespace n2s::nn {

std::string_view to_string(EncoderVariant variant) {
  return variant == EncoderVariant::kSynth ? "synth" : "vanilla";
}

EncoderVariant parse_encoder_variant(std::string_view text) {
  if (text == "synth") return EncoderVariant::kSynth;
  if (text == "vanilla") return EncoderVariant::kVanilla;
  throw std::invalid_argument("unknown encoder variant '" + std::string(text) + "'");
}

void ModelConfig::validate() const {
  if (heads < 1) throw std::invalid_argument("model: heads must be positive");
  if (embedding_dim < 1 || embedding_dim % heads != 0) {
    throw std::invalid_argument("model: embedding_dim must be a positive multiple of heads");
  }
  if (positional_dim < 2 || positional_dim % heads != 0 || positional_dim % 2 != 0) {
    throw std::invalid_argument(
        "model: positional_dim must be even and a positive multiple of heads");
  }
  if (layers < 1) throw std::invalid_argument("model: layers must be >= 1");
  if (!(logit_clip > 0.0)) throw std::invalid_argument("model: logit_clip must be > 0");
}

ModelConfig ModelConfig::with_dim(std::int64_t dim) {
  ModelConfig config;
  config.embedding_dim = dim;
  config.positional_dim = dim;
  return config;
}

void to_json(nlohmann::json& j, const ModelConfig& config) {
  j = nlohmann::json{{"embedding_dim", config.embedding_dim},
                     {"positional_dim", config.positional_dim},
                     {"heads", config.heads},
                     {"layers", config.layers},
                     {"logit_clip", config.logit_clip},
                     {"encoder", std::string(to_string(config.encoder))}};
}

void from_json(const nlohmann::json& j, ModelConfig& config) {
  if (!j.is_object()) throw std::invalid_argument("model config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "embedding_dim") {
      config.embedding_dim = value.get<std::int64_t>();
    } else if (key == "positional_dim") {
      config.positional_dim = value.get<std::int64_t>();
    } else if (key == "heads") {
      config.heads = value.get<std::int64_t>();
    } else if (key == "layers") {
      config.layers = value.get<std::int64_t>();
    } else if (key == "logit_clip") {
      config.logit_clip = value.get<double>();
    } else if (key == "encoder") {
      config.encoder = parse_encoder_variant(value.get<std::string>());
    } else {
      throw std::invalid_argument("unknown model config key '" + key + "'");
    }
  }
}

}  // namespace n2s::nn
