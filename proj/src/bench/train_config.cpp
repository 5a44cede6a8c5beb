#include "n2s/bench/train_config.hpp"

#include <stdexcept>

namespace n2s::bench {

train::TrainConfig resolve_train_config(const nlohmann::json& file, const TrainOverrides& flags) {
  if (!file.is_object()) throw std::invalid_argument("train config must be a JSON object");
  int n = train::TrainConfig{}.num_requests;
  Variant variant = Variant::kPdtsp;
  try {
    if (file.contains("num_requests")) n = file["num_requests"].get<int>();
    if (file.contains("variant")) variant = parse_variant(file["variant"].get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("train config: ") + e.what());
  }
  if (flags.num_requests) n = *flags.num_requests;
  if (flags.variant) variant = *flags.variant;
  train::TrainConfig config = train::TrainConfig::for_size(n, variant);
  train::from_json(file, config);
  config.num_requests = n;
  config.variant = variant;
  if (flags.dim) {
    const auto encoder = config.model.encoder;
    config.model = nn::ModelConfig::with_dim(*flags.dim);
    config.model.encoder = encoder;
  }
  if (flags.seed) config.seed = *flags.seed;
  if (flags.epochs) config.epochs = *flags.epochs;
  config.validate();
  return config;
}

}  // namespace n2s::bench
