#pragma once

#include <cstdint>
#include <optional>

#include <nlohmann/json.hpp>

#include "n2s/train/config.hpp"

namespace n2s::bench {

struct TrainOverrides {
  std::optional<int> num_requests;
  std::optional<Variant> variant;
  std::optional<std::uint64_t> seed;
  std::optional<int> dim;
  std::optional<int> epochs;
};

// Size-dependent defaults for the resolved problem size, then the keys in
// `file`, then the overrides. Unknown keys and invalid values throw
// std::invalid_argument.
train::TrainConfig resolve_train_config(const nlohmann::json& file, const TrainOverrides& flags);

}  // namespace n2s::bench
