#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "n2s/bench/dataset.hpp"
#include "n2s/core/route.hpp"
#include "n2s/nn/handcrafted.hpp"
#include "n2s/nn/model.hpp"
#include "n2s/nn/policy.hpp"

namespace n2s::bench {

// "random", "greedy" or "eps-greedy:<eps>".
nn::DecoderChoice parse_decoder(const std::string& text);
std::string describe(const nn::DecoderChoice& choice);

// Either a trained policy network or a pair of hand-crafted decoders.
struct PolicySource {
  std::filesystem::path checkpoint;
  nn::DecoderChoice removal = nn::DecoderChoice::learned();
  nn::DecoderChoice reinsertion = nn::DecoderChoice::learned();

  // "removal[/reinsertion]" hand-crafted spec; one name applies to both.
  static PolicySource handcrafted(const std::string& spec);
  static PolicySource from_checkpoint(std::filesystem::path path);

  nlohmann::json to_json() const;
};

struct EvalOptions {
  int steps = 1000;
  bool augment = false;
  std::uint64_t seed = 1;
  nn::DecodeMode mode = nn::DecodeMode::kSample;
  int history_window = 0;  // 0 means floor(|V| / 2)
  int workers = 1;
  std::optional<Variant> variant;  // overrides the variant stored in the files
};

struct EvalRecord {
  std::string id;
  int steps = 0;
  int augments = 1;
  double cost = 0.0;             // in the dataset's source units
  double normalized_cost = 0.0;  // on the stored instance
  std::optional<double> initial_cost;  // normalized; plain rollouts only
  std::optional<double> gap;     // percent
  double seconds = 0.0;
  Route route;
};

struct EvalReport {
  nlohmann::json config;
  std::vector<EvalRecord> records;
  double mean_cost = 0.0;
  std::optional<double> mean_gap;
  long long total_steps = 0;
  double wall_seconds = 0.0;

  nlohmann::json to_json() const;
  void write_csv(std::ostream& out) const;
};

// Instance i is searched with seed derive_seed(options.seed, i), so results
// do not depend on the worker count. Gaps are computed iff reference costs
// are given; their count must match the dataset.
EvalReport evaluate(const Dataset& dataset, const PolicySource& policy, const EvalOptions& options,
                    const std::optional<std::vector<double>>& reference = std::nullopt);

}  // namespace n2s::bench
