#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "n2s/core/instance.hpp"
#include "n2s/nn/config.hpp"

namespace n2s::train {

struct TrainConfig {
  int num_requests = 10;
  Variant variant = Variant::kPdtsp;
  nn::ModelConfig model;

  int epochs = 200;
  int batches_per_epoch = 20;
  int batch_size = 600;
  int n_step = 5;
  int rollout_steps = 250;  // T_train
  int ppo_epochs = 3;       // inner updates per segment
  double clip_epsilon = 0.1;
  double lr_actor = 8e-5;
  double lr_critic = 2e-5;
  double lr_decay = 0.985;
  double gamma = 0.999;
  double max_grad_norm = 0.05;
  double curriculum_rho = 2.0;
  int history_window = 0;  // 0 means |V|

  std::uint64_t seed = 1;
  int checkpoint_every = 1;

  // Gradient clip and curriculum scalar for the problem size, keyed on |V|:
  // up to 21 nodes 0.05 / 2, up to 51 nodes 0.15 / 1.5, larger 0.35 / 1.
  static TrainConfig for_size(int num_requests, Variant variant = Variant::kPdtsp);

  int num_nodes() const { return 2 * num_requests + 1; }
  int effective_history_window() const {
    return history_window > 0 ? history_window : num_nodes();
  }

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

void to_json(nlohmann::json& j, const TrainConfig& config);
// Unknown keys are rejected so typos in config files do not pass silently.
void from_json(const nlohmann::json& j, TrainConfig& config);

}  // namespace n2s::train
