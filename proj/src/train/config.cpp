#include "n2s/train/config.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace n2s::train {

TrainConfig TrainConfig::for_size(int num_requests, Variant variant) {
  TrainConfig config;
  config.num_requests = num_requests;
  config.variant = variant;
  const int v = config.num_nodes();
  if (v <= 21) {
    config.max_grad_norm = 0.05;
    config.curriculum_rho = 2.0;
  } else if (v <= 51) {
    config.max_grad_norm = 0.15;
    config.curriculum_rho = 1.5;
  } else {
    config.max_grad_norm = 0.35;
    config.curriculum_rho = 1.0;
  }
  return config;
}

void TrainConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("train config: ") + what);
  };
  model.validate();
  require(num_requests >= 1, "num_requests must be >= 1");
  require(epochs >= 1, "epochs must be >= 1");
  require(batches_per_epoch >= 1, "batches_per_epoch must be >= 1");
  require(batch_size >= 1, "batch_size must be >= 1");
  require(n_step >= 1, "n_step must be >= 1");
  require(rollout_steps >= n_step && rollout_steps % n_step == 0,
          "rollout_steps must be a positive multiple of n_step");
  require(ppo_epochs >= 1, "ppo_epochs must be >= 1");
  require(clip_epsilon > 0.0 && clip_epsilon < 1.0, "clip_epsilon must lie in (0, 1)");
  require(lr_actor > 0.0 && lr_critic > 0.0, "learning rates must be positive");
  require(lr_decay > 0.0, "lr_decay must be positive");
  require(gamma > 0.0 && gamma <= 1.0, "gamma must lie in (0, 1]");
  require(max_grad_norm > 0.0, "max_grad_norm must be positive");
  require(curriculum_rho > 0.0, "curriculum_rho must be positive");
  require(history_window >= 0, "history_window must be >= 0");
  require(checkpoint_every >= 1, "checkpoint_every must be >= 1");
}

void to_json(nlohmann::json& j, const TrainConfig& c) {
  j = nlohmann::json{{"num_requests", c.num_requests},
                     {"variant", std::string(to_string(c.variant))},
                     {"model", c.model},
                     {"epochs", c.epochs},
                     {"batches_per_epoch", c.batches_per_epoch},
                     {"batch_size", c.batch_size},
                     {"n_step", c.n_step},
                     {"rollout_steps", c.rollout_steps},
                     {"ppo_epochs", c.ppo_epochs},
                     {"clip_epsilon", c.clip_epsilon},
                     {"lr_actor", c.lr_actor},
                     {"lr_critic", c.lr_critic},
                     {"lr_decay", c.lr_decay},
                     {"gamma", c.gamma},
                     {"max_grad_norm", c.max_grad_norm},
                     {"curriculum_rho", c.curriculum_rho},
                     {"history_window", c.history_window},
                     {"seed", c.seed},
                     {"checkpoint_every", c.checkpoint_every}};
}

void from_json(const nlohmann::json& j, TrainConfig& c) {
  if (!j.is_object()) throw std::invalid_argument("train config must be a JSON object");
  using Setter = std::function<void(const nlohmann::json&)>;
  const std::map<std::string, Setter> setters{
      {"num_requests", [&](const auto& v) { v.get_to(c.num_requests); }},
      {"variant", [&](const auto& v) { c.variant = parse_variant(v.template get<std::string>()); }},
      {"model", [&](const auto& v) { nn::from_json(v, c.model); }},
      {"epochs", [&](const auto& v) { v.get_to(c.epochs); }},
      {"batches_per_epoch", [&](const auto& v) { v.get_to(c.batches_per_epoch); }},
      {"batch_size", [&](const auto& v) { v.get_to(c.batch_size); }},
      {"n_step", [&](const auto& v) { v.get_to(c.n_step); }},
      {"rollout_steps", [&](const auto& v) { v.get_to(c.rollout_steps); }},
      {"ppo_epochs", [&](const auto& v) { v.get_to(c.ppo_epochs); }},
      {"clip_epsilon", [&](const auto& v) { v.get_to(c.clip_epsilon); }},
      {"lr_actor", [&](const auto& v) { v.get_to(c.lr_actor); }},
      {"lr_critic", [&](const auto& v) { v.get_to(c.lr_critic); }},
      {"lr_decay", [&](const auto& v) { v.get_to(c.lr_decay); }},
      {"gamma", [&](const auto& v) { v.get_to(c.gamma); }},
      {"max_grad_norm", [&](const auto& v) { v.get_to(c.max_grad_norm); }},
      {"curriculum_rho", [&](const auto& v) { v.get_to(c.curriculum_rho); }},
      {"history_window", [&](const auto& v) { v.get_to(c.history_window); }},
      {"seed", [&](const auto& v) { v.get_to(c.seed); }},
      {"checkpoint_every", [&](const auto& v) { v.get_to(c.checkpoint_every); }},
  };
  // Report every bad key at once, nested model keys included.
  std::string unknown;
  const nlohmann::json model_keys = c.model;
  for (const auto& [key, value] : j.items()) {
    if (!setters.count(key)) {
      unknown += (unknown.empty() ? "'" : ", '") + key + "'";
    } else if (key == "model" && value.is_object()) {
      for (const auto& [sub, ignored] : value.items()) {
        if (!model_keys.contains(sub)) unknown += (unknown.empty() ? "'" : ", '") + key + "." + sub + "'";
      }
    }
  }
  if (!unknown.empty()) throw std::invalid_argument("unknown train config keys: " + unknown);
  for (const auto& [key, value] : j.items()) {
    const auto it = setters.find(key);
    try {
      it->second(value);
    } catch (const nlohmann::json::type_error& e) {
      throw std::invalid_argument("train config key '" + key + "': " + e.what());
    }
  }
}

}  // namespace n2s::train
