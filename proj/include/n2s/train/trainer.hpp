#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <torch/torch.h>

#include "n2s/core/random.hpp"
#include "n2s/core/search_state.hpp"
#include "n2s/nn/decoders.hpp"
#include "n2s/nn/features.hpp"
#include "n2s/nn/model.hpp"
#include "n2s/nn/policy.hpp"
#include "n2s/train/config.hpp"
#include "n2s/train/ppo.hpp"

namespace n2s::train {

// One environment step for every state in the batch.
struct SegmentStep {
  std::vector<nn::StateSnapshot> states;
  std::vector<PairAction> actions;
  std::vector<double> log_probs;  // behaviour policy, at collection time
  std::vector<double> rewards;
};

struct Segment {
  std::vector<SegmentStep> steps;
  std::vector<nn::StateSnapshot> bootstrap;  // states after the last step
};

// Runs n sampled steps on every environment.
Segment collect_segment(std::vector<SearchState>& envs, nn::PairPolicy& policy,
                        std::span<Rng> rngs, int n_step);

// Advances each environment by `steps` sampled moves and returns the routes
// where they end (not the incumbents).
std::vector<Route> curriculum_warmup(std::vector<SearchState> envs, nn::PairPolicy& policy,
                                     std::span<Rng> rngs, int steps);

struct UpdateStats {
  double policy_objective = 0.0;  // J_RL of the last inner pass
  double value_loss = 0.0;
  double entropy = 0.0;
  double actor_grad_norm = 0.0;   // before clipping
  double critic_grad_norm = 0.0;  // before clipping
  double actor_grad_norm_clipped = 0.0;
  double critic_grad_norm_clipped = 0.0;
  // max |ratio - 1| on the first inner pass, where pi_theta is still pi_old.
  double first_pass_ratio_deviation = 0.0;
  // max |log pi_old - log prob recorded while sampling|.
  double behaviour_log_prob_gap = 0.0;
};

// Actor, critic and their optimizers.
class PpoLearner {
 public:
  PpoLearner(const nn::ModelConfig& model, double lr_actor, double lr_critic);

  void set_learning_rates(double lr_actor, double lr_critic);
  double lr_actor() const;
  double lr_critic() const;

  // kappa inner passes over the segment; returns and advantages are
  // recomputed with the current critic on every pass.
  UpdateStats update(const Segment& segment, const TrainConfig& config);

  // Critic values for a batch of states, without gradient.
  torch::Tensor values(std::span<const nn::StateSnapshot> states);

  nn::N2SActor actor;
  nn::Critic critic;
  torch::optim::Adam actor_optimizer;
  torch::optim::Adam critic_optimizer;
};

struct EpochMetrics {
  int epoch = 0;  // 1-based
  int warmup_steps = 0;
  double mean_initial_cost = 0.0;
  double mean_best_cost = 0.0;
  double mean_improvement = 0.0;  // mean of (initial - best) / initial
  double policy_objective = 0.0;
  double value_loss = 0.0;
  double entropy = 0.0;
  double actor_grad_norm = 0.0;
  double critic_grad_norm = 0.0;
  double lr_actor = 0.0;
  double lr_critic = 0.0;
  double seconds = 0.0;
};

// Drives the full schedule. With an output directory it appends to
// train_log.tsv and writes checkpoint-epoch-NNNN.n2s files there.
class Trainer {
 public:
  explicit Trainer(TrainConfig config, std::filesystem::path output_dir = {});

  // Loads the newest checkpoint in the output directory. Returns false when
  // there is none.
  bool resume();
  void load(const std::filesystem::path& checkpoint);

  EpochMetrics run_epoch();
  std::vector<EpochMetrics> run(const std::function<void(const EpochMetrics&)>& on_epoch = {});

  void save(const std::filesystem::path& path) const;

  const TrainConfig& config() const { return config_; }
  int completed_epochs() const { return completed_epochs_; }
  PpoLearner& learner() { return *learner_; }

 private:
  void log_batch(int epoch, int batch, const EpochMetrics& m) const;

  TrainConfig config_;
  std::filesystem::path output_dir_;
  std::unique_ptr<PpoLearner> learner_;
  int completed_epochs_ = 0;
};

std::filesystem::path checkpoint_path(const std::filesystem::path& dir, int epoch);
std::optional<std::filesystem::path> latest_checkpoint(const std::filesystem::path& dir);

// Policy network from a trainer checkpoint (model config is read from the
// header).
nn::N2SActor load_actor(const std::filesystem::path& checkpoint);

}  // namespace n2s::train
