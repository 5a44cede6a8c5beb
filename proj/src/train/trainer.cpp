#include "n2s/train/trainer.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <regex>
#include <sstream>

#include "n2s/core/feasibility.hpp"
#include "n2s/nn/checkpoint.hpp"

namespace n2s::train {
namespace {

std::vector<nn::StateSnapshot> snapshots(const std::vector<SearchState>& envs) {
  std::vector<nn::StateSnapshot> out;
  out.reserve(envs.size());
  for (const auto& env : envs) out.push_back(nn::snapshot(env));
  return out;
}

torch::Tensor u8_blob(const std::string& bytes) {
  auto t = torch::empty({static_cast<std::int64_t>(bytes.size())}, torch::kUInt8);
  std::memcpy(t.data_ptr(), bytes.data(), bytes.size());
  return t;
}

std::string blob_bytes(const torch::Tensor& t) {
  return std::string(static_cast<const char*>(t.data_ptr()), static_cast<std::size_t>(t.numel()));
}

template <typename Optimizer>
torch::Tensor serialize_optimizer(Optimizer& optimizer) {
  std::ostringstream os;
  torch::save(optimizer, os);
  return u8_blob(os.str());
}

template <typename Optimizer>
void restore_optimizer(Optimizer& optimizer, const nn::Checkpoint& ck, const std::string& key) {
  const auto it = ck.tensors.find(key);
  if (it == ck.tensors.end()) throw nn::CheckpointError("checkpoint lacks '" + key + "'");
  std::istringstream is(blob_bytes(it->second));
  torch::load(optimizer, is);
}

void require_finite(double value, const char* what, const UpdateStats& stats) {
  if (std::isfinite(value)) return;
  std::ostringstream msg;
  msg << "non-finite " << what << " during PPO update (policy objective "
      << stats.policy_objective << ", value loss " << stats.value_loss << ", actor grad norm "
      << stats.actor_grad_norm << ", critic grad norm " << stats.critic_grad_norm << ")";
  throw TrainingError(msg.str());
}

double gradient_norm(const std::vector<torch::Tensor>& params) {
  double total = 0.0;
  for (const auto& p : params) {
    if (p.grad().defined()) total += p.grad().pow(2).sum().item<double>();
  }
  return std::sqrt(total);
}

}  // namespace

Segment collect_segment(std::vector<SearchState>& envs, nn::PairPolicy& policy,
                        std::span<Rng> rngs, int n_step) {
  Segment segment;
  segment.steps.reserve(n_step);
  for (int t = 0; t < n_step; ++t) {
    SegmentStep step;
    step.states = snapshots(envs);
    const auto out = policy.act(step.states, rngs, nn::DecodeMode::kSample);
    for (std::size_t i = 0; i < envs.size(); ++i) {
      step.actions.push_back(out[i].action);
      step.log_probs.push_back(out[i].log_prob);
      step.rewards.push_back(envs[i].step(out[i].action));
    }
    segment.steps.push_back(std::move(step));
  }
  segment.bootstrap = snapshots(envs);
  return segment;
}

std::vector<Route> curriculum_warmup(std::vector<SearchState> envs, nn::PairPolicy& policy,
                                     std::span<Rng> rngs, int steps) {
  for (int t = 0; t < steps; ++t) {
    const auto states = snapshots(envs);
    const auto out = policy.act(states, rngs, nn::DecodeMode::kSample);
    for (std::size_t i = 0; i < envs.size(); ++i) envs[i].step(out[i].action);
  }
  std::vector<Route> routes;
  routes.reserve(envs.size());
  for (const auto& env : envs) routes.push_back(env.route());
  return routes;
}

PpoLearner::PpoLearner(const nn::ModelConfig& model, double lr_actor, double lr_critic)
    : actor(model),
      critic(model),
      actor_optimizer(actor->parameters(), torch::optim::AdamOptions(lr_actor)),
      critic_optimizer(critic->parameters(), torch::optim::AdamOptions(lr_critic)) {}

void PpoLearner::set_learning_rates(double lr_actor, double lr_critic) {
  for (auto& group : actor_optimizer.param_groups()) {
    static_cast<torch::optim::AdamOptions&>(group.options()).lr(lr_actor);
  }
  for (auto& group : critic_optimizer.param_groups()) {
    static_cast<torch::optim::AdamOptions&>(group.options()).lr(lr_critic);
  }
}

double PpoLearner::lr_actor() const {
  return static_cast<const torch::optim::AdamOptions&>(
             actor_optimizer.param_groups().front().options())
      .lr();
}

double PpoLearner::lr_critic() const {
  return static_cast<const torch::optim::AdamOptions&>(
             critic_optimizer.param_groups().front().options())
      .lr();
}

torch::Tensor PpoLearner::values(std::span<const nn::StateSnapshot> states) {
  torch::NoGradGuard no_grad;
  const auto batch = nn::make_state_batch(states);
  const auto embeddings = actor->encoder->forward(batch.coords, batch.positions).embeddings;
  return critic->forward(embeddings, batch.best_cost);
}

UpdateStats PpoLearner::update(const Segment& segment, const TrainConfig& config) {
  const auto n = static_cast<std::int64_t>(segment.steps.size());
  const auto b = static_cast<std::int64_t>(segment.bootstrap.size());
  if (n == 0 || b == 0) throw std::invalid_argument("ppo update: empty segment");

  std::vector<nn::StateSnapshot> states;
  std::vector<nn::ReducedView> views;
  std::vector<int> requests;
  std::vector<std::int64_t> removal, anchor;
  std::vector<float> rewards;
  std::vector<double> recorded;
  states.reserve(n * b);
  for (const auto& step : segment.steps) {
    for (std::int64_t i = 0; i < b; ++i) {
      const auto& s = step.states[i];
      const auto& a = step.actions[i];
      const int v = s.instance->num_nodes();
      states.push_back(s);
      views.push_back(nn::reduce(s, a.request));
      requests.push_back(a.request);
      removal.push_back(a.request);
      anchor.push_back(static_cast<std::int64_t>(a.after_pickup) * v + a.after_delivery);
      rewards.push_back(static_cast<float>(step.rewards[i]));
      recorded.push_back(step.log_probs[i]);
    }
  }
  const auto batch = nn::make_state_batch(states);
  const auto inputs = nn::make_reinsertion_inputs(views, requests);
  const auto removal_t = torch::tensor(removal, torch::kInt64);
  const auto anchor_t = torch::tensor(anchor, torch::kInt64);
  const auto rewards_t = torch::tensor(rewards).view({n, b});
  const auto bootstrap = nn::make_state_batch(segment.bootstrap);

  UpdateStats stats;
  torch::Tensor old_log_prob, old_values;
  {
    // pi_old and v_old: the parameters that collected the segment.
    torch::NoGradGuard no_grad;
    const auto eval = nn::evaluate_actions(actor, batch, removal_t, anchor_t, inputs);
    old_log_prob = eval.log_prob;
    old_values = critic->forward(eval.embeddings, batch.best_cost);
    const auto behaviour = torch::tensor(recorded, torch::kFloat64);
    stats.behaviour_log_prob_gap =
        (old_log_prob.to(torch::kFloat64) - behaviour).abs().max().item<double>();
  }

  for (int pass = 0; pass < config.ppo_epochs; ++pass) {
    const auto eval = nn::evaluate_actions(actor, batch, removal_t, anchor_t, inputs);
    const auto values = critic->forward(eval.embeddings.detach(), batch.best_cost);
    torch::Tensor bootstrap_values;
    {
      torch::NoGradGuard no_grad;
      const auto h = actor->encoder->forward(bootstrap.coords, bootstrap.positions).embeddings;
      bootstrap_values = critic->forward(h, bootstrap.best_cost);
    }
    const auto returns =
        discounted_returns(rewards_t, bootstrap_values, config.gamma).reshape({-1});
    const auto advantages = returns - values.detach();
    const auto objective = ppo_surrogate(eval.log_prob, old_log_prob, advantages, config.clip_epsilon);
    const auto value_loss = clipped_value_loss(values, old_values, returns, config.clip_epsilon);
    if (pass == 0) {
      stats.first_pass_ratio_deviation =
          (torch::exp(eval.log_prob.detach() - old_log_prob) - 1.0).abs().max().item<double>();
    }

    stats.policy_objective = objective.item<double>();
    stats.value_loss = value_loss.item<double>();
    stats.entropy = eval.entropy.mean().item<double>();
    require_finite(stats.policy_objective, "policy objective", stats);
    require_finite(stats.value_loss, "value loss", stats);

    actor_optimizer.zero_grad();
    (-objective).backward();
    stats.actor_grad_norm =
        torch::nn::utils::clip_grad_norm_(actor->parameters(), config.max_grad_norm);
    require_finite(stats.actor_grad_norm, "actor gradient", stats);
    stats.actor_grad_norm_clipped = gradient_norm(actor->parameters());
    actor_optimizer.step();

    critic_optimizer.zero_grad();
    value_loss.backward();
    stats.critic_grad_norm =
        torch::nn::utils::clip_grad_norm_(critic->parameters(), config.max_grad_norm);
    require_finite(stats.critic_grad_norm, "critic gradient", stats);
    stats.critic_grad_norm_clipped = gradient_norm(critic->parameters());
    critic_optimizer.step();
  }
  return stats;
}

Trainer::Trainer(TrainConfig config, std::filesystem::path output_dir)
    : config_(std::move(config)), output_dir_(std::move(output_dir)) {
  config_.validate();
  torch::manual_seed(config_.seed);
  learner_ = std::make_unique<PpoLearner>(config_.model, config_.lr_actor, config_.lr_critic);
  if (!output_dir_.empty()) std::filesystem::create_directories(output_dir_);
}

EpochMetrics Trainer::run_epoch() {
  const auto start = std::chrono::steady_clock::now();
  const int epoch = completed_epochs_ + 1;
  const int size = config_.batch_size;
  const int window = config_.effective_history_window();

  EpochMetrics m;
  m.epoch = epoch;
  m.lr_actor = decayed_learning_rate(config_.lr_actor, config_.lr_decay, completed_epochs_);
  m.lr_critic = decayed_learning_rate(config_.lr_critic, config_.lr_decay, completed_epochs_);
  m.warmup_steps = curriculum_steps(epoch, config_.curriculum_rho);
  learner_->set_learning_rates(m.lr_actor, m.lr_critic);
  nn::PairPolicy policy(learner_->actor);

  const std::uint64_t instance_base = derive_seed(config_.seed, 0);
  const std::uint64_t policy_base = derive_seed(config_.seed, 1);
  for (int batch = 0; batch < config_.batches_per_epoch; ++batch) {
    std::vector<SearchState> envs;
    std::vector<Rng> rngs;
    envs.reserve(size);
    for (int i = 0; i < size; ++i) {
      const std::uint64_t stream =
          (static_cast<std::uint64_t>(epoch - 1) * config_.batches_per_epoch + batch) * size + i;
      auto instance = std::make_shared<const Instance>(
          generate_instance(config_.num_requests, derive_seed(instance_base, stream),
                            config_.variant));
      rngs.emplace_back(derive_seed(policy_base, stream));
      Route route = random_initial_solution(*instance, config_.variant, rngs.back());
      envs.emplace_back(std::move(instance), std::move(route), window);
    }
    if (m.warmup_steps > 0) {
      auto routes = curriculum_warmup(envs, policy, rngs, m.warmup_steps);
      for (int i = 0; i < size; ++i) {
        envs[i] = SearchState(envs[i].instance_ptr(), std::move(routes[i]), window);
      }
    }

    EpochMetrics bm;
    std::vector<double> initial(size);
    for (int i = 0; i < size; ++i) initial[i] = envs[i].cost();
    int segments = 0;
    for (int t = 0; t < config_.rollout_steps; t += config_.n_step) {
      const Segment segment = collect_segment(envs, policy, rngs, config_.n_step);
      const UpdateStats s = learner_->update(segment, config_);
      bm.policy_objective += s.policy_objective;
      bm.value_loss += s.value_loss;
      bm.entropy += s.entropy;
      bm.actor_grad_norm += s.actor_grad_norm;
      bm.critic_grad_norm += s.critic_grad_norm;
      ++segments;
    }
    for (double* x : {&bm.policy_objective, &bm.value_loss, &bm.entropy, &bm.actor_grad_norm,
                      &bm.critic_grad_norm}) {
      *x /= segments;
    }
    for (int i = 0; i < size; ++i) {
      bm.mean_initial_cost += initial[i] / size;
      bm.mean_best_cost += envs[i].best_cost() / size;
      bm.mean_improvement += (initial[i] - envs[i].best_cost()) / initial[i] / size;
    }
    bm.lr_actor = m.lr_actor;
    bm.lr_critic = m.lr_critic;
    log_batch(epoch, batch, bm);

    const double w = 1.0 / config_.batches_per_epoch;
    m.mean_initial_cost += w * bm.mean_initial_cost;
    m.mean_best_cost += w * bm.mean_best_cost;
    m.mean_improvement += w * bm.mean_improvement;
    m.policy_objective += w * bm.policy_objective;
    m.value_loss += w * bm.value_loss;
    m.entropy += w * bm.entropy;
    m.actor_grad_norm += w * bm.actor_grad_norm;
    m.critic_grad_norm += w * bm.critic_grad_norm;
  }

  completed_epochs_ = epoch;
  m.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!output_dir_.empty() &&
      (epoch % config_.checkpoint_every == 0 || epoch == config_.epochs)) {
    save(checkpoint_path(output_dir_, epoch));
  }
  return m;
}

std::vector<EpochMetrics> Trainer::run(const std::function<void(const EpochMetrics&)>& on_epoch) {
  std::vector<EpochMetrics> all;
  while (completed_epochs_ < config_.epochs) {
    all.push_back(run_epoch());
    if (on_epoch) on_epoch(all.back());
  }
  return all;
}

void Trainer::log_batch(int epoch, int batch, const EpochMetrics& m) const {
  if (output_dir_.empty()) return;
  const auto path = output_dir_ / "train_log.tsv";
  const bool fresh = !std::filesystem::exists(path);
  std::ofstream os(path, std::ios::app);
  if (!os) throw std::runtime_error("cannot append to " + path.string());
  if (fresh) {
    os << "epoch\tbatch\tmean_initial_cost\tmean_best_cost\tmean_improvement\tpolicy_objective"
          "\tvalue_loss\tentropy\tactor_grad_norm\tcritic_grad_norm\tlr_actor\tlr_critic\n";
  }
  os << epoch << '\t' << batch << '\t' << m.mean_initial_cost << '\t' << m.mean_best_cost << '\t'
     << m.mean_improvement << '\t' << m.policy_objective << '\t' << m.value_loss << '\t'
     << m.entropy << '\t' << m.actor_grad_norm << '\t' << m.critic_grad_norm << '\t'
     << m.lr_actor << '\t' << m.lr_critic << '\n';
}

void Trainer::save(const std::filesystem::path& path) const {
  nn::Checkpoint ck;
  ck.meta["kind"] = "trainer";
  ck.meta["model"] = config_.model;
  ck.meta["train"] = config_;
  ck.meta["epochs_completed"] = completed_epochs_;
  nn::export_module(*learner_->actor, "actor", ck);
  nn::export_module(*learner_->critic, "critic", ck);
  ck.tensors["optim.actor"] = serialize_optimizer(learner_->actor_optimizer);
  ck.tensors["optim.critic"] = serialize_optimizer(learner_->critic_optimizer);
  nn::write_checkpoint(path.string(), ck);
}

void Trainer::load(const std::filesystem::path& path) {
  const auto ck = nn::read_checkpoint(path.string());
  if (ck.meta.value("kind", "") != "trainer") {
    throw nn::CheckpointError("'" + path.string() + "' is not a trainer checkpoint");
  }
  const auto model = ck.meta.at("model").get<nn::ModelConfig>();
  if (nlohmann::json(model) != nlohmann::json(config_.model)) {
    throw nn::CheckpointError("checkpoint model config " + nlohmann::json(model).dump() +
                              " does not match " + nlohmann::json(config_.model).dump());
  }
  nn::import_module(*learner_->actor, "actor", ck);
  nn::import_module(*learner_->critic, "critic", ck);
  restore_optimizer(learner_->actor_optimizer, ck, "optim.actor");
  restore_optimizer(learner_->critic_optimizer, ck, "optim.critic");
  completed_epochs_ = ck.meta.at("epochs_completed").get<int>();
}

bool Trainer::resume() {
  if (output_dir_.empty()) return false;
  const auto latest = latest_checkpoint(output_dir_);
  if (!latest) return false;
  load(*latest);
  return true;
}

std::filesystem::path checkpoint_path(const std::filesystem::path& dir, int epoch) {
  char name[64];
  std::snprintf(name, sizeof(name), "checkpoint-epoch-%04d.n2s", epoch);
  return dir / name;
}

std::optional<std::filesystem::path> latest_checkpoint(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) return std::nullopt;
  static const std::regex pattern(R"(checkpoint-epoch-(\d+)\.n2s)");
  std::optional<std::filesystem::path> best;
  int best_epoch = -1;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::smatch match;
    const std::string name = entry.path().filename().string();
    if (std::regex_match(name, match, pattern)) {
      const int epoch = std::stoi(match[1].str());
      if (epoch > best_epoch) {
        best_epoch = epoch;
        best = entry.path();
      }
    }
  }
  return best;
}

nn::N2SActor load_actor(const std::filesystem::path& checkpoint) {
  const auto ck = nn::read_checkpoint(checkpoint.string());
  if (!ck.meta.contains("model")) {
    throw nn::CheckpointError("'" + checkpoint.string() + "' has no model config");
  }
  nn::N2SActor actor(ck.meta.at("model").get<nn::ModelConfig>());
  nn::import_module(*actor, "actor", ck);
  return actor;
}

}  // namespace n2s::train
