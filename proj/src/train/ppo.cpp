#include "n2s/train/ppo.hpp"

#include <cmath>

namespace n2s::train {

torch::Tensor discounted_returns(const torch::Tensor& rewards, const torch::Tensor& bootstrap,
                                 double gamma) {
  if (rewards.dim() != 2 || bootstrap.dim() != 1 || rewards.size(1) != bootstrap.size(0)) {
    throw std::invalid_argument("discounted_returns: expected rewards [n, B] and bootstrap [B]");
  }
  const auto n = rewards.size(0);
  std::vector<torch::Tensor> out(n);
  auto running = bootstrap;
  for (auto t = n - 1; t >= 0; --t) {
    running = rewards[t] + gamma * running;
    out[t] = running;
  }
  return torch::stack(out);
}

torch::Tensor ppo_surrogate(const torch::Tensor& log_prob, const torch::Tensor& old_log_prob,
                            const torch::Tensor& advantages, double epsilon) {
  const auto adv = advantages.detach();
  const auto ratio = torch::exp(log_prob - old_log_prob.detach());
  const auto clipped = torch::clamp(ratio, 1.0 - epsilon, 1.0 + epsilon);
  return torch::min(ratio * adv, clipped * adv).mean();
}

torch::Tensor clipped_value_loss(const torch::Tensor& values, const torch::Tensor& old_values,
                                 const torch::Tensor& returns, double epsilon) {
  const auto old = old_values.detach();
  const auto target = returns.detach();
  const auto clipped = old + torch::clamp(values - old, -epsilon, epsilon);
  const auto err = torch::max((values - target).abs(), (clipped - target).abs());
  return err.pow(2).mean();
}

double decayed_learning_rate(double base, double decay, int completed_epochs) {
  return base * std::pow(decay, completed_epochs);
}

int curriculum_steps(int epoch, double rho) {
  // The small slack keeps exact quotients such as 3 / 1.5 from rounding down.
  return static_cast<int>(std::floor(static_cast<double>(epoch) / rho + 1e-9));
}

}  // namespace n2s::train
