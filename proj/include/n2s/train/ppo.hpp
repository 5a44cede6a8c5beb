#pragma once

#include <stdexcept>
#include <string>

#include <torch/torch.h>

namespace n2s::train {

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// n-step bootstrapped returns. rewards: [n, B]; bootstrap: [B] value of the
// state after the last step. R_n = bootstrap, R_t = r_t + gamma * R_{t+1}.
torch::Tensor discounted_returns(const torch::Tensor& rewards, const torch::Tensor& bootstrap,
                                 double gamma);

// Mean over all entries of min(ratio * A, clip(ratio, 1 - eps, 1 + eps) * A)
// with ratio = exp(log_prob - old_log_prob). Advantages are treated as
// constants. The value is to be maximized.
torch::Tensor ppo_surrogate(const torch::Tensor& log_prob, const torch::Tensor& old_log_prob,
                            const torch::Tensor& advantages, double epsilon);

// Mean over all entries of max(|v - R|, |clip(v, v_old - eps, v_old + eps) - R|)^2.
torch::Tensor clipped_value_loss(const torch::Tensor& values, const torch::Tensor& old_values,
                                 const torch::Tensor& returns, double epsilon);

// Learning rate after `completed_epochs` decays of factor `decay`.
double decayed_learning_rate(double base, double decay, int completed_epochs);

// Curriculum warm-up length for 1-based epoch e: floor(e / rho).
int curriculum_steps(int epoch, double rho);

}  // namespace n2s::train
