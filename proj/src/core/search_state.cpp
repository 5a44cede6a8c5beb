#include "n2s/core/search_state.hpp"

#include <stdexcept>

namespace n2s {

ActionHistory::ActionHistory(int num_requests, int window)
    : window_length_(window), counts_(num_requests + 1, 0) {
  if (window < 0) throw std::invalid_argument("history window must be >= 0");
}

void ActionHistory::record(int request) {
  if (request < 1 || request >= static_cast<int>(counts_.size())) {
    throw std::invalid_argument("history: request id out of range");
  }
  if (window_length_ == 0) return;
  window_.push_back(request);
  ++counts_[request];
  if (static_cast<int>(window_.size()) > window_length_) {
    --counts_[window_.front()];
    window_.pop_front();
  }
}

std::optional<int> ActionHistory::last(int steps_back) const {
  if (steps_back < 1 || steps_back > static_cast<int>(window_.size())) {
    return std::nullopt;
  }
  return window_[window_.size() - steps_back];
}

SearchState::SearchState(std::shared_ptr<const Instance> instance, Route initial,
                         int history_window)
    : instance_(std::move(instance)),
      route_(initial),
      cost_(objective(*instance_, route_)),
      best_route_(std::move(initial)),
      best_cost_(cost_),
      history_(instance_->num_requests(), history_window) {
  if (route_.size() != instance_->num_nodes()) {
    throw std::invalid_argument("initial route does not match the instance size");
  }
}

double SearchState::step(const PairAction& action) {
  route_ = apply_action(route_, action, instance_->variant());
  cost_ = objective(*instance_, route_);
  const double r = reward(best_cost_, cost_);
  if (cost_ < best_cost_) {
    best_cost_ = cost_;
    best_route_ = route_;
  }
  history_.record(action.request);
  ++steps_;
  return r;
}

}  // namespace n2s
