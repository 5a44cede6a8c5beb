#pragma once

#include <deque>
#include <memory>
#include <optional>
#include <vector>

#include "n2s/core/instance.hpp"
#include "n2s/core/route.hpp"

namespace n2s {

// Sliding window over the most recent removal choices.
class ActionHistory {
 public:
  ActionHistory(int num_requests, int window);

  void record(int request);

  int window_length() const { return window_length_; }
  const std::deque<int>& window() const { return window_; }
  // Occurrences of request inside the window.
  int count(int request) const { return counts_[request]; }
  // Request chosen `steps_back` steps ago (1 = most recent), if any.
  std::optional<int> last(int steps_back) const;

 private:
  int window_length_;
  std::deque<int> window_;
  std::vector<int> counts_;
};

// Non-negative reduction of the incumbent cost.
inline double reward(double prev_best_cost, double new_cost) {
  return prev_best_cost - (new_cost < prev_best_cost ? new_cost : prev_best_cost);
}

// Environment state: current tour, action history and incumbent.
class SearchState {
 public:
  SearchState(std::shared_ptr<const Instance> instance, Route initial,
              int history_window);

  const Instance& instance() const { return *instance_; }
  const std::shared_ptr<const Instance>& instance_ptr() const { return instance_; }
  Variant variant() const { return instance_->variant(); }
  const Route& route() const { return route_; }
  double cost() const { return cost_; }
  const Route& best_route() const { return best_route_; }
  double best_cost() const { return best_cost_; }
  const ActionHistory& history() const { return history_; }
  int steps() const { return steps_; }

  // Applies the action, updates history and incumbent, returns the reward.
  double step(const PairAction& action);

 private:
  std::shared_ptr<const Instance> instance_;
  Route route_;
  double cost_;
  Route best_route_;
  double best_cost_;
  ActionHistory history_;
  int steps_ = 0;
};

}  // namespace n2s
