#include "n2s/core/exact.hpp"

#include <limits>
#include <string>
#include <vector>

namespace n2s {
namespace {

class Enumerator {
 public:
  Enumerator(const Instance& instance, Variant variant)
      : instance_(instance),
        variant_(variant),
        n_(instance.num_requests()),
        placed_(instance.num_nodes(), false) {
    prefix_.reserve(instance.num_nodes());
    prefix_.push_back(0);
  }

  void run() { extend(0.0); }

  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<int> best_order;
  std::int64_t count = 0;

 private:
  // Candidates are tried in increasing node id, so tours are visited in
  // lexicographic order and a strict improvement test keeps the smallest tie.
  void extend(double length) {
    const int last = prefix_.back();
    if (static_cast<int>(prefix_.size()) == instance_.num_nodes()) {
      ++count;
      const double total = length + instance_.distance(last, 0);
      if (total < best_cost) {
        best_cost = total;
        best_order = prefix_;
      }
      return;
    }
    for (int node = 1; node < instance_.num_nodes(); ++node) {
      if (placed_[node]) continue;
      const bool is_pickup = node <= n_;
      if (!is_pickup) {
        const int request = node - n_;
        if (!placed_[request]) continue;
        if (variant_ == Variant::kPdtspLifo &&
            (stack_.empty() || stack_.back() != request)) {
          continue;
        }
      }
      placed_[node] = true;
      prefix_.push_back(node);
      const bool lifo = variant_ == Variant::kPdtspLifo;
      if (lifo) {
        if (is_pickup) {
          stack_.push_back(node);
        } else {
          stack_.pop_back();
        }
      }
      extend(length + instance_.distance(last, node));
      if (lifo) {
        if (is_pickup) {
          stack_.pop_back();
        } else {
          stack_.push_back(node - n_);
        }
      }
      prefix_.pop_back();
      placed_[node] = false;
    }
  }

  const Instance& instance_;
  Variant variant_;
  int n_;
  std::vector<bool> placed_;
  std::vector<int> prefix_;
  // Loaded requests, maintained for the LIFO variant only.
  std::vector<int> stack_;
};

}  // namespace

ExactSolution brute_force_solve(const Instance& instance, Variant variant) {
  if (instance.num_requests() > kMaxExactRequests) {
    throw SizeLimitError("brute_force_solve: n = " +
                         std::to_string(instance.num_requests()) +
                         " exceeds the enumeration limit of " +
                         std::to_string(kMaxExactRequests));
  }
  Enumerator enumerator(instance, variant);
  enumerator.run();
  return ExactSolution{enumerator.best_cost, Route(std::move(enumerator.best_order)),
                       enumerator.count};
}

}  // namespace n2s
