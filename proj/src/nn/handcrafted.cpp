#include "n2s/nn/handcrafted.hpp"

#include <limits>
#include <stdexcept>

namespace n2s::nn {
namespace {

double reduced_length(const Instance& instance, const ReducedRoute& reduced) {
  double total = 0.0;
  for (int t = 0; t < reduced.size(); ++t) {
    total += instance.distance(reduced.at(t), reduced.at((t + 1) % reduced.size()));
  }
  return total;
}

void check_epsilon(const DecoderChoice& choice) {
  if (choice.kind == DecoderKind::kEpsGreedy &&
      (choice.epsilon < 0.0 || choice.epsilon > 1.0)) {
    throw std::invalid_argument("epsilon must lie in [0, 1]");
  }
  if (choice.kind == DecoderKind::kLearned) {
    throw std::invalid_argument("learned decoders have no hand-crafted distribution");
  }
}

}  // namespace

int greedy_removal(const Instance& instance, const Route& route) {
  int best = 1;
  double best_length = std::numeric_limits<double>::infinity();
  for (int r = 1; r <= instance.num_requests(); ++r) {
    const double length = reduced_length(instance, remove_request(route, r));
    if (length < best_length) {
      best_length = length;
      best = r;
    }
  }
  return best;
}

double insertion_delta(const Instance& instance, const ReducedRoute& reduced, int request,
                       int after_pickup, int after_delivery) {
  const int pickup = instance.pickup(request);
  const int delivery = instance.delivery(request);
  const int j = after_pickup;
  const int k = after_delivery;
  const int sj = reduced.succ(j);
  if (j == k) {
    return instance.distance(j, pickup) + instance.distance(pickup, delivery) +
           instance.distance(delivery, sj) - instance.distance(j, sj);
  }
  const int sk = reduced.succ(k);
  return instance.distance(j, pickup) + instance.distance(pickup, sj) - instance.distance(j, sj) +
         instance.distance(k, delivery) + instance.distance(delivery, sk) -
         instance.distance(k, sk);
}

std::pair<int, int> greedy_reinsertion(const Instance& instance, const ReducedRoute& reduced,
                                       int request, const AnchorMask& mask) {
  std::pair<int, int> best{-1, -1};
  double best_delta = std::numeric_limits<double>::infinity();
  const int v = mask.node_count();
  for (int j = 0; j < v; ++j) {
    for (int k = 0; k < v; ++k) {
      if (!mask(j, k)) continue;
      const double delta = insertion_delta(instance, reduced, request, j, k);
      if (delta < best_delta) {
        best_delta = delta;
        best = {j, k};
      }
    }
  }
  if (best.first < 0) throw std::logic_error("greedy_reinsertion: empty feasible set");
  return best;
}

std::vector<double> handcrafted_removal_distribution(const DecoderChoice& choice,
                                                     const Instance& instance,
                                                     const Route& route) {
  check_epsilon(choice);
  const int n = instance.num_requests();
  const double eps = choice.kind == DecoderKind::kRandom ? 1.0 : choice.epsilon;
  std::vector<double> probs(n, eps / n);
  if (eps < 1.0) probs[greedy_removal(instance, route) - 1] += 1.0 - eps;
  return probs;
}

std::vector<double> handcrafted_reinsertion_distribution(const DecoderChoice& choice,
                                                         const Instance& instance,
                                                         const ReducedRoute& reduced,
                                                         int request, const AnchorMask& mask) {
  check_epsilon(choice);
  const int v = mask.node_count();
  const double eps = choice.kind == DecoderKind::kRandom ? 1.0 : choice.epsilon;
  const int feasible = mask.count();
  if (feasible == 0) throw std::logic_error("reinsertion: empty feasible set");
  std::vector<double> probs(static_cast<std::size_t>(v) * v, 0.0);
  for (std::size_t c = 0; c < probs.size(); ++c) {
    if (mask.cells()[c]) probs[c] = eps / feasible;
  }
  if (eps < 1.0) {
    const auto [j, k] = greedy_reinsertion(instance, reduced, request, mask);
    probs[static_cast<std::size_t>(j) * v + k] += 1.0 - eps;
  }
  return probs;
}

std::size_t sample_index(const std::vector<double>& probs, Rng& rng) {
  const double u = uniform_unit(rng);
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    cumulative += probs[i];
    last_positive = i;
    if (u < cumulative) return i;
  }
  // Rounding left u beyond the accumulated mass.
  return last_positive;
}

std::size_t argmax_index(const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

}  // namespace n2s::nn
