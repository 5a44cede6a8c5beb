#pragma once

#include <utility>
#include <vector>

#include "n2s/core/feasibility.hpp"
#include "n2s/core/instance.hpp"
#include "n2s/core/random.hpp"
#include "n2s/core/route.hpp"

namespace n2s::nn {

enum class DecoderKind { kLearned, kRandom, kEpsGreedy };

// Which decoder drives one half of the move (removal or reinsertion).
struct DecoderChoice {
  DecoderKind kind = DecoderKind::kLearned;
  double epsilon = 0.1;

  static DecoderChoice learned() { return {DecoderKind::kLearned, 0.0}; }
  static DecoderChoice random() { return {DecoderKind::kRandom, 1.0}; }
  static DecoderChoice eps_greedy(double epsilon) { return {DecoderKind::kEpsGreedy, epsilon}; }
};

// Request whose removal leaves the shortest tour; smallest id on ties.
int greedy_removal(const Instance& instance, const Route& route);

// Tour length change from splicing the request back at (j, k), relative to
// the reduced tour.
double insertion_delta(const Instance& instance, const ReducedRoute& reduced, int request,
                       int after_pickup, int after_delivery);

// Feasible anchors with the smallest resulting length; ties go to the
// smallest (j, k) in row-major node order.
std::pair<int, int> greedy_reinsertion(const Instance& instance, const ReducedRoute& reduced,
                                       int request, const AnchorMask& mask);

// Action distributions of the hand-crafted decoders. Random is uniform over
// the feasible set; epsilon-greedy puts 1 - epsilon on the greedy choice and
// spreads epsilon uniformly. Removal: n entries, request r at r-1.
// Reinsertion: V*V entries, anchor (j, k) at j*V + k, zero where masked.
std::vector<double> handcrafted_removal_distribution(const DecoderChoice& choice,
                                                     const Instance& instance,
                                                     const Route& route);
std::vector<double> handcrafted_reinsertion_distribution(const DecoderChoice& choice,
                                                         const Instance& instance,
                                                         const ReducedRoute& reduced,
                                                         int request, const AnchorMask& mask);

// Inverse-CDF draw from a probability vector.
std::size_t sample_index(const std::vector<double>& probs, Rng& rng);
// Largest entry, smallest index on ties.
std::size_t argmax_index(const std::vector<double>& values);

}  // namespace n2s::nn
