#pragma once

#include <memory>
#include <span>
#include <vector>

#include <torch/torch.h>

#include "n2s/core/feasibility.hpp"
#include "n2s/core/instance.hpp"
#include "n2s/core/route.hpp"
#include "n2s/core/search_state.hpp"

namespace n2s::nn {

// Frozen copy of everything the networks read from a search state.
struct StateSnapshot {
  std::shared_ptr<const Instance> instance;
  Route route;
  // n rows of {window count, chosen 1 step ago, 2 steps ago, 3 steps ago}.
  std::vector<float> history;
  double best_cost = 0.0;
};

std::vector<float> history_features(const ActionHistory& history, int num_requests);
StateSnapshot snapshot(const SearchState& state);

// Batched tensors for states of equal size.
struct StateBatch {
  torch::Tensor coords;     // [B, V, 2]
  torch::Tensor positions;  // [B, V] int64, tour index of each node
  torch::Tensor pred;       // [B, V] int64, cyclic predecessor of each node
  torch::Tensor succ;       // [B, V] int64, cyclic successor of each node
  torch::Tensor history;    // [B, n, 4]
  torch::Tensor best_cost;  // [B]
};

StateBatch make_state_batch(std::span<const StateSnapshot> states,
                            torch::Dtype dtype = torch::kFloat32);

// Everything the reinsertion head needs once a request has been picked.
struct ReinsertionInputs {
  torch::Tensor request;       // [B] int64
  torch::Tensor reduced_succ;  // [B, V] int64
  torch::Tensor mask;          // [B, V, V] bool
};

struct ReducedView {
  ReducedRoute reduced;
  AnchorMask mask;
};

ReducedView reduce(const StateSnapshot& state, int request);

ReinsertionInputs make_reinsertion_inputs(std::span<const ReducedView> views,
                                          std::span<const int> requests);

}  // namespace n2s::nn
