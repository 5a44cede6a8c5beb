#include "n2s/nn/features.hpp"

#include <stdexcept>

namespace n2s::nn {
namespace {

torch::Tensor to_tensor(std::vector<std::int64_t>& data, std::vector<std::int64_t> shape) {
  return torch::from_blob(data.data(), shape, torch::kInt64).clone();
}

}  // namespace

std::vector<float> history_features(const ActionHistory& history, int num_requests) {
  std::vector<float> features(static_cast<std::size_t>(num_requests) * 4, 0.0f);
  for (int r = 1; r <= num_requests; ++r) {
    features[(r - 1) * 4] = static_cast<float>(history.count(r));
  }
  for (int back = 1; back <= 3; ++back) {
    if (const auto r = history.last(back)) features[(*r - 1) * 4 + back] = 1.0f;
  }
  return features;
}

StateSnapshot snapshot(const SearchState& state) {
  return StateSnapshot{state.instance_ptr(), state.route(),
                       history_features(state.history(), state.instance().num_requests()),
                       state.best_cost()};
}

StateBatch make_state_batch(std::span<const StateSnapshot> states, torch::Dtype dtype) {
  if (states.empty()) throw std::invalid_argument("make_state_batch: empty batch");
  const std::int64_t b = static_cast<std::int64_t>(states.size());
  const std::int64_t v = states.front().instance->num_nodes();
  const std::int64_t n = states.front().instance->num_requests();
  std::vector<double> coords(b * v * 2);
  std::vector<std::int64_t> positions(b * v), pred(b * v), succ(b * v);
  std::vector<float> history(b * n * 4);
  std::vector<double> best(b);
  for (std::int64_t i = 0; i < b; ++i) {
    const StateSnapshot& s = states[i];
    if (s.instance->num_nodes() != v) {
      throw std::invalid_argument("make_state_batch: mixed instance sizes");
    }
    for (std::int64_t x = 0; x < v; ++x) {
      const Point& p = s.instance->coord(static_cast<int>(x));
      coords[(i * v + x) * 2] = p.x;
      coords[(i * v + x) * 2 + 1] = p.y;
      positions[i * v + x] = s.route.position(static_cast<int>(x));
      pred[i * v + x] = s.route.pred(static_cast<int>(x));
      succ[i * v + x] = s.route.succ(static_cast<int>(x));
    }
    std::copy(s.history.begin(), s.history.end(), history.begin() + i * n * 4);
    best[i] = s.best_cost;
  }
  StateBatch batch;
  batch.coords = torch::from_blob(coords.data(), {b, v, 2}, torch::kFloat64).clone().to(dtype);
  batch.positions = to_tensor(positions, {b, v});
  batch.pred = to_tensor(pred, {b, v});
  batch.succ = to_tensor(succ, {b, v});
  batch.history = torch::from_blob(history.data(), {b, n, 4}, torch::kFloat32).clone().to(dtype);
  batch.best_cost = torch::from_blob(best.data(), {b}, torch::kFloat64).clone().to(dtype);
  return batch;
}

ReducedView reduce(const StateSnapshot& state, int request) {
  ReducedRoute reduced = remove_request(state.route, request);
  AnchorMask mask = reinsertion_mask(reduced, request, state.instance->variant());
  return ReducedView{std::move(reduced), std::move(mask)};
}

ReinsertionInputs make_reinsertion_inputs(std::span<const ReducedView> views,
                                          std::span<const int> requests) {
  const std::int64_t b = static_cast<std::int64_t>(views.size());
  const std::int64_t v = views.front().reduced.node_count();
  std::vector<std::int64_t> request(requests.begin(), requests.end());
  std::vector<std::int64_t> succ(b * v);
  auto mask = torch::zeros({b, v, v}, torch::kBool);
  auto mask_data = mask.accessor<bool, 3>();
  for (std::int64_t i = 0; i < b; ++i) {
    const ReducedRoute& reduced = views[i].reduced;
    for (std::int64_t x = 0; x < v; ++x) {
      const int node = static_cast<int>(x);
      succ[i * v + x] = reduced.contains(node) ? reduced.succ(node) : node;
    }
    const auto& cells = views[i].mask.cells();
    for (std::int64_t j = 0; j < v; ++j)
      for (std::int64_t k = 0; k < v; ++k) mask_data[i][j][k] = cells[j * v + k] != 0;
  }
  return ReinsertionInputs{to_tensor(request, {b}), to_tensor(succ, {b, v}), mask};
}

}  // namespace n2s::nn
