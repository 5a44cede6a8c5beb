#include "n2s/core/route.hpp"

#include <stdexcept>
#include <string>

#include "n2s/core/feasibility.hpp"

namespace n2s {

Route::Route(std::vector<int> order) : order_(std::move(order)) {
  const int size = static_cast<int>(order_.size());
  if (size < 3 || size % 2 == 0) {
    throw std::invalid_argument("route must hold 2n+1 nodes, got " +
                                std::to_string(size));
  }
  if (order_[0] != 0) throw std::invalid_argument("route must start at the depot");
  pos_.assign(size, -1);
  for (int t = 0; t < size; ++t) {
    const int node = order_[t];
    if (node < 0 || node >= size || pos_[node] != -1) {
      throw std::invalid_argument("route is not a permutation of 0.." +
                                  std::to_string(size - 1));
    }
    pos_[node] = t;
  }
}

int Route::succ(int node) const {
  const int t = pos_[node] + 1;
  return order_[t == size() ? 0 : t];
}

int Route::pred(int node) const {
  const int t = pos_[node];
  return order_[t == 0 ? size() - 1 : t - 1];
}

ReducedRoute::ReducedRoute(std::vector<int> order, int node_count)
    : order_(std::move(order)), pos_(node_count, -1) {
  if (order_.empty() || order_[0] != 0) {
    throw std::invalid_argument("reduced route must start at the depot");
  }
  for (int t = 0; t < size(); ++t) {
    const int node = order_[t];
    if (node < 0 || node >= node_count || pos_[node] != -1) {
      throw std::invalid_argument("reduced route holds an invalid or repeated node");
    }
    pos_[node] = t;
  }
}

int ReducedRoute::succ(int node) const {
  const int t = pos_[node] + 1;
  return order_[t == size() ? 0 : t];
}

int ReducedRoute::pred(int node) const {
  const int t = pos_[node];
  return order_[t == 0 ? size() - 1 : t - 1];
}

double objective(const Instance& instance, const Route& route) {
  const auto& order = route.order();
  double total = 0.0;
  for (std::size_t t = 0; t + 1 < order.size(); ++t) {
    total += instance.distance(order[t], order[t + 1]);
  }
  return total + instance.distance(order.back(), order.front());
}

ReducedRoute remove_request(const Route& route, int request) {
  const int n = route.num_requests();
  if (request < 1 || request > n) {
    throw std::invalid_argument("remove_request: request id out of range");
  }
  std::vector<int> order;
  order.reserve(route.size() - 2);
  for (int node : route.order()) {
    if (node != request && node != request + n) order.push_back(node);
  }
  return ReducedRoute(std::move(order), route.size());
}

Route reinsert(const ReducedRoute& reduced, int request, int after_pickup,
               int after_delivery) {
  const int n = (reduced.node_count() - 1) / 2;
  const int pickup = request;
  const int delivery = request + n;
  if (reduced.contains(pickup) || reduced.contains(delivery)) {
    throw std::invalid_argument("reinsert: request is still in the route");
  }
  if (after_pickup < 0 || after_pickup >= reduced.node_count() ||
      after_delivery < 0 || after_delivery >= reduced.node_count() ||
      !reduced.contains(after_pickup) || !reduced.contains(after_delivery)) {
    throw std::invalid_argument("reinsert: anchor is not in the reduced route");
  }
  std::vector<int> order;
  order.reserve(reduced.node_count());
  for (int node : reduced.order()) {
    order.push_back(node);
    if (node == after_pickup) order.push_back(pickup);
    if (node == after_delivery) order.push_back(delivery);
  }
  return Route(std::move(order));
}

Route apply_action(const Route& route, const PairAction& action, Variant variant) {
  Route next = reinsert(remove_request(route, action.request), action.request,
                        action.after_pickup, action.after_delivery);
  if (!is_feasible(next, variant)) {
    throw ConstraintViolation("apply_action: move yields an infeasible " +
                              std::string(to_string(variant)) + " route");
  }
  return next;
}

}  // namespace n2s
