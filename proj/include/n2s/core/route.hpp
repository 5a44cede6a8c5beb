#pragma once

#include <cstddef>
#include <vector>

#include "n2s/core/instance.hpp"

namespace n2s {

// Cyclic tour stored as the node sequence starting at the depot. The closing
// return to the depot is implicit.
class Route {
 public:
  // Throws std::invalid_argument unless order is a permutation of
  // {0, ..., size-1} with an odd size and order[0] == 0.
  explicit Route(std::vector<int> order);

  int size() const { return static_cast<int>(order_.size()); }
  int num_requests() const { return (size() - 1) / 2; }
  const std::vector<int>& order() const { return order_; }
  int at(int index) const { return order_[index]; }
  // 0-based position of a node in the sequence.
  int position(int node) const { return pos_[node]; }
  const std::vector<int>& positions() const { return pos_; }

  // Cyclic neighbours; the depot's predecessor is the last node.
  int succ(int node) const;
  int pred(int node) const;

  bool operator==(const Route& other) const { return order_ == other.order_; }

 private:
  std::vector<int> order_;
  std::vector<int> pos_;
};

// A tour with one request's two nodes taken out. Node ids keep their labels;
// positions of the removed nodes are -1.
class ReducedRoute {
 public:
  // order must start at the depot and hold distinct ids below node_count.
  ReducedRoute(std::vector<int> order, int node_count);

  int size() const { return static_cast<int>(order_.size()); }
  int node_count() const { return static_cast<int>(pos_.size()); }
  const std::vector<int>& order() const { return order_; }
  int at(int index) const { return order_[index]; }
  bool contains(int node) const { return pos_[node] >= 0; }
  int position(int node) const { return pos_[node]; }
  int succ(int node) const;
  int pred(int node) const;

 private:
  std::vector<int> order_;
  std::vector<int> pos_;
};

// Removal/reinsertion move: take out request r, put its pickup right after
// node after_pickup and its delivery right after node after_delivery (both
// anchors refer to the route with the pair removed).
struct PairAction {
  int request = 0;
  int after_pickup = 0;
  int after_delivery = 0;

  bool operator==(const PairAction&) const = default;
};

double objective(const Instance& instance, const Route& route);

ReducedRoute remove_request(const Route& route, int request);

// Splices the pair back in. With equal anchors the result reads
// (..., j, pickup, delivery, ...).
Route reinsert(const ReducedRoute& reduced, int request, int after_pickup,
               int after_delivery);

// Remove + reinsert; throws ConstraintViolation if the result is not feasible
// for variant, std::invalid_argument on malformed anchors.
Route apply_action(const Route& route, const PairAction& action, Variant variant);

}  // namespace n2s
