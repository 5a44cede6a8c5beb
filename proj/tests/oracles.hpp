#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "n2s/core/instance.hpp"
#include "n2s/core/random.hpp"

namespace n2s::oracle {

// Every ordering of nodes 1..2n behind the depot, feasible or not.
inline void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> tail(2 * n);
  std::iota(tail.begin(), tail.end(), 1);
  std::vector<int> order(2 * n + 1, 0);
  do {
    std::copy(tail.begin(), tail.end(), order.begin() + 1);
    fn(order);
  } while (std::next_permutation(tail.begin(), tail.end()));
}

// Orders with every pickup before its delivery, built by recursion. With lifo
// set, a delivery is only allowed for the most recently opened request.
inline void for_each_precedence_order(
    int n, bool lifo, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> order{0};
  std::vector<int> open;
  std::vector<bool> used(2 * n + 1, false);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(order.size()) == 2 * n + 1) {
      fn(order);
      return;
    }
    for (int node = 1; node <= 2 * n; ++node) {
      if (used[node]) continue;
      if (node > n) {
        const int r = node - n;
        if (!used[r]) continue;
        if (lifo && (open.empty() || open.back() != r)) continue;
      }
      used[node] = true;
      order.push_back(node);
      std::vector<int> saved = open;
      if (node <= n) {
        open.push_back(node);
      } else {
        open.erase(std::find(open.begin(), open.end(), node - n));
      }
      rec();
      open = saved;
      order.pop_back();
      used[node] = false;
    }
  };
  rec();
}

// Direct stack replay: true iff every delivery finds its goods on top.
inline bool stack_replay_ok(const std::vector<int>& order, int n) {
  std::vector<int> stack;
  for (int node : order) {
    if (node == 0) continue;
    if (node <= n) {
      stack.push_back(node);
    } else {
      if (stack.empty() || stack.back() != node - n) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

inline bool precedence_ok(const std::vector<int>& order, int n) {
  std::vector<int> pos(order.size());
  for (std::size_t t = 0; t < order.size(); ++t) pos[order[t]] = static_cast<int>(t);
  for (int r = 1; r <= n; ++r) {
    if (pos[r] > pos[r + n]) return false;
  }
  return true;
}

// Tour length recomputed from raw coordinates.
inline double tour_length(const std::vector<Point>& coords, const std::vector<int>& order) {
  double total = 0.0;
  for (std::size_t t = 0; t < order.size(); ++t) {
    const Point& a = coords[order[t]];
    const Point& b = coords[order[(t + 1) % order.size()]];
    total += std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y));
  }
  return total;
}

// Uniformly shuffled precedence-feasible order (not LIFO-aware): shuffle all
// nodes then swap each violated pair.
inline std::vector<int> random_precedence_order(int n, Rng& rng) {
  std::vector<int> order(2 * n + 1);
  std::iota(order.begin(), order.end(), 0);
  for (int t = 2 * n; t > 1; --t) {
    const int s = 1 + static_cast<int>(uniform_index(rng, t));
    std::swap(order[t], order[s]);
  }
  std::vector<int> pos(order.size());
  for (std::size_t t = 0; t < order.size(); ++t) pos[order[t]] = static_cast<int>(t);
  for (int r = 1; r <= n; ++r) {
    if (pos[r] > pos[r + n]) {
      std::swap(order[pos[r]], order[pos[r + n]]);
      std::swap(pos[r], pos[r + n]);
    }
  }
  return order;
}

}  // namespace n2s::oracle
