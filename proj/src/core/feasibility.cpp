#include "n2s/core/feasibility.hpp"

#include <algorithm>
#include <stdexcept>

namespace n2s {

StackTrace lifo_stack_trace(const Route& route) {
  const int n = route.num_requests();
  StackTrace trace;
  trace.stacks.reserve(route.size());
  std::vector<int> stack;
  std::vector<bool> loaded(n + 1, false);
  for (int t = 0; t < route.size(); ++t) {
    const int node = route.at(t);
    if (node != 0) {
      if (node <= n) {
        stack.push_back(node);
        loaded[node] = true;
      } else {
        const int request = node - n;
        if (!loaded[request]) {
          trace.violation_position = t;
          trace.kind = ViolationKind::kPrecedence;
          return trace;
        }
        if (stack.empty() || stack.back() != request) {
          trace.violation_position = t;
          trace.kind = ViolationKind::kLifo;
          return trace;
        }
        stack.pop_back();
      }
    }
    trace.stacks.push_back(stack);
  }
  return trace;
}

bool satisfies_precedence(const Route& route) {
  const int n = route.num_requests();
  for (int r = 1; r <= n; ++r) {
    if (route.position(r) > route.position(r + n)) return false;
  }
  return true;
}

bool intervals_nested(const Route& route) {
  const int n = route.num_requests();
  for (int a = 1; a <= n; ++a) {
    const int a0 = route.position(a);
    const int a1 = route.position(a + n);
    for (int b = a + 1; b <= n; ++b) {
      const int b0 = route.position(b);
      const int b1 = route.position(b + n);
      const bool crossing = (a0 < b0 && b0 < a1 && a1 < b1) ||
                            (b0 < a0 && a0 < b1 && b1 < a1);
      if (crossing) return false;
    }
  }
  return true;
}

bool is_feasible(const Route& route, Variant variant) {
  if (!satisfies_precedence(route)) return false;
  return variant == Variant::kPdtsp || intervals_nested(route);
}

int AnchorMask::count() const {
  return static_cast<int>(std::count(cells_.begin(), cells_.end(), 1));
}

AnchorMask reinsertion_mask(const ReducedRoute& reduced, int request,
                            Variant variant) {
  const int node_count = reduced.node_count();
  const int n = (node_count - 1) / 2;
  if (request < 1 || request > n) {
    throw std::invalid_argument("reinsertion_mask: request id out of range");
  }
  if (reduced.contains(request) || reduced.contains(request + n)) {
    throw std::invalid_argument(
        "reinsertion_mask: request nodes are still in the route");
  }
  AnchorMask mask(node_count);
  const int size = reduced.size();
  for (int a = 0; a < size; ++a) {
    const int j = reduced.at(a);
    if (variant == Variant::kPdtsp) {
      for (int b = a; b < size; ++b) mask.set(j, reduced.at(b), true);
      continue;
    }
    // The stretch strictly between the two insertion points must hold only
    // complete requests, otherwise the new pair crosses one of them.
    int open = 0;
    mask.set(j, j, true);
    for (int b = a + 1; b < size; ++b) {
      const int node = reduced.at(b);
      if (node <= n) {
        ++open;
      } else if (reduced.position(node - n) > a) {
        --open;
      } else {
        break;
      }
      if (open == 0) mask.set(j, node, true);
    }
  }
  return mask;
}

Route random_initial_solution(const Instance& instance, Variant variant, Rng& rng) {
  const int n = instance.num_requests();
  std::vector<int> order{0};
  order.reserve(instance.num_nodes());
  std::vector<bool> placed(instance.num_nodes(), false);
  std::vector<int> stack;
  std::vector<int> candidates;
  candidates.reserve(instance.num_nodes());
  for (int step = 0; step < 2 * n; ++step) {
    candidates.clear();
    for (int r = 1; r <= n; ++r) {
      if (!placed[r]) candidates.push_back(r);
    }
    if (variant == Variant::kPdtspLifo) {
      if (!stack.empty()) candidates.push_back(stack.back() + n);
    } else {
      for (int r = 1; r <= n; ++r) {
        if (placed[r] && !placed[r + n]) candidates.push_back(r + n);
      }
    }
    const int node = candidates[uniform_index(rng, candidates.size())];
    placed[node] = true;
    order.push_back(node);
    if (node <= n) {
      stack.push_back(node);
    } else if (variant == Variant::kPdtspLifo) {
      stack.pop_back();
    }
  }
  return Route(std::move(order));
}

Route random_initial_solution(const Instance& instance, Variant variant,
                              std::uint64_t seed) {
  Rng rng(seed);
  return random_initial_solution(instance, variant, rng);
}

}  // namespace n2s
