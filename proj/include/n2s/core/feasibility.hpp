#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "n2s/core/instance.hpp"
#include "n2s/core/random.hpp"
#include "n2s/core/route.hpp"

namespace n2s {

enum class ViolationKind { kNone, kPrecedence, kLifo };

// Loading-stack simulation along a route: push at pickups, pop at
// deliveries. stacks[t] holds the request ids on board after visiting
// position t (bottom first). Simulation stops at the first violation.
struct StackTrace {
  std::vector<std::vector<int>> stacks;
  std::optional<int> violation_position;
  ViolationKind kind = ViolationKind::kNone;

  bool ok() const { return !violation_position.has_value(); }
};

StackTrace lifo_stack_trace(const Route& route);

bool satisfies_precedence(const Route& route);

// True iff every two request intervals [pos(i+), pos(i-)] are nested or
// disjoint. Assumes precedence holds.
bool intervals_nested(const Route& route);

bool is_feasible(const Route& route, Variant variant);

// Dense node-indexed boolean matrix over reinsertion anchors (j, k).
class AnchorMask {
 public:
  explicit AnchorMask(int node_count)
      : node_count_(node_count),
        cells_(static_cast<std::size_t>(node_count) * node_count, 0) {}

  int node_count() const { return node_count_; }
  bool operator()(int j, int k) const { return cells_[index(j, k)] != 0; }
  void set(int j, int k, bool value) { cells_[index(j, k)] = value ? 1 : 0; }
  int count() const;
  // Row-major cells, entry j * node_count + k.
  const std::vector<std::uint8_t>& cells() const { return cells_; }

 private:
  std::size_t index(int j, int k) const {
    return static_cast<std::size_t>(j) * node_count_ + k;
  }

  int node_count_;
  std::vector<std::uint8_t> cells_;
};

// Anchors (j, k) for which reinserting request into reduced gives a feasible
// tour. Throws std::invalid_argument if the request's nodes are still present.
AnchorMask reinsertion_mask(const ReducedRoute& reduced, int request,
                            Variant variant);

// Builds a tour left to right, choosing uniformly among nodes that keep the
// prefix completable.
Route random_initial_solution(const Instance& instance, Variant variant, Rng& rng);
Route random_initial_solution(const Instance& instance, Variant variant,
                              std::uint64_t seed);

}  // namespace n2s
