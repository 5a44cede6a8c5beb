#pragma once

#include <cstdint>
#include <stdexcept>

#include "n2s/core/instance.hpp"
#include "n2s/core/route.hpp"

namespace n2s {

class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct ExactSolution {
  double cost = 0.0;
  Route route;
  // Number of feasible tours enumerated.
  std::int64_t feasible_count = 0;
};

inline constexpr int kMaxExactRequests = 5;

// Exhaustive enumeration of feasible tours; ties go to the lexicographically
// smallest node sequence. Throws SizeLimitError above kMaxExactRequests.
ExactSolution brute_force_solve(const Instance& instance, Variant variant);

}  // namespace n2s
