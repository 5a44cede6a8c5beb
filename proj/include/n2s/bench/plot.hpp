#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "n2s/core/feasibility.hpp"
#include "n2s/core/instance.hpp"
#include "n2s/core/route.hpp"

namespace n2s::bench {

class InfeasibleRouteError : public std::runtime_error {
 public:
  InfeasibleRouteError(const std::string& what, int position, ViolationKind kind)
      : std::runtime_error(what), position_(position), kind_(kind) {}
  int position() const { return position_; }
  ViolationKind kind() const { return kind_; }

 private:
  int position_;
  ViolationKind kind_;
};

// Throws InfeasibleRouteError naming the first offending position.
void require_feasible(const Instance& instance, const Route& route, Variant variant);

// Depot as a square, pickups as circles, deliveries as diamonds; arrows follow
// the tour and the title carries the cost. Output is byte-stable.
std::string render_svg(const Instance& instance, const Route& route, const std::string& title);

// Checks feasibility under `variant`, then writes the SVG.
void plot_route(const Instance& instance, const Route& route, Variant variant,
                const std::filesystem::path& out_path, const std::string& title = "");

// Whitespace-separated node ids, depot first.
Route parse_route(const std::string& text);

}  // namespace n2s::bench
