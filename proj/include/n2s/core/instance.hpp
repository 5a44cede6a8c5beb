#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace n2s {

enum class Variant { kPdtsp, kPdtspLifo };

std::string_view to_string(Variant variant);
// Accepts "pdtsp" and "pdtsp-lifo" (also the underscore spelling).
Variant parse_variant(std::string_view text);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Thrown when a route or action would break the precedence / LIFO rules.
class ConstraintViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// One-to-one pickup-and-delivery instance with 2n+1 nodes.
//
// Node 0 is the depot, nodes 1..n are pickups and node i+n is the delivery
// partner of pickup i. Request ids run from 1 to n.
class Instance {
 public:
  Instance(std::vector<Point> coords, Variant variant);

  int num_requests() const { return num_requests_; }
  int num_nodes() const { return 2 * num_requests_ + 1; }
  Variant variant() const { return variant_; }
  const std::vector<Point>& coords() const { return coords_; }
  const Point& coord(int node) const { return coords_[node]; }

  int pickup(int request) const { return request; }
  int delivery(int request) const { return request + num_requests_; }
  bool is_pickup(int node) const { return node >= 1 && node <= num_requests_; }
  bool is_delivery(int node) const { return node > num_requests_; }
  // Request id of a non-depot node.
  int request_of(int node) const {
    return node > num_requests_ ? node - num_requests_ : node;
  }

  double distance(int a, int b) const { return dist_[a * num_nodes() + b]; }

 private:
  std::vector<Point> coords_;
  Variant variant_;
  int num_requests_;
  std::vector<double> dist_;
};

// Uniform coordinates in the unit square; deterministic for a fixed seed.
Instance generate_instance(int num_requests, std::uint64_t seed,
                           Variant variant = Variant::kPdtsp);

}  // namespace n2s
