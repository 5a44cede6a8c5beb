#include "n2s/core/instance.hpp"

#include <cmath>
#include <string>

#include "n2s/core/random.hpp"

namespace n2s {

std::string_view to_string(Variant variant) {
  return variant == Variant::kPdtsp ? "pdtsp" : "pdtsp-lifo";
}

Variant parse_variant(std::string_view text) {
  if (text == "pdtsp" || text == "PDTSP") return Variant::kPdtsp;
  if (text == "pdtsp-lifo" || text == "pdtsp_lifo" || text == "PDTSP-LIFO" ||
      text == "PDTSP_LIFO") {
    return Variant::kPdtspLifo;
  }
  throw std::invalid_argument("unknown variant '" + std::string(text) + "'");
}

Instance::Instance(std::vector<Point> coords, Variant variant)
    : coords_(std::move(coords)), variant_(variant) {
  if (coords_.size() < 3 || coords_.size() % 2 == 0) {
    throw std::invalid_argument("instance needs 2n+1 nodes with n >= 1, got " +
                                std::to_string(coords_.size()));
  }
  for (const Point& p : coords_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("instance coordinates must be finite");
    }
  }
  num_requests_ = static_cast<int>(coords_.size() - 1) / 2;
  const int v = num_nodes();
  dist_.resize(static_cast<std::size_t>(v) * v);
  for (int a = 0; a < v; ++a) {
    for (int b = 0; b < v; ++b) {
      dist_[a * v + b] =
          std::hypot(coords_[a].x - coords_[b].x, coords_[a].y - coords_[b].y);
    }
  }
}

Instance generate_instance(int num_requests, std::uint64_t seed, Variant variant) {
  if (num_requests < 1) {
    throw std::invalid_argument("generate_instance: need at least one request");
  }
  Rng rng(seed);
  std::vector<Point> coords(2 * num_requests + 1);
  for (Point& p : coords) {
    p.x = uniform_unit(rng);
    p.y = uniform_unit(rng);
  }
  return Instance(std::move(coords), variant);
}

}  // namespace n2s
