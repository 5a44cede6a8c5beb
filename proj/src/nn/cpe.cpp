#include "n2s/nn/cpe.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace n2s::nn {

double cpe_period(std::int64_t num_nodes, std::int64_t dim, std::int64_t d) {
  const std::int64_t half = dim / 2;
  const double v = static_cast<double>(num_nodes);
  if (d >= half) return v;
  const double base = std::pow(v, 1.0 / static_cast<double>(half));
  const double step = static_cast<double>(3 * (d / 3) + 1) / static_cast<double>(dim);
  return step * (v - base) + base;
}

torch::Tensor cyclic_positional_encoding(std::int64_t num_nodes, std::int64_t dim,
                                         torch::Dtype dtype) {
  if (num_nodes < 1 || dim < 2) {
    throw std::invalid_argument("cyclic_positional_encoding: bad shape");
  }
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  std::vector<double> table(static_cast<std::size_t>(num_nodes * dim));
  const double v = static_cast<double>(num_nodes);
  for (std::int64_t d = 0; d < dim; ++d) {
    const double period = cpe_period(num_nodes, dim, d);
    const double omega = kTwoPi / period;
    const double laps = std::ceil(v / period);
    for (std::int64_t i = 0; i < num_nodes; ++i) {
      const double z = static_cast<double>(i) / v * period * laps;
      const double folded = std::abs(std::fmod(z, 2.0 * period) - period);
      const double angle = omega * folded;
      table[i * dim + d] = d % 2 == 0 ? std::sin(angle) : std::cos(angle);
    }
  }
  return torch::from_blob(table.data(), {num_nodes, dim}, torch::kFloat64)
      .clone()
      .to(dtype);
}

}  // namespace n2s::nn
