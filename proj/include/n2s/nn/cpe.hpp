#pragma once

#include <cstdint>

#include <torch/torch.h>

namespace n2s::nn {

// Cyclic positional encoding table, one row per tour position 0..num_nodes-1.
//
// Dimension d uses period T_d: the low half of the dimensions interpolate
// between num_nodes^(1/floor(dim/2)) and num_nodes in steps of three, the
// high half use num_nodes. Position i maps to z(i) = (i / |V|) * T_d *
// ceil(|V| / T_d) and the entry is sin (even d) or cos (odd d) of
// (2 pi / T_d) * |(z mod 2 T_d) - T_d|, so the pattern closes on itself
// after one lap of the tour.
torch::Tensor cyclic_positional_encoding(std::int64_t num_nodes, std::int64_t dim,
                                         torch::Dtype dtype = torch::kFloat64);

// Period T_d of dimension d.
double cpe_period(std::int64_t num_nodes, std::int64_t dim, std::int64_t d);

}  // namespace n2s::nn
