#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>
#include <torch/torch.h>

namespace n2s::nn {

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File layout: magic "N2SCKPT", u32 format version, u64 header length, JSON
// header, then the raw little-endian tensor bytes in header order. The header
// lists each tensor's name, dtype, shape and byte offset and carries a free
// "meta" object for configs and counters.
struct Checkpoint {
  nlohmann::json meta = nlohmann::json::object();
  std::map<std::string, torch::Tensor> tensors;
};

inline constexpr std::uint32_t kCheckpointVersion = 1;

void write_checkpoint(const std::string& path, const Checkpoint& checkpoint);
Checkpoint read_checkpoint(const std::string& path);

// Parameters and buffers of a module, keyed "prefix.name".
void export_module(const torch::nn::Module& module, const std::string& prefix,
                   Checkpoint& checkpoint);
// Copies tensors back in place; every parameter and buffer must be present
// with a matching shape.
void import_module(torch::nn::Module& module, const std::string& prefix,
                   const Checkpoint& checkpoint);

}  // namespace n2s::nn
