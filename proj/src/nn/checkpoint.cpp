#include "n2s/nn/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace n2s::nn {
namespace {

constexpr char kMagic[8] = {'N', '2', 'S', 'C', 'K', 'P', 'T', '\0'};

static_assert(std::endian::native == std::endian::little, "checkpoint I/O assumes little endian");

std::string dtype_name(torch::Dtype dtype) {
  switch (dtype) {
    case torch::kFloat32: return "f32";
    case torch::kFloat64: return "f64";
    case torch::kInt64: return "i64";
    case torch::kInt32: return "i32";
    case torch::kBool: return "bool";
    case torch::kUInt8: return "u8";
    default: throw CheckpointError("unsupported tensor dtype in checkpoint");
  }
}

torch::Dtype parse_dtype(const std::string& name) {
  if (name == "f32") return torch::kFloat32;
  if (name == "f64") return torch::kFloat64;
  if (name == "i64") return torch::kInt64;
  if (name == "i32") return torch::kInt32;
  if (name == "bool") return torch::kBool;
  if (name == "u8") return torch::kUInt8;
  throw CheckpointError("unknown dtype '" + name + "' in checkpoint");
}

template <typename T>
void write_pod(std::ostream& os, T value) {
  os.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T read_pod(std::istream& is) {
  T value{};
  if (!is.read(reinterpret_cast<char*>(&value), sizeof(T))) {
    throw CheckpointError("truncated checkpoint header");
  }
  return value;
}

}  // namespace

void write_checkpoint(const std::string& path, const Checkpoint& checkpoint) {
  nlohmann::json header;
  header["meta"] = checkpoint.meta;
  header["tensors"] = nlohmann::json::array();
  std::vector<torch::Tensor> blobs;
  std::uint64_t offset = 0;
  for (const auto& [name, tensor] : checkpoint.tensors) {
    auto t = tensor.detach().to(torch::kCPU).contiguous();
    const std::uint64_t bytes = t.numel() * t.element_size();
    header["tensors"].push_back({{"name", name},
                                 {"dtype", dtype_name(t.scalar_type())},
                                 {"shape", t.sizes().vec()},
                                 {"offset", offset},
                                 {"bytes", bytes}});
    offset += bytes;
    blobs.push_back(std::move(t));
  }
  const std::string text = header.dump();

  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw CheckpointError("cannot open '" + tmp + "' for writing");
    os.write(kMagic, sizeof(kMagic));
    write_pod(os, kCheckpointVersion);
    write_pod(os, static_cast<std::uint64_t>(text.size()));
    os.write(text.data(), static_cast<std::streamsize>(text.size()));
    for (const auto& t : blobs) {
      os.write(static_cast<const char*>(t.data_ptr()),
               static_cast<std::streamsize>(t.numel() * t.element_size()));
    }
    if (!os) throw CheckpointError("write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw CheckpointError("cannot move checkpoint into place at '" + path + "'");
  }
}

Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw CheckpointError("cannot open checkpoint '" + path + "'");
  char magic[sizeof(kMagic)];
  if (!is.read(magic, sizeof(magic)) || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw CheckpointError("'" + path + "' is not an N2S checkpoint");
  }
  const auto version = read_pod<std::uint32_t>(is);
  if (version != kCheckpointVersion) {
    throw CheckpointError("checkpoint format version " + std::to_string(version) +
                          " is not supported (expected " +
                          std::to_string(kCheckpointVersion) + ")");
  }
  const auto length = read_pod<std::uint64_t>(is);
  std::string text(length, '\0');
  if (!is.read(text.data(), static_cast<std::streamsize>(length))) {
    throw CheckpointError("truncated checkpoint header");
  }
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError(std::string("corrupt checkpoint header: ") + e.what());
  }

  Checkpoint checkpoint;
  checkpoint.meta = header.value("meta", nlohmann::json::object());
  for (const auto& entry : header.at("tensors")) {
    const auto shape = entry.at("shape").get<std::vector<std::int64_t>>();
    auto t = torch::empty(shape, parse_dtype(entry.at("dtype").get<std::string>()));
    const auto bytes = entry.at("bytes").get<std::uint64_t>();
    if (bytes != static_cast<std::uint64_t>(t.numel() * t.element_size())) {
      throw CheckpointError("size mismatch for tensor '" + entry.at("name").get<std::string>() + "'");
    }
    if (!is.read(static_cast<char*>(t.data_ptr()), static_cast<std::streamsize>(bytes))) {
      throw CheckpointError("truncated tensor data in '" + path + "'");
    }
    checkpoint.tensors.emplace(entry.at("name").get<std::string>(), std::move(t));
  }
  return checkpoint;
}

void export_module(const torch::nn::Module& module, const std::string& prefix,
                   Checkpoint& checkpoint) {
  for (const auto& item : module.named_parameters()) {
    checkpoint.tensors[prefix + "." + item.key()] = item.value().detach().clone();
  }
  for (const auto& item : module.named_buffers()) {
    checkpoint.tensors[prefix + "." + item.key()] = item.value().detach().clone();
  }
}

void import_module(torch::nn::Module& module, const std::string& prefix,
                   const Checkpoint& checkpoint) {
  torch::NoGradGuard no_grad;
  auto copy = [&](const std::string& name, torch::Tensor& target) {
    const auto it = checkpoint.tensors.find(prefix + "." + name);
    if (it == checkpoint.tensors.end()) {
      throw CheckpointError("checkpoint lacks tensor '" + prefix + "." + name + "'");
    }
    if (!it->second.sizes().equals(target.sizes())) {
      throw CheckpointError("shape mismatch for '" + prefix + "." + name + "'");
    }
    target.copy_(it->second);
  };
  for (auto& item : module.named_parameters()) copy(item.key(), item.value());
  for (auto& item : module.named_buffers()) copy(item.key(), item.value());
}

}  // namespace n2s::nn
