#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "n2s/core/instance.hpp"

namespace n2s::bench {

// One instance of a dataset. Costs on a scaled instance map back to source
// units by dividing by `scale`.
struct DatasetEntry {
  std::string id;
  std::filesystem::path file;  // relative to the dataset directory
  std::optional<std::uint64_t> seed;
  double scale = 1.0;
};

// A directory holding instance files and manifest.json. Entry order is the
// manifest order, which reference-cost files follow line by line.
struct Dataset {
  std::filesystem::path dir;
  nlohmann::json manifest;
  std::vector<DatasetEntry> entries;

  Instance load(std::size_t index, std::optional<Variant> variant = std::nullopt) const;
};

struct GenerateOptions {
  int num_requests = 10;
  int count = 1;
  std::uint64_t seed = 1;
  Variant variant = Variant::kPdtsp;
};

// Instance i is drawn from derive_seed(seed, i). Reruns with the same
// options produce byte-identical files.
Dataset generate_dataset(const GenerateOptions& options, const std::filesystem::path& out_dir);

// Accepts a dataset directory or a single instance file.
Dataset load_dataset(const std::filesystem::path& path);

// Rescales benchmark files into the unit square and writes them as a
// dataset; the manifest keeps each scale factor and source path.
Dataset import_benchmarks(const std::vector<std::filesystem::path>& files,
                          const std::filesystem::path& out_dir);

// One cost per line; blank lines and '#' comments are skipped.
std::vector<double> read_reference_costs(const std::filesystem::path& path);

}  // namespace n2s::bench
