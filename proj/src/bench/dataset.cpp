#include "n2s/bench/dataset.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "n2s/core/instance_io.hpp"
#include "n2s/core/random.hpp"

namespace n2s::bench {
namespace fs = std::filesystem;

namespace {

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

void prepare_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
}

std::string entry_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "instance-%04zu", index);
  return buf;
}

Dataset parse_manifest(const fs::path& dir, nlohmann::json manifest) {
  Dataset data{dir, std::move(manifest), {}};
  if (!data.manifest.contains("instances") || !data.manifest["instances"].is_array()) {
    throw std::runtime_error((dir / "manifest.json").string() + ": missing 'instances' array");
  }
  for (const auto& item : data.manifest["instances"]) {
    DatasetEntry e;
    e.id = item.at("id").get<std::string>();
    e.file = item.at("file").get<std::string>();
    if (item.contains("seed")) e.seed = item["seed"].get<std::uint64_t>();
    if (item.contains("scale")) e.scale = item["scale"].get<double>();
    data.entries.push_back(std::move(e));
  }
  return data;
}

Dataset finish(const fs::path& out_dir, nlohmann::json manifest) {
  write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");
  return parse_manifest(out_dir, std::move(manifest));
}

}  // namespace

Instance Dataset::load(std::size_t index, std::optional<Variant> variant) const {
  const fs::path path = dir / entries.at(index).file;
  Instance inst = read_instance(path);
  if (variant && *variant != inst.variant()) return Instance(inst.coords(), *variant);
  return inst;
}

Dataset generate_dataset(const GenerateOptions& options, const fs::path& out_dir) {
  if (options.num_requests < 1) throw std::invalid_argument("generate: n must be >= 1");
  if (options.count < 1) throw std::invalid_argument("generate: count must be >= 1");
  prepare_dir(out_dir);
  nlohmann::json manifest{{"num_requests", options.num_requests},
                          {"count", options.count},
                          {"seed", options.seed},
                          {"variant", std::string(to_string(options.variant))},
                          {"instances", nlohmann::json::array()}};
  for (int i = 0; i < options.count; ++i) {
    const std::uint64_t seed = derive_seed(options.seed, static_cast<std::uint64_t>(i));
    const std::string name = entry_name(i);
    save_instance(out_dir / (name + ".pdp"),
                  generate_instance(options.num_requests, seed, options.variant));
    manifest["instances"].push_back({{"id", name}, {"file", name + ".pdp"}, {"seed", seed}});
  }
  return finish(out_dir, std::move(manifest));
}

Dataset load_dataset(const fs::path& path) {
  if (fs::is_directory(path)) {
    const fs::path file = path / "manifest.json";
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    nlohmann::json manifest;
    try {
      manifest = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(file.string() + ": " + e.what());
    }
    return parse_manifest(path, std::move(manifest));
  }
  if (!fs::exists(path)) throw std::runtime_error("no such dataset: " + path.string());
  nlohmann::json manifest{
      {"instances", {{{"id", path.stem().string()}, {"file", path.filename().string()}}}}};
  return parse_manifest(path.parent_path(), std::move(manifest));
}

Dataset import_benchmarks(const std::vector<fs::path>& files, const fs::path& out_dir) {
  if (files.empty()) throw std::invalid_argument("bench-import: no input files");
  prepare_dir(out_dir);
  nlohmann::json manifest{{"instances", nlohmann::json::array()}};
  for (const auto& src : files) {
    const BenchmarkInstance bench = load_benchmark_instance(src);
    const std::string name = src.stem().string();
    save_instance(out_dir / (name + ".pdp"), bench.instance);
    manifest["instances"].push_back({{"id", name},
                                     {"file", name + ".pdp"},
                                     {"scale", bench.scale},
                                     {"offset", {bench.offset.x, bench.offset.y}},
                                     {"original_ids", bench.original_ids},
                                     {"source", src.string()}});
  }
  return finish(out_dir, std::move(manifest));
}

std::vector<double> read_reference_costs(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<double> costs;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    line = line.substr(0, line.find('#'));
    std::istringstream fields(line);
    double value = 0.0;
    if (!(fields >> value)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw std::runtime_error(path.string() + ":" + std::to_string(number) + ": expected a cost");
    }
    std::string rest;
    if (fields >> rest) {
      throw std::runtime_error(path.string() + ":" + std::to_string(number) +
                               ": expected one cost per line");
    }
    costs.push_back(value);
  }
  return costs;
}

}  // namespace n2s::bench
