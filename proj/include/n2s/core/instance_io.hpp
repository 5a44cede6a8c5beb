#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "n2s/core/instance.hpp"

namespace n2s {

// Plain-text instance format:
//
//   PDP <n> <pdtsp|pdtsp-lifo>
//   <id> <x> <y>            one line per node
//   PAIR <pickup> <delivery> optional explicit pairing, one per request
//
// Blank lines and text after '#' are ignored. Without PAIR lines node ids
// must be 0..2n and follow the depot / pickup / delivery index convention.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  // Same error with a location prefix (typically the file path).
  ParseError(const std::string& context, const ParseError& inner)
      : std::runtime_error(context + ": " + inner.what()), line_(inner.line()) {}

  int line() const { return line_; }

 private:
  int line_;
};

void write_instance(std::ostream& out, const Instance& instance);
void save_instance(const std::filesystem::path& path, const Instance& instance);

// Reads coordinates verbatim (no normalization).
Instance parse_instance(std::istream& in);
Instance read_instance(const std::filesystem::path& path);

// Instance rescaled into the unit square with one isotropic factor, plus what
// is needed to map results back to the source file's units and labels.
struct BenchmarkInstance {
  Instance instance;
  // normalized = (raw - offset) * scale
  double scale = 1.0;
  Point offset;
  // original_ids[node] is the id used in the source file.
  std::vector<long long> original_ids;

  double denormalize_cost(double normalized_cost) const {
    return normalized_cost / scale;
  }
};

BenchmarkInstance parse_benchmark_instance(std::istream& in);
BenchmarkInstance load_benchmark_instance(const std::filesystem::path& path);

}  // namespace n2s
