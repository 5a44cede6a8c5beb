#include "n2s/core/instance_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace n2s {
namespace {

struct RawNode {
  long long id;
  Point point;
  int line;
};

struct RawInstance {
  int num_requests = 0;
  Variant variant = Variant::kPdtsp;
  std::vector<RawNode> nodes;
  std::vector<std::pair<long long, long long>> pairs;
  std::vector<int> pair_lines;
};

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream stream(body);
  std::vector<std::string> tokens;
  for (std::string token; stream >> token;) tokens.push_back(std::move(token));
  return tokens;
}

long long parse_integer(const std::string& text, int line) {
  long long value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError("expected an integer, got '" + text + "'", line);
  }
  return value;
}

double parse_real(const std::string& text, int line) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + text + "'", line);
  }
}

RawInstance parse_raw(std::istream& in) {
  RawInstance raw;
  bool have_header = false;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.size() != 3 || tokens[0] != "PDP") {
        throw ParseError("expected header 'PDP <n> <variant>'", line_number);
      }
      raw.num_requests = static_cast<int>(parse_integer(tokens[1], line_number));
      if (raw.num_requests < 1) {
        throw ParseError("request count must be positive", line_number);
      }
      try {
        raw.variant = parse_variant(tokens[2]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_number);
      }
      have_header = true;
      continue;
    }
    if (tokens[0] == "PAIR") {
      if (tokens.size() != 3) throw ParseError("expected 'PAIR <p> <d>'", line_number);
      raw.pairs.emplace_back(parse_integer(tokens[1], line_number),
                             parse_integer(tokens[2], line_number));
      raw.pair_lines.push_back(line_number);
      continue;
    }
    if (tokens.size() != 3) throw ParseError("expected '<id> <x> <y>'", line_number);
    const long long id = parse_integer(tokens[0], line_number);
    const Point point{parse_real(tokens[1], line_number),
                      parse_real(tokens[2], line_number)};
    if (!std::isfinite(point.x) || !std::isfinite(point.y)) {
      throw ParseError("coordinates must be finite", line_number);
    }
    raw.nodes.push_back(RawNode{id, point, line_number});
  }
  if (!have_header) throw ParseError("missing 'PDP' header", 0);
  const std::size_t expected = 2 * static_cast<std::size_t>(raw.num_requests) + 1;
  if (raw.nodes.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) + " nodes, found " +
                         std::to_string(raw.nodes.size()),
                     line_number);
  }
  std::map<long long, int> seen;
  for (const RawNode& node : raw.nodes) {
    if (!seen.emplace(node.id, node.line).second) {
      throw ParseError("duplicate node id " + std::to_string(node.id), node.line);
    }
  }
  return raw;
}

// Maps raw nodes onto the depot / pickup / delivery labels. Returns the
// source id of each internal node.
std::vector<long long> assign_labels(const RawInstance& raw, std::vector<Point>& coords) {
  const int n = raw.num_requests;
  const int count = 2 * n + 1;
  coords.assign(count, Point{});
  std::vector<long long> ids(count);
  std::map<long long, const RawNode*> by_id;
  for (const RawNode& node : raw.nodes) by_id[node.id] = &node;

  if (raw.pairs.empty()) {
    for (const RawNode& node : raw.nodes) {
      if (node.id < 0 || node.id >= count) {
        throw ParseError("node id " + std::to_string(node.id) +
                             " outside 0.." + std::to_string(count - 1),
                         node.line);
      }
      coords[node.id] = node.point;
      ids[node.id] = node.id;
    }
    return ids;
  }

  if (static_cast<int>(raw.pairs.size()) != n) {
    throw ParseError("expected " + std::to_string(n) + " PAIR lines, found " +
                         std::to_string(raw.pairs.size()),
                     raw.pair_lines.back());
  }
  std::map<long long, bool> used;
  for (std::size_t r = 0; r < raw.pairs.size(); ++r) {
    const auto [p, d] = raw.pairs[r];
    const int line = raw.pair_lines[r];
    for (long long id : {p, d}) {
      if (!by_id.count(id)) {
        throw ParseError("PAIR references unknown node " + std::to_string(id), line);
      }
      if (used[id]) {
        throw ParseError("node " + std::to_string(id) + " paired twice", line);
      }
      used[id] = true;
    }
    const int request = static_cast<int>(r) + 1;
    coords[request] = by_id[p]->point;
    ids[request] = p;
    coords[request + n] = by_id[d]->point;
    ids[request + n] = d;
  }
  for (const RawNode& node : raw.nodes) {
    if (!used[node.id]) {
      coords[0] = node.point;
      ids[0] = node.id;
    }
  }
  return ids;
}

}  // namespace

void write_instance(std::ostream& out, const Instance& instance) {
  out << "PDP " << instance.num_requests() << ' ' << to_string(instance.variant())
      << '\n';
  char buffer[96];
  for (int node = 0; node < instance.num_nodes(); ++node) {
    const Point& p = instance.coord(node);
    std::snprintf(buffer, sizeof(buffer), "%d %.17g %.17g\n", node, p.x, p.y);
    out << buffer;
  }
}

void save_instance(const std::filesystem::path& path, const Instance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_instance(out, instance);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

Instance parse_instance(std::istream& in) {
  const RawInstance raw = parse_raw(in);
  if (!raw.pairs.empty()) {
    throw ParseError("PAIR sections are only accepted by the benchmark loader",
                     raw.pair_lines.front());
  }
  std::vector<Point> coords;
  assign_labels(raw, coords);
  return Instance(std::move(coords), raw.variant);
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return parse_instance(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string(), e);
  }
}

BenchmarkInstance parse_benchmark_instance(std::istream& in) {
  const RawInstance raw = parse_raw(in);
  std::vector<Point> coords;
  std::vector<long long> ids = assign_labels(raw, coords);

  Point low = coords.front();
  Point high = coords.front();
  for (const Point& p : coords) {
    low.x = std::min(low.x, p.x);
    low.y = std::min(low.y, p.y);
    high.x = std::max(high.x, p.x);
    high.y = std::max(high.y, p.y);
  }
  const double extent = std::max(high.x - low.x, high.y - low.y);
  const double scale = extent > 0.0 ? 1.0 / extent : 1.0;
  for (Point& p : coords) {
    p.x = (p.x - low.x) * scale;
    p.y = (p.y - low.y) * scale;
  }
  return BenchmarkInstance{Instance(std::move(coords), raw.variant), scale, low,
                           std::move(ids)};
}

BenchmarkInstance load_benchmark_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return parse_benchmark_instance(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string(), e);
  }
}

}  // namespace n2s
