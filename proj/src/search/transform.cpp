#include "n2s/search/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace n2s::search {

std::string to_string(TransformOp op) {
  switch (op) {
    case TransformOp::kFlipXY: return "flip-xy";
    case TransformOp::kOneMinusX: return "1-x";
    case TransformOp::kOneMinusY: return "1-y";
    case TransformOp::kRotate: return "rotate";
  }
  return "?";
}

TransformSpec TransformSpec::random(Rng& rng) {
  TransformSpec spec;
  for (std::size_t i = spec.sequence.size() - 1; i > 0; --i) {
    std::swap(spec.sequence[i], spec.sequence[uniform_index(rng, i + 1)]);
  }
  spec.flip_xy = uniform_index(rng, 2) == 1;
  spec.one_minus_x = uniform_index(rng, 2) == 1;
  spec.one_minus_y = uniform_index(rng, 2) == 1;
  spec.quarter_turns = static_cast<int>(uniform_index(rng, 4));
  return spec;
}

bool TransformSpec::is_identity() const {
  return !flip_xy && !one_minus_x && !one_minus_y && quarter_turns % 4 == 0;
}

std::string TransformSpec::describe() const {
  std::string out;
  for (TransformOp op : sequence) {
    if (!out.empty()) out += ",";
    out += to_string(op);
    switch (op) {
      case TransformOp::kFlipXY: out += flip_xy ? "" : "(skip)"; break;
      case TransformOp::kOneMinusX: out += one_minus_x ? "" : "(skip)"; break;
      case TransformOp::kOneMinusY: out += one_minus_y ? "" : "(skip)"; break;
      case TransformOp::kRotate: out += "(" + std::to_string(90 * (quarter_turns % 4)) + ")"; break;
    }
  }
  return out;
}

Point apply_transform(const Point& p, const TransformSpec& spec) {
  Point q = p;
  for (TransformOp op : spec.sequence) {
    switch (op) {
      case TransformOp::kFlipXY:
        if (spec.flip_xy) std::swap(q.x, q.y);
        break;
      case TransformOp::kOneMinusX:
        if (spec.one_minus_x) q.x = 1.0 - q.x;
        break;
      case TransformOp::kOneMinusY:
        if (spec.one_minus_y) q.y = 1.0 - q.y;
        break;
      case TransformOp::kRotate: {
        // Exact quarter-turn values keep the map an exact isometry.
        static constexpr int kCos[4] = {1, 0, -1, 0};
        static constexpr int kSin[4] = {0, 1, 0, -1};
        const int t = ((spec.quarter_turns % 4) + 4) % 4;
        const double x = q.x * kCos[t] - q.y * kSin[t];
        const double y = q.x * kSin[t] + q.y * kCos[t];
        q = {x, y};
        break;
      }
    }
  }
  return q;
}

Instance apply_transform(const Instance& instance, const TransformSpec& spec) {
  std::vector<Point> coords;
  coords.reserve(instance.num_nodes());
  for (const Point& p : instance.coords()) coords.push_back(apply_transform(p, spec));
  return Instance(std::move(coords), instance.variant());
}

}  // namespace n2s::search
