#pragma once

#include <array>
#include <string>

#include "n2s/core/instance.hpp"
#include "n2s/core/random.hpp"

namespace n2s::search {

enum class TransformOp { kFlipXY, kOneMinusX, kOneMinusY, kRotate };

std::string to_string(TransformOp op);

// Four isometries applied in `sequence` order, each once: swap x and y,
// x -> 1 - x, y -> 1 - y, and a rotation about the origin by a quarter-turn
// multiple. Flips are skipped when their flag is off.
struct TransformSpec {
  std::array<TransformOp, 4> sequence{TransformOp::kFlipXY, TransformOp::kOneMinusX,
                                      TransformOp::kOneMinusY, TransformOp::kRotate};
  bool flip_xy = false;
  bool one_minus_x = false;
  bool one_minus_y = false;
  int quarter_turns = 0;  // rotation angle is quarter_turns * pi / 2

  static TransformSpec identity() { return {}; }
  // Shuffled order, fair coin per flip, uniform rotation angle.
  static TransformSpec random(Rng& rng);

  bool is_identity() const;
  std::string describe() const;
};

Point apply_transform(const Point& p, const TransformSpec& spec);
Instance apply_transform(const Instance& instance, const TransformSpec& spec);

}  // namespace n2s::search
