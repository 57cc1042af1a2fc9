#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bootperc {

// Per-round infection threshold. Round m infects every healthy vertex with at
// least threshold_at(m) infected neighbours.
//
// Two kinds:
//   constant r           threshold r in every round (r = 0 is legal and
//                        degenerate: everything infects in round 0)
//   relaxed(r, k, t)     rounds m < k use r - (k-m)*t, floored at 1; rounds
//                        m >= k use r. The slack shrinks by t each round and
//                        disappears after k rounds.
struct ThresholdSchedule {
  enum class Kind { constant, relaxed };

  Kind kind = Kind::constant;
  std::uint32_t r = 1;
  std::uint32_t k = 0;  // relaxed rounds (0 for constant)
  std::uint32_t t = 0;  // per-round slack step

  static ThresholdSchedule constant(std::uint32_t r) {
    return ThresholdSchedule{Kind::constant, r, 0, 0};
  }

  static ThresholdSchedule relaxed(std::uint32_t r, std::uint32_t k, std::uint32_t t) {
    if (r < 1) throw std::invalid_argument("relaxed schedule requires r >= 1");
    if (k < 1) throw std::invalid_argument("relaxed schedule requires k >= 1");
    return ThresholdSchedule{Kind::relaxed, r, k, t};
  }

  std::uint32_t threshold_at(std::uint32_t m) const {
    if (kind == Kind::constant || m >= k) return r;
    std::int64_t v = std::int64_t(r) - std::int64_t(k - m) * t;
    return v < 1 ? 1u : std::uint32_t(v);
  }

  // Rounds that must be executed even if nothing changes, so that every
  // relaxed threshold gets its chance.
  std::uint32_t relaxed_rounds() const { return kind == Kind::relaxed ? k : 0; }

  std::string describe() const {
    if (kind == Kind::constant) return "constant:" + std::to_string(r);
    return "relaxed:" + std::to_string(r) + "," + std::to_string(k) + "," + std::to_string(t);
  }
};

inline std::uint32_t majority_threshold(std::uint32_t degree) { return (degree + 1) / 2; }

// Rule grammar: "majority" | "constant:<r>" | "bootk:<r>,<k>,<t>".
// majority resolves to constant ceil(d/2) for the degree supplied.
ThresholdSchedule parse_rule(const std::string& rule, std::uint32_t degree);

}  // namespace bootperc
