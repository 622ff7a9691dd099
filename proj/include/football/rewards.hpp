#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <string_view>

#include "football/types.hpp"

namespace football {

enum class RewardKind : std::uint8_t { Scoring, Checkpoints };

inline constexpr std::array<std::string_view, 2> kRewardNames = {"scoring", "checkpoints"};

inline std::optional<RewardKind> parse_reward(std::string_view name) {
  if (name == "scoring") return RewardKind::Scoring;
  if (name == "checkpoints") return RewardKind::Checkpoints;
  return std::nullopt;
}

// +1 per goal for `side`, -1 per goal against it. Own goals count against the
// side that put the ball in.
inline int scoring_reward(std::span<const Event> events, Side side) {
  int r = 0;
  for (const auto& e : events) {
    if (const auto scorer = scoring_side(e)) r += *scorer == side ? 1 : -1;
  }
  return r;
}

inline constexpr int kCheckpointCount = 10;

// Region i is collected at goal distance d <= 0.99 - 0.8 i / 9.
inline constexpr std::array<double, kCheckpointCount> checkpoint_thresholds() {
  std::array<double, kCheckpointCount> t{};
  for (int i = 0; i < kCheckpointCount; ++i) t[static_cast<std::size_t>(i)] = 0.99 - 0.8 * i / 9.0;
  return t;
}

// Per-episode, per-team state of the shaped reward. Rewards are tracked in
// tenths so episode totals are exact.
struct CheckpointTracker {
  int collected = 0;
  bool exhausted = false;
  friend bool operator==(const CheckpointTracker&, const CheckpointTracker&) = default;
};

struct CheckpointStep {
  int tenths = 0;  // reward delta in units of 0.1
  CheckpointTracker tracker;

  [[nodiscard]] double reward() const { return tenths / 10.0; }
};

inline CheckpointStep checkpoint_step(CheckpointTracker tracker, const GameState& s, Side side,
                                      std::span<const Event> events) {
  CheckpointStep out{0, tracker};
  if (tracker.exhausted) return out;
  auto& t = out.tracker;

  bool scored = false;
  for (const auto& e : events) scored = scored || scoring_side(e) == side;
  if (scored) {
    out.tenths += kCheckpointCount - t.collected;
    t.collected = kCheckpointCount;
    t.exhausted = true;
    return out;
  }

  if (s.ball.owned_by && s.ball.owned_by->side == side) {
    const Vec2 ball = to_frame(side, s.ball.position);
    if (ball.x > 0.0) {
      const double d = distance(ball, Vec2{1.0, 0.0});
      constexpr auto thresholds = checkpoint_thresholds();
      while (t.collected < kCheckpointCount && d <= thresholds[static_cast<std::size_t>(t.collected)]) {
        t.collected += 1;
        out.tenths += 1;
      }
    }
  }
  if (t.collected == kCheckpointCount) t.exhausted = true;
  return out;
}

// Caller-supplied reward transform: (state, events, side, base reward) -> reward.
using RewardHook = std::function<double(const GameState&, std::span<const Event>, Side, double)>;

}  // namespace football
