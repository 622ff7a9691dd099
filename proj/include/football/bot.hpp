#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "football/engine.hpp"
#include "football/formations.hpp"
#include "football/types.hpp"

namespace football {

// Decision cadence in frames for difficulty theta: round(1 + 9 (1 - theta)).
inline int reaction_period(double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw ContractError("reaction_period: theta must lie in [0, 1]");
  return static_cast<int>(std::lround(1.0 + 9.0 * (1.0 - theta)));
}

struct BotParams {
  double theta = 0.6;
  int reaction_period_frames = 5;
  double aim_noise_scale = 0.16;  // radians

  static BotParams from_theta(double theta) {
    return {theta, reaction_period(theta), 0.4 * (1.0 - theta)};
  }
  friend bool operator==(const BotParams&, const BotParams&) = default;
};

namespace bot {

inline constexpr double kShotRange = 0.3;
inline constexpr double kSprintDistance = 0.2;
inline constexpr double kArrivalTolerance = 0.015;
inline constexpr double kPassThreshold = 0.15;
inline constexpr double kPressureDistance = 0.05;
inline constexpr double kKeeperRushRange = 0.25;
inline constexpr double kChaseTolerance = 0.002;

// What a player wants this frame, before it is squeezed into one Action.
struct Intent {
  std::optional<Vec2> heading;  // absolute coordinates
  bool sprint = false;
  std::optional<Action> kick;
};

// Formation point while the team has the ball: spread ahead of the ball.
inline Vec2 attack_point(int slot, Vec2 ball) {
  const Vec2 t = formations::kBase442[static_cast<std::size_t>(slot)].position;
  return {std::clamp(ball.x + 0.45 * (t.x + 0.5), -0.9, 0.88), std::clamp(t.y * 1.1, -0.38, 0.38)};
}

// Formation point while defending: compact, between ball and own goal.
inline Vec2 defend_point(int slot, Vec2 ball) {
  const Vec2 t = formations::kBase442[static_cast<std::size_t>(slot)].position;
  return {std::clamp(0.75 * t.x + 0.35 * ball.x - 0.05, -0.92, 0.5), 0.8 * t.y + 0.2 * ball.y};
}

inline Vec2 keeper_point(Vec2 ball) { return {-0.96, std::clamp(0.3 * ball.y, -0.04, 0.04)}; }

// Player of `side` designated to go for the ball (nearest, keeper only near own goal).
inline std::optional<int> chaser(const GameState& s, Side side) {
  const Vec2 ball = to_frame(side, s.ball.position);
  const bool keeper_ok = distance(ball, Vec2{-1.0, 0.0}) < kKeeperRushRange;
  std::optional<int> best;
  double best_d = 0.0;
  for (int i = 0; i < kTeamSize; ++i) {
    const auto& p = s.team(side)[static_cast<std::size_t>(i)];
    if (!p.on_pitch() || (p.role == Role::Keeper && !keeper_ok)) continue;
    const double d = distance(p.position, s.ball.position);
    if (!best || d < best_d) {
      best = i;
      best_d = d;
    }
  }
  return best;
}

inline Intent move_to(Side side, Vec2 from_frame, Vec2 target_frame, bool allow_sprint = true,
                      double tolerance = kArrivalTolerance) {
  const Vec2 delta = target_frame - from_frame;
  const double d = delta.norm();
  if (d < tolerance) return {};
  return {to_frame(side, delta), allow_sprint && d > kSprintDistance, std::nullopt};
}

inline Intent decide(const GameState& s, Side side, int index, bool allow_kicks) {
  const PlayerRef me{side, index};
  const auto& p = s.player(me);
  const Vec2 pos = to_frame(side, p.position);
  const Vec2 ball = to_frame(side, s.ball.position);

  if (s.ball.owned_by == me) {
    if (allow_kicks) {
      if (p.role != Role::Keeper && distance(pos, Vec2{1.0, 0.0}) < kShotRange) return {{}, false, Action::Shot};
      std::optional<int> best;
      double best_score = 0.0;
      for (int i = 0; i < kTeamSize; ++i) {
        const auto& t = s.team(side)[static_cast<std::size_t>(i)];
        if (i == index || !t.on_pitch() || t.role == Role::Keeper) continue;
        const double d = distance(t.position, p.position);
        if (d < 0.08 || d > 0.9) continue;
        const double score = pass_score(s, me, i);
        if (!best || score > best_score) {
          best = i;
          best_score = score;
        }
      }
      const double pressure = nearest_opponent_distance(s, side, p.position);
      const bool restart = s.mode != GameMode::Normal;
      if (restart && !best) return {{}, false, Action::LongPass};
      const bool pass = best && (restart || best_score > kPassThreshold || p.role == Role::Keeper ||
                                 (pressure < kPressureDistance && best_score > -0.05));
      if (pass) {
        const double d = distance(s.team(side)[static_cast<std::size_t>(*best)].position, p.position);
        return {{}, false, d > 0.35 ? Action::LongPass : Action::ShortPass};
      }
      const double pressure_ahead = nearest_opponent_distance(s, side, p.position + to_frame(side, Vec2{0.05, 0.0}));
      return {to_frame(side, Vec2{1.0, 0.0} - pos), pressure_ahead > kPressureDistance, std::nullopt};
    }
    return move_to(side, pos, Vec2{1.0, 0.0}, false);
  }

  const bool we_own = s.ball.owned_by && s.ball.owned_by->side == side;
  if (p.role == Role::Keeper && find_keeper(s, side) == index) {
    if (!we_own && chaser(s, side) == index) {
      return move_to(side, pos, ball + to_frame(side, s.ball.velocity) * 2.0, true, kChaseTolerance);
    }
    return move_to(side, pos, keeper_point(ball), false);
  }
  if (we_own) return move_to(side, pos, attack_point(index, ball));
  if (chaser(s, side) == index) {
    return move_to(side, pos, ball + to_frame(side, s.ball.velocity) * 2.0, true, kChaseTolerance);
  }
  return move_to(side, pos, defend_point(index, ball));
}

// Squeezes an intent into the single action a player may issue this frame,
// given its current sticky flags.
inline Action to_action(const PlayerState& p, const Intent& intent) {
  if (intent.kick) return *intent.kick;
  if (!intent.heading) {
    if (p.sticky_direction) return Action::StopMoving;
    if (p.sticky_sprint) return Action::StopSprint;
    return Action::Idle;
  }
  const Action dir = quantize_heading(*intent.heading);
  if (p.sticky_direction != dir) return dir;
  if (intent.sprint != p.sticky_sprint) return intent.sprint ? Action::Sprint : Action::StopSprint;
  return Action::Idle;
}

}  // namespace bot

// One decision of the built-in opponent bot for a single player. Aim noise is
// drawn from `rng` in stochastic mode only.
inline Action bot_action(const GameState& s, Side side, int index, const BotParams& params, DeterministicRng& rng) {
  const auto& p = s.team(side)[static_cast<std::size_t>(index)];
  if (!p.on_pitch()) throw ContractError("bot_action: player is not on the pitch");
  bot::Intent intent = bot::decide(s, side, index, true);
  if (intent.heading && s.stochastic && params.aim_noise_scale > 0.0) {
    intent.heading = intent.heading->rotated(params.aim_noise_scale * rng.normal());
  }
  return bot::to_action(p, intent);
}

// Built-in behaviour for a controlled team's non-active players: cadence 1,
// no aim noise, movement only.
inline Action teammate_action(const GameState& s, Side side, int index, bool enabled = true) {
  const auto& p = s.team(side)[static_cast<std::size_t>(index)];
  if (!enabled || !p.on_pitch()) return Action::Idle;
  return bot::to_action(p, bot::decide(s, side, index, false));
}

// Drives a whole side with the built-in bot, recomputing each player's
// decision only on reaction-period boundaries.
class BotController {
 public:
  BotController() = default;
  BotController(BotParams params, DeterministicRng rng) : params_(params), rng_(rng) {}

  std::array<Action, kTeamSize> act(const GameState& s, Side side) {
    std::array<Action, kTeamSize> out{};
    const bool decide_now = !primed_ || s.frame % params_.reaction_period_frames == 0;
    for (int i = 0; i < kTeamSize; ++i) {
      const auto& p = s.team(side)[static_cast<std::size_t>(i)];
      if (!p.on_pitch()) {
        cache_[static_cast<std::size_t>(i)] = Action::Idle;
        continue;
      }
      if (decide_now) cache_[static_cast<std::size_t>(i)] = bot_action(s, side, i, params_, rng_);
      out[static_cast<std::size_t>(i)] = cache_[static_cast<std::size_t>(i)];
    }
    primed_ = true;
    return out;
  }

  [[nodiscard]] const BotParams& params() const { return params_; }
  [[nodiscard]] const DeterministicRng& rng() const { return rng_; }

 private:
  BotParams params_ = BotParams::from_theta(0.6);
  DeterministicRng rng_;
  std::array<Action, kTeamSize> cache_{};
  bool primed_ = false;
};

}  // namespace football
