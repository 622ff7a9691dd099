#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "football/constants.hpp"
#include "football/formations.hpp"
#include "football/scenario.hpp"
#include "football/types.hpp"

namespace football {

// One action per player: left slots 0..10 followed by right slots 0..10.
using JointAction = std::array<Action, kPlayerCount>;

constexpr std::size_t joint_index(PlayerRef r) {
  return index_of(r.side) * kTeamSize + static_cast<std::size_t>(r.index);
}

// Sticky actions and fatigue ----------------------------------------------------

inline PlayerState apply_sticky(PlayerState player, Action action) {
  if (is_direction(action)) {
    player.sticky_direction = action;
  } else {
    switch (action) {
      case Action::Sprint: player.sticky_sprint = true; break;
      case Action::StopSprint: player.sticky_sprint = false; break;
      case Action::Dribble: player.sticky_dribble = true; break;
      case Action::StopDribble: player.sticky_dribble = false; break;
      case Action::StopMoving: player.sticky_direction.reset(); break;
      default: break;  // Idle, kicks and Sliding leave the flags alone
    }
  }
  return player;
}

inline PlayerState update_fatigue(PlayerState player, bool sprinting, bool moving) {
  double t = player.tiredness;
  if (moving && sprinting) {
    t += physics::kSprintFatigue;
  } else if (moving) {
    t += physics::kMoveFatigue;
  } else {
    t -= physics::kRecovery;
  }
  player.tiredness = std::clamp(t, 0.0, 1.0);
  return player;
}

constexpr double fatigue_speed_multiplier(double tiredness) { return 1.0 - physics::kFatiguePenalty * tiredness; }

// Queries -------------------------------------------------------------------------

// Keeper defending the given side's goal: the Keeper-role player nearest to it.
inline std::optional<int> find_keeper(const GameState& s, Side side) {
  std::optional<int> best;
  double best_d = 0.0;
  const Vec2 goal{-attack_sign(side), 0.0};
  for (int i = 0; i < kTeamSize; ++i) {
    const auto& p = s.team(side)[static_cast<std::size_t>(i)];
    if (!p.on_pitch() || p.role != Role::Keeper) continue;
    const double d = distance(p.position, goal);
    if (!best || d < best_d) {
      best = i;
      best_d = d;
    }
  }
  return best;
}

inline double nearest_opponent_distance(const GameState& s, Side side, Vec2 at) {
  double best = 1e9;
  for (const auto& q : s.team(opponent(side))) {
    if (q.on_pitch()) best = std::min(best, distance(q.position, at));
  }
  return best;
}

inline bool in_penalty_box(Side defending, Vec2 p) {
  const Vec2 f = to_frame(defending, p);  // defending side's frame: own goal at x = -1
  return f.x <= -(physics::kHalfLength - physics::kBoxDepth) && std::fabs(f.y) <= physics::kBoxHalfWidth;
}

// Forward progress minus opponent pressure, in the kicker's attacking frame.
inline double pass_score(const GameState& s, PlayerRef kicker, int teammate) {
  const auto& k = s.player(kicker);
  const auto& t = s.team(kicker.side)[static_cast<std::size_t>(teammate)];
  const double progress = to_frame(kicker.side, t.position).x - to_frame(kicker.side, k.position).x;
  const double pressure = 2.0 * std::max(0.0, 0.12 - nearest_opponent_distance(s, kicker.side, t.position));
  double lane = 0.0;
  for (const auto& q : s.team(opponent(kicker.side))) {
    if (q.on_pitch() && segment_distance(q.position, k.position, t.position) < 0.03) {
      lane = 0.3;
      break;
    }
  }
  return progress - pressure - lane;
}

inline bool pass_distance_fits(Action kind, double d) {
  switch (kind) {
    case Action::ShortPass: return d >= 0.05 && d <= 0.45;
    case Action::LongPass: return d >= 0.25 && d <= 1.2;
    case Action::HighPass: return d >= 0.15 && d <= 1.0;
    default: return true;
  }
}

// Best-scored teammate for a pass of the given kind; falls back to any teammate
// when nobody is within the kind's preferred range.
inline std::optional<int> best_pass_target(const GameState& s, PlayerRef kicker, Action kind) {
  std::optional<int> best, fallback;
  double best_score = 0.0, fallback_score = 0.0;
  const Vec2 from = s.player(kicker).position;
  for (int i = 0; i < kTeamSize; ++i) {
    const auto& t = s.team(kicker.side)[static_cast<std::size_t>(i)];
    if (i == kicker.index || !t.on_pitch() || t.role == Role::Keeper) continue;
    const double score = pass_score(s, kicker, i);
    if (!fallback || score > fallback_score) {
      fallback = i;
      fallback_score = score;
    }
    if (pass_distance_fits(kind, distance(from, t.position)) && (!best || score > best_score)) {
      best = i;
      best_score = score;
    }
  }
  return best ? best : fallback;
}

// Offside --------------------------------------------------------------------------

// Teammates of the passer that are offside at the moment of the pass.
inline std::vector<PlayerRef> offside_check(const GameState& s, PlayerRef passer) {
  std::vector<PlayerRef> flagged;
  const Side side = passer.side;
  // Opponent x positions in the passer's frame, deepest first. Missing
  // defenders stand on their goal line, so nobody can be beyond them.
  std::vector<double> defenders;
  for (const auto& q : s.team(opponent(side))) {
    if (q.on_pitch()) defenders.push_back(to_frame(side, q.position).x);
  }
  while (defenders.size() < 2) defenders.push_back(physics::kHalfLength);
  std::sort(defenders.begin(), defenders.end(), std::greater<>());
  const double second_last = defenders[1];
  const double ball_x = to_frame(side, s.ball.position).x;
  for (int i = 0; i < kTeamSize; ++i) {
    if (i == passer.index) continue;
    const auto& p = s.team(side)[static_cast<std::size_t>(i)];
    if (!p.on_pitch()) continue;
    const double x = to_frame(side, p.position).x;
    if (x > 0.0 && x > ball_x && x > second_last) flagged.push_back({side, i});
  }
  return flagged;
}

// Kicks --------------------------------------------------------------------------

constexpr double kick_speed(Action kind) {
  switch (kind) {
    case Action::ShortPass: return physics::kShortPassSpeed;
    case Action::LongPass: return physics::kLongPassSpeed;
    case Action::HighPass: return physics::kHighPassSpeed;
    case Action::Shot: return physics::kShotSpeed;
    default: return 0.0;
  }
}

// Ball state right after `kicker` kicks. A kicker that does not own the ball
// leaves it untouched. Draws from `rng` only in stochastic mode.
inline BallState resolve_kick(const GameState& s, PlayerRef kicker, Action kind, DeterministicRng& rng) {
  if (!is_kick(kind) || s.ball.owned_by != kicker) return s.ball;
  const auto& k = s.player(kicker);
  const Side side = kicker.side;
  BallState ball = s.ball;
  ball.owned_by.reset();
  ball.z = 0.0;

  Vec2 dir = k.facing;
  if (kind == Action::Shot) {
    double aim_y = 0.0;
    if (const auto keeper = find_keeper(s, opponent(side))) {
      const double ky = to_frame(side, s.team(opponent(side))[static_cast<std::size_t>(*keeper)].position).y;
      aim_y = ky >= 0.0 ? -physics::kShotAimOffset : physics::kShotAimOffset;
    }
    const Vec2 target = to_frame(side, Vec2{physics::kHalfLength, aim_y});
    dir = target - ball.position;
  } else if (const auto mate = best_pass_target(s, kicker, kind)) {
    dir = s.team(side)[static_cast<std::size_t>(*mate)].position - ball.position;
  }
  dir = dir.normalized();
  if (dir == Vec2{}) dir = {attack_sign(side), 0.0};
  if (s.stochastic) {
    const double sigma = kind == Action::Shot ? physics::kShotNoise : physics::kPassNoise;
    dir = dir.rotated(sigma * rng.normal());
  }
  ball.velocity = dir * kick_speed(kind);
  ball.vz = kind == Action::HighPass ? physics::kHighPassLift : 0.0;
  return ball;
}

// Restarts -------------------------------------------------------------------------

namespace detail {

inline Vec2 clamp_to_containment(Vec2 p) {
  const double mx = physics::kHalfLength + physics::kContainmentMargin;
  const double my = physics::kHalfWidth + physics::kContainmentMargin;
  return {std::clamp(p.x, -mx, mx), std::clamp(p.y, -my, my)};
}

inline void clear_motion(PlayerState& p) {
  p.velocity = {};
  p.sticky_direction.reset();
  p.sticky_sprint = false;
  p.sticky_dribble = false;
}

inline void clear_rule_flags(GameState& s) {
  s.shot_side.reset();
  s.shot_beat_keeper = false;
  s.offside_side.reset();
  s.offside_flags = 0;
  s.kick_cooldown_player.reset();
  s.kick_cooldown = 0;
}

inline std::optional<int> nearest_player(const GameState& s, Side side, Vec2 at, bool allow_keeper) {
  std::optional<int> best;
  double best_d = 0.0;
  for (int i = 0; i < kTeamSize; ++i) {
    const auto& p = s.team(side)[static_cast<std::size_t>(i)];
    if (!p.on_pitch() || (!allow_keeper && p.role == Role::Keeper)) continue;
    const double d = distance(p.position, at);
    if (!best || d < best_d) {
      best = i;
      best_d = d;
    }
  }
  if (!best && !allow_keeper) return nearest_player(s, side, at, true);
  return best;
}

inline void update_active_players(GameState& s) {
  for (Side side : {Side::Left, Side::Right}) {
    auto& active = s.active_player[index_of(side)];
    if (s.ball.owned_by && s.ball.owned_by->side == side) {
      active = s.ball.owned_by->index;
      continue;
    }
    const auto best = nearest_player(s, side, s.ball.position, false);
    if (!best) continue;
    const auto& current = s.team(side)[static_cast<std::size_t>(active)];
    const bool current_ok = current.on_pitch() && (current.role != Role::Keeper ||
                                                   s.team(side)[static_cast<std::size_t>(*best)].role == Role::Keeper);
    if (!current_ok) {
      active = *best;
      continue;
    }
    const double d_best = distance(s.team(side)[static_cast<std::size_t>(*best)].position, s.ball.position);
    const double d_cur = distance(current.position, s.ball.position);
    if (d_best + physics::kActiveSwitchHysteresis < d_cur) active = *best;
  }
}

inline void give_ball(GameState& s, PlayerRef owner) {
  auto& p = s.player(owner);
  s.ball.owned_by = owner;
  s.ball.position = p.position + p.facing * physics::kBallOffset;
  s.ball.velocity = {};
  s.ball.z = 0.0;
  s.ball.vz = 0.0;
  s.last_toucher = owner;
  s.possession_frames = 0;
}

inline void place_taker(GameState& s, PlayerRef taker, Vec2 spot, Vec2 facing) {
  auto& p = s.player(taker);
  clear_motion(p);
  p.facing = facing.normalized();
  p.position = clamp_to_containment(spot - p.facing * physics::kBallOffset);
  s.ball = BallState{};
  s.ball.position = spot;
  s.ball.owned_by = taker;
  s.last_toucher = taker;
  s.possession_frames = 0;
}

inline void push_out_opponents(GameState& s, Side awarded, Vec2 spot) {
  const Vec2 away{-attack_sign(opponent(awarded)), 0.0};
  for (auto& q : s.team(opponent(awarded))) {
    if (!q.on_pitch()) continue;
    const Vec2 d = q.position - spot;
    const double n = d.norm();
    if (n >= physics::kRestartClearance) continue;
    const Vec2 dir = n > 0.0 ? d * (1.0 / n) : Vec2{-away.x, 0.0};
    q.position = clamp_to_containment(spot + dir * physics::kRestartClearance);
    q.velocity = {};
  }
}

inline void setup_kickoff(GameState& s, Side kicking) {
  for (Side side : {Side::Left, Side::Right}) {
    for (int i = 0; i < kTeamSize; ++i) {
      auto& p = s.team(side)[static_cast<std::size_t>(i)];
      if (!p.on_pitch()) continue;
      const Vec2 local = side == kicking ? formations::kKickOffAttack[static_cast<std::size_t>(i)]
                                         : formations::kBase442[static_cast<std::size_t>(i)].position;
      clear_motion(p);
      p.position = to_frame(side, local);
      p.facing = {attack_sign(side), 0.0};
    }
  }
  s.ball = BallState{};
  const auto& taker_slot = s.team(kicking)[formations::kKickOffTaker];
  std::optional<int> taker;
  if (taker_slot.on_pitch()) {
    taker = formations::kKickOffTaker;
  } else {
    taker = nearest_player(s, kicking, Vec2{}, false);
  }
  if (taker) place_taker(s, {kicking, *taker}, Vec2{}, Vec2{attack_sign(kicking), 0.0});
}

inline void setup_penalty(GameState& s, Side taking, int taker) {
  const Side defending = opponent(taking);
  const auto keeper = find_keeper(s, defending);
  int waiting_attackers = 0, waiting_defenders = 0;
  for (Side side : {Side::Left, Side::Right}) {
    for (int i = 0; i < kTeamSize; ++i) {
      auto& p = s.team(side)[static_cast<std::size_t>(i)];
      if (!p.on_pitch()) continue;
      clear_motion(p);
      Vec2 local;
      if (side == taking) {
        if (i == taker) continue;
        local = formations::kPenaltyAttackersWaiting[static_cast<std::size_t>(waiting_attackers++)];
      } else if (keeper && i == *keeper) {
        local = {formations::kPenaltyKeeperX, 0.0};
      } else {
        local = formations::kPenaltyDefendersWaiting[static_cast<std::size_t>(waiting_defenders++)];
      }
      p.position = to_frame(taking, local);
      p.facing = {attack_sign(side), 0.0};
    }
  }
  const Vec2 spot = to_frame(taking, Vec2{physics::kPenaltySpot, 0.0});
  place_taker(s, {taking, taker}, spot, Vec2{attack_sign(taking), 0.0});
}

}  // namespace detail

// Puts the game into a restart `mode` awarded to `side`, with the ball at `spot`.
inline void begin_restart(GameState& s, GameMode mode, Side side, Vec2 spot) {
  detail::clear_rule_flags(s);
  s.mode = mode;
  s.mode_owner = side;
  s.set_piece_frames = 0;
  s.set_piece_taker.reset();
  if (mode == GameMode::KickOff) {
    detail::setup_kickoff(s, side);
  } else {
    const auto taker = detail::nearest_player(s, side, spot, mode == GameMode::GoalKick);
    if (!taker) {
      s.ball = BallState{};
      s.ball.position = spot;
      s.mode = GameMode::Normal;
      detail::update_active_players(s);
      return;
    }
    if (mode == GameMode::Penalty) {
      detail::setup_penalty(s, side, *taker);
    } else {
      Vec2 facing;
      if (mode == GameMode::ThrowIn) {
        facing = {0.0, spot.y > 0.0 ? -1.0 : 1.0};
      } else if (mode == GameMode::Corner) {
        facing = to_frame(side, Vec2{physics::kPenaltySpot, 0.0}) - spot;
      } else {
        facing = to_frame(side, Vec2{physics::kHalfLength, 0.0}) - spot;
      }
      detail::place_taker(s, {side, *taker}, spot, facing);
      detail::push_out_opponents(s, side, spot);
    }
  }
  if (s.ball.owned_by) s.set_piece_taker = s.ball.owned_by;
  detail::update_active_players(s);
}

// Reset ---------------------------------------------------------------------------

// Fresh episode state. `kickoff` picks the side kicking off when the scenario
// starts in KickOff mode.
inline GameState reset_state(const ScenarioConfig& config, std::uint64_t seed, Side kickoff = Side::Left) {
  validate(config);
  GameState s;
  s.frame = 0;
  s.duration_frames = config.duration_frames;
  s.rng = DeterministicRng(seed);
  s.stochastic = config.stochastic;
  s.offsides_enabled = config.offsides_enabled;
  s.frozen = {false, config.lazy_opponents};
  s.keeper_skill = {config.difficulty, config.difficulty};
  for (Side side : {Side::Left, Side::Right}) {
    const auto& ps = config.placements(side);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      auto& p = s.team(side)[i];
      p.present = true;
      p.role = ps[i].role;
      p.base_speed = physics::role_speed(ps[i].role);
      p.position = ps[i].position;
      p.facing = {attack_sign(side), 0.0};
    }
  }
  s.ball.position = config.ball_start;
  s.mode = GameMode::Normal;
  s.mode_owner = kickoff;

  // Initial owner: nearest player within control radius.
  std::optional<PlayerRef> owner;
  double best = physics::kControlRadius;
  for (Side side : {Side::Left, Side::Right}) {
    for (int i = 0; i < kTeamSize; ++i) {
      const auto& p = s.team(side)[static_cast<std::size_t>(i)];
      if (!p.on_pitch()) continue;
      const double d = distance(p.position, s.ball.position);
      if (d < best || (d == best && !owner)) {
        best = d;
        owner = PlayerRef{side, i};
      }
    }
  }
  if (owner) {
    s.ball.owned_by = owner;
    s.last_toucher = owner;
  }

  if (config.start_mode == GameMode::KickOff) {
    begin_restart(s, GameMode::KickOff, kickoff, Vec2{});
  } else if (config.start_mode != GameMode::Normal) {
    Side awarded = kickoff;
    if (owner) {
      awarded = owner->side;
    } else {
      double dl = 1e9, dr = 1e9;
      if (auto l = detail::nearest_player(s, Side::Left, s.ball.position, true)) {
        dl = distance(s.team(Side::Left)[static_cast<std::size_t>(*l)].position, s.ball.position);
      }
      if (auto r = detail::nearest_player(s, Side::Right, s.ball.position, true)) {
        dr = distance(s.team(Side::Right)[static_cast<std::size_t>(*r)].position, s.ball.position);
      }
      awarded = dr < dl ? Side::Right : Side::Left;
    }
    begin_restart(s, config.start_mode, awarded, config.ball_start);
  } else {
    detail::update_active_players(s);
  }
  return s;
}

// Tick ------------------------------------------------------------------------------

namespace detail {

inline void award_foul(GameState& s, PlayerRef offender, PlayerRef victim, std::vector<Event>& events) {
  events.push_back({EventKind::Foul, offender.side, offender.index});
  auto& o = s.player(offender);
  if (s.rng.uniform() < physics::kYellowCardProbability) {
    o.yellow_cards += 1;
    events.push_back({EventKind::YellowCard, offender.side, offender.index});
    if (o.yellow_cards >= 2) {
      o.sent_off = true;
      o.velocity = {};
      events.push_back({EventKind::RedCard, offender.side, offender.index});
    }
  }
  const Vec2 spot = s.player(victim).position;
  const Side awarded = victim.side;
  if (in_penalty_box(offender.side, spot)) {
    begin_restart(s, GameMode::Penalty, awarded, to_frame(awarded, Vec2{physics::kPenaltySpot, 0.0}));
  } else {
    const Vec2 clamped{std::clamp(spot.x, -physics::kHalfLength, physics::kHalfLength),
                       std::clamp(spot.y, -physics::kHalfWidth, physics::kHalfWidth)};
    begin_restart(s, GameMode::FreeKick, awarded, clamped);
  }
}

// Returns true when the ball left play or a goal was scored.
inline bool check_boundaries(GameState& s, Vec2 prev, std::vector<Event>& events) {
  const Vec2 now = s.ball.position;
  const Side toucher = s.last_toucher ? s.last_toucher->side : Side::Left;
  if (std::fabs(now.x) > physics::kHalfLength) {
    const double line = now.x > 0 ? physics::kHalfLength : -physics::kHalfLength;
    const double t = (now.x - prev.x) != 0.0 ? (line - prev.x) / (now.x - prev.x) : 1.0;
    const double y_cross = prev.y + (now.y - prev.y) * std::clamp(t, 0.0, 1.0);
    const Side defending = now.x > 0 ? Side::Right : Side::Left;
    const Side attacking = opponent(defending);
    if (std::fabs(y_cross) < physics::kGoalHalfWidth && s.ball.z < physics::kCrossbarHeight) {
      if (s.last_toucher && s.last_toucher->side == defending) {
        events.push_back({EventKind::OwnGoal, defending, s.last_toucher->index});
      } else {
        events.push_back({EventKind::Goal, attacking, s.last_toucher ? s.last_toucher->index : -1});
      }
      s.score[index_of(attacking)] += 1;
      begin_restart(s, GameMode::KickOff, defending, Vec2{});
      return true;
    }
    if (s.last_toucher && toucher == defending) {
      const Vec2 corner{line, y_cross >= 0.0 ? physics::kHalfWidth : -physics::kHalfWidth};
      events.push_back({EventKind::OutGoalLine, attacking, -1, GameMode::Corner});
      begin_restart(s, GameMode::Corner, attacking, corner);
    } else {
      const Vec2 spot = to_frame(defending, Vec2{-(physics::kHalfLength - 0.1), 0.0});
      events.push_back({EventKind::OutGoalLine, defending, -1, GameMode::GoalKick});
      begin_restart(s, GameMode::GoalKick, defending, spot);
    }
    return true;
  }
  if (std::fabs(now.y) > physics::kHalfWidth) {
    Side awarded;
    if (s.last_toucher) {
      awarded = opponent(toucher);
    } else {
      awarded = now.x > 0 ? Side::Right : Side::Left;
    }
    const Vec2 spot{std::clamp(now.x, -physics::kHalfLength, physics::kHalfLength),
                    now.y > 0 ? physics::kHalfWidth : -physics::kHalfWidth};
    events.push_back({EventKind::OutLeftRight, awarded, -1, GameMode::ThrowIn});
    begin_restart(s, GameMode::ThrowIn, awarded, spot);
    return true;
  }
  return false;
}

inline void gain_possession(GameState& s, PlayerRef owner, std::vector<Event>& events) {
  const bool changed = !s.last_toucher || s.last_toucher->side != owner.side;
  s.ball.owned_by = owner;
  s.ball.z = 0.0;
  s.ball.vz = 0.0;
  s.last_toucher = owner;
  s.possession_frames = 0;
  s.shot_side.reset();
  s.shot_beat_keeper = false;
  s.offside_side.reset();
  s.offside_flags = 0;
  if (changed) events.push_back({EventKind::PossessionChange, owner.side, owner.index});
}

// Returns true when play was stopped (offside).
inline bool resolve_possession(GameState& s, Vec2 prev, std::vector<Event>& events) {
  if (s.ball.owned_by) {
    const PlayerRef owner = *s.ball.owned_by;
    if (s.mode != GameMode::Normal || s.possession_frames < physics::kStealProtectionFrames) return false;
    const auto& o = s.player(owner);
    double limit = std::min(physics::kControlRadius, distance(o.position, s.ball.position));
    if (o.sticky_dribble) limit *= physics::kDribbleStealFactor;
    std::optional<PlayerRef> thief;
    double best = limit;
    for (int i = 0; i < kTeamSize; ++i) {
      const auto& q = s.team(opponent(owner.side))[static_cast<std::size_t>(i)];
      if (!q.on_pitch()) continue;
      const double d = distance(q.position, s.ball.position);
      if (d < best) {
        best = d;
        thief = PlayerRef{opponent(owner.side), i};
      }
    }
    if (thief) gain_possession(s, *thief, events);
    return false;
  }
  if (s.ball.z >= physics::kControlHeight) return false;

  // Keeper save attempt on a shot in flight.
  if (s.shot_side && !s.shot_beat_keeper) {
    const Side defending = opponent(*s.shot_side);
    if (const auto keeper = find_keeper(s, defending)) {
      const auto& k = s.team(defending)[static_cast<std::size_t>(*keeper)];
      if (s.ball.z < physics::kKeeperReachHeight &&
          segment_distance(k.position, prev, s.ball.position) <= physics::kKeeperReach) {
        const double p = physics::keeper_save_probability(s.keeper_skill[index_of(defending)]);
        if (s.rng.uniform() < p) {
          gain_possession(s, {defending, *keeper}, events);
          return false;
        }
        s.shot_beat_keeper = true;
      }
    }
  }

  std::optional<PlayerRef> winner;
  double best = 0.0;
  for (Side side : {Side::Left, Side::Right}) {
    for (int i = 0; i < kTeamSize; ++i) {
      const PlayerRef ref{side, i};
      const auto& p = s.player(ref);
      if (!p.on_pitch()) continue;
      if (s.kick_cooldown > 0 && s.kick_cooldown_player == ref) continue;
      if (s.shot_side && s.shot_beat_keeper && side != *s.shot_side && p.role == Role::Keeper &&
          find_keeper(s, side) == i) {
        continue;
      }
      const double d = segment_distance(p.position, prev, s.ball.position);
      if (d <= physics::kControlRadius && (!winner || d < best)) {
        winner = ref;
        best = d;
      }
    }
  }
  if (!winner) return false;

  if (s.offside_side == winner->side && (s.offside_flags >> winner->index) & 1U) {
    events.push_back({EventKind::OffsideCalled, winner->side, winner->index});
    const Vec2 spot = s.player(*winner).position;
    const Vec2 clamped{std::clamp(spot.x, -physics::kHalfLength, physics::kHalfLength),
                       std::clamp(spot.y, -physics::kHalfWidth, physics::kHalfWidth)};
    begin_restart(s, GameMode::FreeKick, opponent(winner->side), clamped);
    return true;
  }
  gain_possession(s, *winner, events);
  return false;
}

inline void integrate_ball(GameState& s) {
  auto& b = s.ball;
  if (b.owned_by) {
    const auto& o = s.player(*b.owned_by);
    const double offset = o.sticky_dribble ? physics::kDribbleBallOffset : physics::kBallOffset;
    b.position = o.position + o.facing * offset;
    // A carried ball stays inside the lines except through the goal mouth.
    b.position.y = std::clamp(b.position.y, -physics::kHalfWidth, physics::kHalfWidth);
    if (std::fabs(b.position.y) >= physics::kGoalHalfWidth) {
      b.position.x = std::clamp(b.position.x, -physics::kHalfLength, physics::kHalfLength);
    }
    b.velocity = o.velocity;
    b.z = 0.0;
    b.vz = 0.0;
    return;
  }
  b.position += b.velocity;
  const bool airborne = b.z > 0.0 || b.vz > 0.0;
  if (airborne) {
    b.z += b.vz;
    b.vz -= physics::kGravity;
    if (b.z <= 0.0) {
      b.z = 0.0;
      b.vz = b.vz < 0.0 ? -b.vz * physics::kBounce : 0.0;
      if (b.vz < physics::kMinBounceSpeed) b.vz = 0.0;
    }
  }
  b.velocity = b.velocity * (b.z > 0.0 ? physics::kAirDrag : physics::kGroundFriction);
}

}  // namespace detail

// Advances `s` by one frame in place. `events` is cleared and receives every
// rule transition of the frame.
inline void advance(GameState& s, const JointAction& actions, std::vector<Event>& events) {
  if (s.frame >= s.duration_frames) throw ContractError("tick: episode already at duration_frames");
  for (Side side : {Side::Left, Side::Right}) {
    for (int i = 0; i < kTeamSize; ++i) {
      const PlayerRef ref{side, i};
      if (!s.player(ref).on_pitch() && actions[joint_index(ref)] != Action::Idle) {
        throw ContractError("tick: action " + std::string(action_name(actions[joint_index(ref)])) + " for " +
                            std::string(side_name(side)) + " player " + std::to_string(i) +
                            " who is not on the pitch");
      }
    }
  }
  events.clear();
  s.frame += 1;
  const GameMode mode_at_start = s.mode;

  for (Side side : {Side::Left, Side::Right}) {
    for (int i = 0; i < kTeamSize; ++i) {
      auto& p = s.team(side)[static_cast<std::size_t>(i)];
      if (p.on_pitch()) p = apply_sticky(p, actions[joint_index({side, i})]);
    }
  }

  // Set pieces end on the taker's first kick or movement, or on timeout.
  if (s.mode != GameMode::Normal) {
    s.set_piece_frames += 1;
    bool release = s.set_piece_frames >= physics::kSetPieceTimeoutFrames || !s.set_piece_taker;
    if (s.set_piece_taker) {
      const auto& t = s.player(*s.set_piece_taker);
      const Action a = actions[joint_index(*s.set_piece_taker)];
      release = release || is_kick(a) || t.sticky_direction.has_value() || !t.on_pitch();
    }
    if (release) {
      s.mode = GameMode::Normal;
      s.set_piece_taker.reset();
    }
  }

  // Kicks.
  if (s.ball.owned_by) {
    const PlayerRef owner = *s.ball.owned_by;
    const Action a = actions[joint_index(owner)];
    if (is_kick(a)) {
      if (a != Action::Shot && s.offsides_enabled &&
          (mode_at_start == GameMode::Normal || mode_at_start == GameMode::FreeKick)) {
        s.offside_side.reset();
        s.offside_flags = 0;
        for (const auto& r : offside_check(s, owner)) {
          s.offside_side = r.side;
          s.offside_flags |= static_cast<std::uint16_t>(1U << r.index);
        }
      }
      DeterministicRng rng = s.rng;
      s.ball = resolve_kick(s, owner, a, rng);
      s.rng = rng;
      events.push_back({EventKind::KickExecuted, owner.side, owner.index, GameMode::Normal, a});
      s.last_toucher = owner;
      s.kick_cooldown_player = owner;
      s.kick_cooldown = physics::kKickCooldownFrames;
      s.shot_side = a == Action::Shot ? std::optional<Side>(owner.side) : std::nullopt;
      s.shot_beat_keeper = false;
      s.possession_frames = 0;
    }
  }

  // Sliding tackles.
  if (s.mode == GameMode::Normal) {
    for (Side side : {Side::Left, Side::Right}) {
      for (int i = 0; i < kTeamSize; ++i) {
        const PlayerRef ref{side, i};
        if (actions[joint_index(ref)] != Action::Sliding || !s.player(ref).on_pitch()) continue;
        if (s.ball.owned_by == ref) continue;
        const Vec2 at = s.player(ref).position;
        const double d_ball = distance(at, s.ball.position);
        std::optional<PlayerRef> hit;
        double d_hit = physics::kSlideReach;
        for (int j = 0; j < kTeamSize; ++j) {
          const auto& q = s.team(opponent(side))[static_cast<std::size_t>(j)];
          if (!q.on_pitch()) continue;
          const double d = distance(at, q.position);
          if (d <= d_hit && d < d_ball) {
            d_hit = d;
            hit = PlayerRef{opponent(side), j};
          }
        }
        if (hit) {
          detail::award_foul(s, ref, *hit, events);
          detail::update_active_players(s);
          return;
        }
        if (d_ball <= physics::kSlideReach && s.ball.z < physics::kControlHeight) {
          detail::gain_possession(s, ref, events);
        }
      }
    }
  }

  // Movement and fatigue.
  for (Side side : {Side::Left, Side::Right}) {
    for (int i = 0; i < kTeamSize; ++i) {
      auto& p = s.team(side)[static_cast<std::size_t>(i)];
      if (!p.on_pitch()) continue;
      const bool locked = s.frozen[index_of(side)] || (s.mode != GameMode::Normal && s.set_piece_taker == PlayerRef{side, i});
      const bool moving = p.sticky_direction.has_value() && !locked;
      const bool sprinting = moving && p.sticky_sprint;
      p = update_fatigue(p, sprinting, moving);
      if (!moving) {
        p.velocity = {};
        continue;
      }
      double speed = p.base_speed * fatigue_speed_multiplier(p.tiredness);
      if (sprinting) speed *= physics::kSprintMultiplier;
      if (p.sticky_dribble && s.ball.owned_by == PlayerRef{side, i}) speed *= physics::kDribbleSpeedFactor;
      const Vec2 dir = direction_vector(*p.sticky_direction);
      p.velocity = dir * speed;
      p.position = detail::clamp_to_containment(p.position + p.velocity);
      p.facing = dir;
    }
  }

  const Vec2 ball_prev = s.ball.position;
  detail::integrate_ball(s);
  if (s.kick_cooldown > 0 && --s.kick_cooldown == 0) s.kick_cooldown_player.reset();

  if (s.mode == GameMode::Normal && detail::check_boundaries(s, ball_prev, events)) {
    detail::update_active_players(s);
    return;
  }
  if (detail::resolve_possession(s, ball_prev, events)) {
    detail::update_active_players(s);
    return;
  }
  if (s.ball.owned_by) {
    s.possession_frames += 1;
    detail::integrate_ball(s);
  }
  detail::update_active_players(s);
}

struct TickResult {
  GameState state;
  std::vector<Event> events;
};

inline TickResult tick(const GameState& state, const JointAction& actions) {
  TickResult r{state, {}};
  advance(r.state, actions, r.events);
  return r;
}

// Swaps the two teams and reflects every coordinate, so the right side's view
// becomes a left-side view. Rule bookkeeping is carried over.
inline GameState mirrored(const GameState& s) {
  GameState m = s;
  auto flip_ref = [](std::optional<PlayerRef> r) -> std::optional<PlayerRef> {
    if (!r) return r;
    return PlayerRef{opponent(r->side), r->index};
  };
  auto flip_side = [](std::optional<Side> x) -> std::optional<Side> {
    if (!x) return x;
    return opponent(*x);
  };
  for (Side side : {Side::Left, Side::Right}) {
    auto& dst = m.team(opponent(side));
    dst = s.team(side);
    for (auto& p : dst) {
      p.position = mirror(p.position);
      p.velocity = mirror(p.velocity);
      p.facing = mirror(p.facing);
      if (p.sticky_direction) p.sticky_direction = mirror_action(*p.sticky_direction);
    }
  }
  m.ball.position = mirror(s.ball.position);
  m.ball.velocity = mirror(s.ball.velocity);
  m.ball.owned_by = flip_ref(s.ball.owned_by);
  m.mode_owner = opponent(s.mode_owner);
  m.score = {s.score[1], s.score[0]};
  m.active_player = {s.active_player[1], s.active_player[0]};
  m.frozen = {s.frozen[1], s.frozen[0]};
  m.keeper_skill = {s.keeper_skill[1], s.keeper_skill[0]};
  m.last_toucher = flip_ref(s.last_toucher);
  m.kick_cooldown_player = flip_ref(s.kick_cooldown_player);
  m.shot_side = flip_side(s.shot_side);
  m.offside_side = flip_side(s.offside_side);
  m.set_piece_taker = flip_ref(s.set_piece_taker);
  return m;
}

}  // namespace football
