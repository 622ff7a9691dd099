#pragma once

#include <vector>

#include "football/engine.hpp"

namespace football::testing {

// Empty pitch in Normal mode with nobody present; tests add players explicitly.
inline GameState empty_state(int duration = 3000) {
  GameState s;
  s.duration_frames = duration;
  s.mode = GameMode::Normal;
  s.stochastic = false;
  return s;
}

inline PlayerRef put(GameState& s, Side side, int index, Role role, Vec2 position) {
  auto& p = s.team(side)[static_cast<std::size_t>(index)];
  p = PlayerState{};
  p.present = true;
  p.role = role;
  p.base_speed = physics::role_speed(role);
  p.position = position;
  p.facing = {attack_sign(side), 0.0};
  return {side, index};
}

inline void give(GameState& s, PlayerRef owner, Vec2 ball) {
  s.ball = BallState{};
  s.ball.position = ball;
  s.ball.owned_by = owner;
  s.last_toucher = owner;
  s.possession_frames = 0;
}

inline JointAction idle_actions() { return JointAction{}; }

inline JointAction with(JointAction a, PlayerRef r, Action action) {
  a[joint_index(r)] = action;
  return a;
}

// Steps with all-idle actions until `pred` or `limit` frames; returns all events.
template <typename Pred>
std::vector<Event> run_until(GameState& s, Pred pred, int limit) {
  std::vector<Event> all, events;
  for (int i = 0; i < limit && !pred(s); ++i) {
    advance(s, idle_actions(), events);
    all.insert(all.end(), events.begin(), events.end());
  }
  return all;
}

inline bool has_event(const std::vector<Event>& events, EventKind kind) {
  for (const auto& e : events) {
    if (e.kind == kind) return true;
  }
  return false;
}

}  // namespace football::testing
