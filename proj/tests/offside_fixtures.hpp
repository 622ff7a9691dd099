#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "football/engine.hpp"

namespace football::testing {

// A pass by `side` with the ball at `ball_x`; one teammate at `receiver`.
// Opponents stand at `opponents` (world x, y = 0.1 * slot); `sent_off` marks
// an opponent slot that has been dismissed, or -1. Labels were worked out by
// hand from the three-condition rule.
struct OffsideFixture {
  std::string_view name;
  Side side;
  double ball_x;
  Vec2 receiver;
  std::vector<double> opponents;
  int sent_off;
  bool flagged;
};

inline const std::vector<OffsideFixture>& offside_fixtures() {
  static const std::vector<OffsideFixture> fixtures = {
      {"textbook", Side::Left, 0.5, {0.8, 0.0}, {0.95, 0.7}, -1, true},
      {"level_with_ball", Side::Left, 0.5, {0.5, 0.0}, {0.95, 0.3}, -1, false},
      {"own_half", Side::Left, -0.3, {-0.1, 0.0}, {0.95, -0.5}, -1, false},
      {"on_halfway_line", Side::Left, -0.3, {0.0, 0.0}, {0.95, -0.2}, -1, false},
      {"just_past_halfway", Side::Left, -0.3, {0.05, 0.0}, {0.95, 0.0}, -1, true},
      {"level_with_second_last", Side::Left, 0.2, {0.6, 0.0}, {0.95, 0.6}, -1, false},
      {"beyond_second_last", Side::Left, 0.2, {0.61, 0.0}, {0.95, 0.6}, -1, true},
      {"behind_second_of_three", Side::Left, 0.2, {0.6, 0.0}, {0.95, 0.7, 0.65}, -1, false},
      {"beyond_three", Side::Left, 0.3, {0.9, 0.0}, {0.95, 0.7, 0.65}, -1, true},
      {"behind_deep_pair", Side::Left, 0.3, {0.9, 0.0}, {0.95, 0.92}, -1, false},
      {"beyond_deep_pair", Side::Left, 0.3, {0.97, 0.0}, {0.95, 0.92}, -1, true},
      {"keeper_upfield", Side::Left, 0.1, {0.5, 0.0}, {0.2, 0.9}, -1, true},
      {"behind_upfield_keeper", Side::Left, 0.1, {0.15, 0.0}, {0.2, 0.9}, -1, false},
      {"lone_keeper", Side::Left, 0.3, {0.9, 0.0}, {0.95}, -1, false},
      {"empty_defence", Side::Left, 0.3, {0.99, 0.0}, {}, -1, false},
      {"ball_ahead", Side::Left, 0.8, {0.7, 0.0}, {0.95, 0.5}, -1, false},
      {"just_ahead_of_ball", Side::Left, 0.69, {0.7, 0.0}, {0.95, 0.5}, -1, true},
      {"ball_level_with_line", Side::Left, 0.29, {0.3, 0.0}, {0.95, 0.29}, -1, true},
      {"level_ball_deep_line", Side::Left, 0.3, {0.3, 0.0}, {0.95, 0.1}, -1, false},
      {"crowded_deep", Side::Left, 0.2, {0.85, 0.0}, {0.95, 0.9, 0.85, 0.8, 0.75}, -1, false},
      {"crowded_high_line", Side::Left, 0.1, {0.55, 0.0}, {0.95, 0.5, 0.4, 0.3, 0.2}, -1, true},
      {"dismissed_deepest", Side::Left, 0.2, {0.7, 0.0}, {0.95, 0.8, 0.6}, 0, true},
      {"three_defenders", Side::Left, 0.2, {0.7, 0.0}, {0.95, 0.8, 0.6}, -1, false},
      {"wide_bottom", Side::Left, 0.5, {0.8, 0.4}, {0.95, 0.7}, -1, true},
      {"wide_top", Side::Left, 0.5, {0.8, -0.4}, {0.95, 0.7}, -1, true},
      {"ball_in_own_half", Side::Left, -0.5, {0.1, 0.0}, {0.95, 0.05}, -1, true},
      {"ball_own_half_onside", Side::Left, -0.5, {0.1, 0.0}, {0.95, 0.15}, -1, false},
      {"right_textbook", Side::Right, -0.5, {-0.8, 0.0}, {-0.95, -0.7}, -1, true},
      {"right_level_with_ball", Side::Right, -0.5, {-0.5, 0.0}, {-0.95, -0.3}, -1, false},
      {"right_own_half", Side::Right, 0.4, {0.2, 0.0}, {-0.95, 0.5}, -1, false},
      {"right_past_halfway", Side::Right, 0.3, {-0.05, 0.0}, {-0.95, 0.0}, -1, true},
      {"right_level_with_line", Side::Right, -0.2, {-0.6, 0.0}, {-0.95, -0.6}, -1, false},
      {"right_beyond_line", Side::Right, -0.2, {-0.61, 0.0}, {-0.95, -0.6}, -1, true},
      {"right_behind_deep_pair", Side::Right, -0.3, {-0.9, 0.0}, {-0.95, -0.92}, -1, false},
      {"right_beyond_deep_pair", Side::Right, -0.3, {-0.97, 0.0}, {-0.95, -0.92}, -1, true},
      {"right_lone_keeper", Side::Right, -0.3, {-0.9, 0.0}, {-0.95}, -1, false},
      {"right_ball_ahead", Side::Right, -0.8, {-0.7, 0.0}, {-0.95, -0.5}, -1, false},
      {"right_high_line", Side::Right, -0.1, {-0.55, 0.0}, {-0.95, -0.5, -0.4, -0.3}, -1, true},
      {"right_on_halfway", Side::Right, 0.5, {0.0, 0.0}, {-0.95, 0.3}, -1, false},
      {"right_keeper_upfield", Side::Right, -0.1, {-0.5, 0.0}, {-0.2, -0.9}, -1, true},
      {"level_line_near_ball", Side::Left, 0.44, {0.45, 0.0}, {0.95, 0.45}, -1, false},
      {"past_line_near_ball", Side::Left, 0.44, {0.46, 0.0}, {0.95, 0.45}, -1, true},
      {"flat_pair_beyond", Side::Left, 0.2, {0.75, 0.0}, {0.7, 0.7}, -1, true},
      {"flat_pair_behind", Side::Left, 0.2, {0.69, 0.0}, {0.7, 0.7}, -1, false},
      {"defence_in_our_half", Side::Left, -0.7, {0.01, 0.0}, {-0.5, -0.6}, -1, true},
      {"defence_in_our_half_ball_ahead", Side::Left, 0.02, {0.01, 0.0}, {-0.5, -0.6}, -1, false},
      {"no_opponents", Side::Left, 0.1, {0.5, 0.0}, {}, -1, false},
      {"single_outfield", Side::Left, 0.1, {0.5, 0.0}, {0.3}, -1, true},
      {"single_outfield_behind", Side::Left, 0.1, {0.25, 0.0}, {0.3}, -1, false},
      {"right_single_outfield", Side::Right, -0.1, {-0.3, 0.0}, {-0.2}, -1, true},
  };
  return fixtures;
}

inline constexpr int kFixturePasser = 5;
inline constexpr int kFixtureReceiver = 9;

inline GameState offside_fixture_state(const OffsideFixture& f) {
  GameState s;
  s.mode = GameMode::Normal;
  auto place = [&](Side side, int index, Role role, Vec2 at) {
    auto& p = s.team(side)[static_cast<std::size_t>(index)];
    p.present = true;
    p.role = role;
    p.base_speed = physics::role_speed(role);
    p.position = at;
    p.facing = {attack_sign(side), 0.0};
  };
  const double back = -0.01 * attack_sign(f.side);
  place(f.side, kFixturePasser, Role::Midfielder, {f.ball_x + back, -0.2});
  place(f.side, kFixtureReceiver, Role::Forward, f.receiver);
  for (std::size_t i = 0; i < f.opponents.size(); ++i) {
    place(opponent(f.side), static_cast<int>(i), i == 0 ? Role::Keeper : Role::Defender,
          {f.opponents[i], 0.1 * static_cast<double>(i) - 0.3});
  }
  if (f.sent_off >= 0) s.team(opponent(f.side))[static_cast<std::size_t>(f.sent_off)].sent_off = true;
  s.ball.position = {f.ball_x, -0.2};
  s.ball.owned_by = PlayerRef{f.side, kFixturePasser};
  return s;
}

// True when offside_check flags exactly the fixture's receiver or nobody, as labeled.
inline bool offside_fixture_agrees(const OffsideFixture& f) {
  const auto state = offside_fixture_state(f);
  const auto flagged = offside_check(state, {f.side, kFixturePasser});
  if (!f.flagged) return flagged.empty();
  return flagged.size() == 1 && flagged[0] == PlayerRef{f.side, kFixtureReceiver};
}

}  // namespace football::testing
