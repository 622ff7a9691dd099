#pragma once

// Generated by scripts/gen_builtin_scenarios.py; edit the script, not this file.
// Each entry is a scenario document in the key = value format read by parse_scenario().

#include <array>
#include <string_view>

namespace football::builtin_data {

struct Entry {
  std::string_view name;
  std::string_view text;
};

inline constexpr std::array<Entry, 14> kScenarios = {{
    {"11_vs_11_easy", R"scn(
name = 11_vs_11_easy
duration_frames = 3000
stochastic = true
end_on_score = false
end_on_possession_loss = false
end_on_out_of_play = false
start_mode = KickOff
ball = 0 0
difficulty = 0.05
left_player = Keeper -0.96 0
left_player = Defender -0.7 -0.28
left_player = Defender -0.74 -0.09
left_player = Defender -0.74 0.09
left_player = Defender -0.7 0.28
left_player = Midfielder -0.42 -0.28
left_player = Midfielder -0.45 -0.09
left_player = Midfielder -0.45 0.09
left_player = Midfielder -0.42 0.28
left_player = Forward -0.06 -0.12
left_player = Forward -0.01 0
right_player = Keeper 0.96 0
right_player = Defender 0.7 0.28
right_player = Defender 0.74 0.09
right_player = Defender 0.74 -0.09
right_player = Defender 0.7 -0.28
right_player = Midfielder 0.42 0.28
right_player = Midfielder 0.45 0.09
right_player = Midfielder 0.45 -0.09
right_player = Midfielder 0.42 -0.28
right_player = Forward 0.15 0.1
right_player = Forward 0.15 -0.1
)scn"},
    {"11_vs_11_medium", R"scn(
name = 11_vs_11_medium
duration_frames = 3000
stochastic = true
end_on_score = false
end_on_possession_loss = false
end_on_out_of_play = false
start_mode = KickOff
ball = 0 0
difficulty = 0.6
left_player = Keeper -0.96 0
left_player = Defender -0.7 -0.28
left_player = Defender -0.74 -0.09
left_player = Defender -0.74 0.09
left_player = Defender -0.7 0.28
left_player = Midfielder -0.42 -0.28
left_player = Midfielder -0.45 -0.09
left_player = Midfielder -0.45 0.09
left_player = Midfielder -0.42 0.28
left_player = Forward -0.06 -0.12
left_player = Forward -0.01 0
right_player = Keeper 0.96 0
right_player = Defender 0.7 0.28
right_player = Defender 0.74 0.09
right_player = Defender 0.74 -0.09
right_player = Defender 0.7 -0.28
right_player = Midfielder 0.42 0.28
right_player = Midfielder 0.45 0.09
right_player = Midfielder 0.45 -0.09
right_player = Midfielder 0.42 -0.28
right_player = Forward 0.15 0.1
right_player = Forward 0.15 -0.1
)scn"},
    {"11_vs_11_hard", R"scn(
name = 11_vs_11_hard
duration_frames = 3000
stochastic = true
end_on_score = false
end_on_possession_loss = false
end_on_out_of_play = false
start_mode = KickOff
ball = 0 0
difficulty = 0.95
left_player = Keeper -0.96 0
left_player = Defender -0.7 -0.28
left_player = Defender -0.74 -0.09
left_player = Defender -0.74 0.09
left_player = Defender -0.7 0.28
left_player = Midfielder -0.42 -0.28
left_player = Midfielder -0.45 -0.09
left_player = Midfielder -0.45 0.09
left_player = Midfielder -0.42 0.28
left_player = Forward -0.06 -0.12
left_player = Forward -0.01 0
right_player = Keeper 0.96 0
right_player = Defender 0.7 0.28
right_player = Defender 0.74 0.09
right_player = Defender 0.74 -0.09
right_player = Defender 0.7 -0.28
right_player = Midfielder 0.42 0.28
right_player = Midfielder 0.45 0.09
right_player = Midfielder 0.45 -0.09
right_player = Midfielder 0.42 -0.28
right_player = Forward 0.15 0.1
right_player = Forward 0.15 -0.1
)scn"},
    {"empty_goal_close", R"scn(
name = empty_goal_close
duration_frames = 400
difficulty = 0.6
ball = 0.75 0
left_player = Keeper -0.96 0
left_player = Forward 0.74 0
right_player = Defender -0.9 0.4
)scn"},
    {"empty_goal", R"scn(
name = empty_goal
duration_frames = 400
difficulty = 0.6
ball = 0.01 0
left_player = Keeper -0.96 0
left_player = Forward 0 0
right_player = Defender -0.9 0.4
)scn"},
    {"run_to_score", R"scn(
name = run_to_score
duration_frames = 400
difficulty = 0.6
ball = 0.01 0
left_player = Keeper -0.96 0
left_player = Forward 0 0
right_player = Defender -0.1 -0.12
right_player = Defender -0.1 0.12
right_player = Defender -0.15 0
right_player = Defender -0.2 -0.24
right_player = Defender -0.2 0.24
)scn"},
    {"run_to_score_with_keeper", R"scn(
name = run_to_score_with_keeper
duration_frames = 400
difficulty = 0.6
ball = 0.01 0
left_player = Keeper -0.96 0
left_player = Forward 0 0
right_player = Keeper 0.96 0
right_player = Defender -0.1 -0.12
right_player = Defender -0.1 0.12
right_player = Defender -0.15 0
right_player = Defender -0.2 -0.24
right_player = Defender -0.2 0.24
)scn"},
    {"pass_and_shoot_with_keeper", R"scn(
name = pass_and_shoot_with_keeper
duration_frames = 400
difficulty = 0.6
ball = 0.71 -0.28
left_player = Keeper -0.96 0
left_player = Forward 0.7 -0.28
left_player = Forward 0.7 0
right_player = Keeper 0.96 0
right_player = Defender 0.74 -0.25
)scn"},
    {"run_pass_and_shoot_with_keeper", R"scn(
name = run_pass_and_shoot_with_keeper
duration_frames = 400
difficulty = 0.6
ball = 0.71 -0.28
left_player = Keeper -0.96 0
left_player = Forward 0.7 -0.28
left_player = Forward 0.7 0
right_player = Keeper 0.96 0
right_player = Defender 0.74 0.03
)scn"},
    {"3_vs_1_with_keeper", R"scn(
name = 3_vs_1_with_keeper
duration_frames = 400
difficulty = 0.6
ball = 0.61 0
left_player = Keeper -0.96 0
left_player = Forward 0.62 -0.2
left_player = Forward 0.6 0
left_player = Forward 0.62 0.2
right_player = Keeper 0.96 0
right_player = Defender 0.72 0
)scn"},
    {"corner", R"scn(
name = corner
duration_frames = 400
difficulty = 0.6
ball = 1 0.42
start_mode = Corner
end_on_possession_loss = false
left_player = Keeper -0.96 0
left_player = Defender -0.5 -0.2
left_player = Defender -0.5 0.2
left_player = Defender -0.1 -0.2
left_player = Defender -0.1 0.2
left_player = Midfielder 0.6 -0.3
left_player = Midfielder 0.6 0
left_player = Midfielder 0.75 -0.15
left_player = Midfielder 0.75 0.15
left_player = Forward 0.85 0.05
left_player = Forward 0.98 0.4
right_player = Keeper 0.96 0
right_player = Defender 0.85 -0.1
right_player = Defender 0.85 0.1
right_player = Defender 0.8 -0.2
right_player = Defender 0.8 0.2
right_player = Midfielder 0.7 -0.25
right_player = Midfielder 0.7 0
right_player = Midfielder 0.7 0.25
right_player = Midfielder 0.9 0.3
right_player = Forward 0.3 -0.1
right_player = Forward 0.3 0.1
)scn"},
    {"counterattack_easy", R"scn(
name = counterattack_easy
duration_frames = 400
difficulty = 0.6
ball = 0.37 0
left_player = Keeper -0.96 0
left_player = Midfielder 0.32 -0.22
left_player = Forward 0.36 0
left_player = Midfielder 0.32 0.22
left_player = Forward 0.45 0.12
left_player = Defender -0.6 -0.25
left_player = Defender -0.62 -0.08
left_player = Defender -0.62 0.08
left_player = Defender -0.6 0.25
left_player = Midfielder -0.2 -0.15
left_player = Midfielder -0.2 0.15
right_player = Keeper 0.96 0
right_player = Defender 0.7 0
right_player = Defender -0.05 -0.3
right_player = Defender -0.05 0.3
right_player = Defender -0.1 -0.1
right_player = Midfielder -0.1 0.1
right_player = Midfielder -0.25 -0.2
right_player = Midfielder -0.25 0.2
right_player = Midfielder -0.3 0
right_player = Forward -0.45 -0.1
right_player = Forward -0.45 0.1
)scn"},
    {"counterattack_hard", R"scn(
name = counterattack_hard
duration_frames = 400
difficulty = 0.6
ball = 0.37 0
left_player = Keeper -0.96 0
left_player = Midfielder 0.32 -0.22
left_player = Forward 0.36 0
left_player = Midfielder 0.32 0.22
left_player = Forward 0.45 0.12
left_player = Defender -0.6 -0.25
left_player = Defender -0.62 -0.08
left_player = Defender -0.62 0.08
left_player = Defender -0.6 0.25
left_player = Midfielder -0.2 -0.15
left_player = Midfielder -0.2 0.15
right_player = Keeper 0.96 0
right_player = Defender 0.7 -0.08
right_player = Defender 0.7 0.08
right_player = Defender -0.05 -0.3
right_player = Defender -0.05 0.3
right_player = Defender -0.1 -0.1
right_player = Midfielder -0.1 0.1
right_player = Midfielder -0.25 -0.2
right_player = Midfielder -0.25 0.2
right_player = Midfielder -0.3 0
right_player = Forward -0.45 -0.1
)scn"},
    {"11_vs_11_with_lazy_opponents", R"scn(
name = 11_vs_11_with_lazy_opponents
duration_frames = 3000
difficulty = 0.6
lazy_opponents = true
ball = -0.73 -0.09
left_player = Keeper -0.96 0
left_player = Defender -0.7 -0.28
left_player = Defender -0.74 -0.09
left_player = Defender -0.74 0.09
left_player = Defender -0.7 0.28
left_player = Midfielder -0.42 -0.28
left_player = Midfielder -0.45 -0.09
left_player = Midfielder -0.45 0.09
left_player = Midfielder -0.42 0.28
left_player = Forward -0.15 -0.1
left_player = Forward -0.15 0.1
right_player = Keeper 0.96 0
right_player = Defender 0.7 0.28
right_player = Defender 0.74 0.09
right_player = Defender 0.74 -0.09
right_player = Defender 0.7 -0.28
right_player = Midfielder 0.42 0.28
right_player = Midfielder 0.45 0.09
right_player = Midfielder 0.45 -0.09
right_player = Midfielder 0.42 -0.28
right_player = Forward 0.15 0.1
right_player = Forward 0.15 -0.1
)scn"},
}};

}  // namespace football::builtin_data
