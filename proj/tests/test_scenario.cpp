#include <gtest/gtest.h>

#include <set>

#include "football/engine.hpp"
#include "support.hpp"

using namespace football;
using namespace football::testing;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_scenario(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Parse, MinimalDocumentGetsDefaults) {
  const auto c = parse_scenario("left_player = Forward 0.5 0\nball = 0.52 0\n");
  EXPECT_EQ(c.duration_frames, 400);
  EXPECT_DOUBLE_EQ(c.difficulty, 0.6);
  EXPECT_TRUE(c.stochastic);
  EXPECT_TRUE(c.offsides_enabled);
  EXPECT_TRUE(c.end_on_score);
  EXPECT_TRUE(c.end_on_out_of_play);
  EXPECT_TRUE(c.end_on_possession_loss);
  EXPECT_TRUE(c.teammate_bot_enabled);
  EXPECT_FALSE(c.lazy_opponents);
  EXPECT_EQ(c.controlled_left, 1);
  EXPECT_EQ(c.controlled_right, 0);
  EXPECT_EQ(c.start_mode, GameMode::Normal);
  ASSERT_EQ(c.left_placements.size(), 1U);
  EXPECT_EQ(c.left_placements[0], (Placement{Role::Forward, {0.5, 0.0}}));
  EXPECT_TRUE(c.right_placements.empty());
  EXPECT_EQ(c.ball_start, (Vec2{0.52, 0.0}));
}

TEST(Parse, OverridesAndComments) {
  const auto c = parse_scenario(R"(
# a drill
name = drill   # trailing comment
duration_frames = 3000
difficulty = 0.95
stochastic = false
offsides = false
start_mode = Corner
controlled_left = 2
left_player = Keeper -0.96 0
left_player = Forward 0.9 0.3
right_player = Keeper 0.96 0
ball = 1 0.42
)");
  EXPECT_EQ(c.name, "drill");
  EXPECT_EQ(c.duration_frames, 3000);
  EXPECT_DOUBLE_EQ(c.difficulty, 0.95);
  EXPECT_FALSE(c.stochastic);
  EXPECT_FALSE(c.offsides_enabled);
  EXPECT_EQ(c.start_mode, GameMode::Corner);
  EXPECT_EQ(c.controlled_left, 2);
}

TEST(Parse, ErrorsCarryLineAndKey) {
  EXPECT_NE(error_of("left_player = Forward 0 0\ndifficulty = 1.5\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("left_player = Forward 0 0\ndifficulty = 1.5\n").find("difficulty"), std::string::npos);
  EXPECT_NE(error_of("colour = red\n").find("unknown key 'colour'"), std::string::npos);
  EXPECT_NE(error_of("left_player = Forward 0.1\n").find("left_player"), std::string::npos);
  EXPECT_NE(error_of("left_player = Striker 0.1 0\n").find("role"), std::string::npos);
  EXPECT_NE(error_of("ball = 0 zero\nleft_player = Forward 0 0\n").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("stochastic = maybe\n").find("true or false"), std::string::npos);
  EXPECT_NE(error_of("just words\n").find("key = value"), std::string::npos);
  EXPECT_FALSE(error_of("name = empty\n").empty());
  EXPECT_FALSE(error_of("left_player = Forward 1.5 0\n").empty());
  EXPECT_FALSE(error_of("left_player = Forward 0 0\ncontrolled_left = 2\n").empty());
}

TEST(Parse, FullTeamNeedsOneKeeper) {
  std::string text;
  for (int i = 0; i < 11; ++i) text += "left_player = Defender " + std::to_string(-0.5 + 0.05 * i) + " 0\n";
  EXPECT_NE(error_of(text).find("Keeper"), std::string::npos);
  text += "left_player = Keeper -0.9 0\n";
  EXPECT_NE(error_of(text).find("at most 11"), std::string::npos);
}

TEST(Serialize, RoundTripsEveryBuiltin) {
  for (auto name : builtin_names()) {
    const auto c = builtin(name);
    EXPECT_EQ(parse_scenario(serialize(c)), c) << name;
  }
}

TEST(Serialize, RoundTripsRandomConfigs) {
  DeterministicRng rng(77);
  for (int k = 0; k < 200; ++k) {
    ScenarioConfig c;
    c.name = "random_" + std::to_string(k);
    c.duration_frames = 1 + static_cast<int>(rng.next_u64() % 5000);
    c.difficulty = std::round(rng.uniform() * 1000) / 1000;
    c.stochastic = rng.uniform() < 0.5;
    c.offsides_enabled = rng.uniform() < 0.5;
    c.end_on_score = rng.uniform() < 0.5;
    c.end_on_possession_loss = rng.uniform() < 0.5;
    c.end_on_out_of_play = rng.uniform() < 0.5;
    c.teammate_bot_enabled = rng.uniform() < 0.5;
    c.lazy_opponents = rng.uniform() < 0.5;
    c.start_mode = static_cast<GameMode>(rng.next_u64() % kGameModeCount);
    const int nl = 1 + static_cast<int>(rng.next_u64() % 10), nr = static_cast<int>(rng.next_u64() % 11);
    for (int i = 0; i < nl; ++i) {
      c.left_placements.push_back({static_cast<Role>(1 + rng.next_u64() % 3), {rng.uniform() * 2 - 1, rng.uniform() * 0.84 - 0.42}});
    }
    for (int i = 0; i < nr; ++i) {
      c.right_placements.push_back({static_cast<Role>(1 + rng.next_u64() % 3), {rng.uniform() * 2 - 1, rng.uniform() * 0.84 - 0.42}});
    }
    c.controlled_left = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(nl + 1));
    c.controlled_right = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(nr + 1));
    c.ball_start = {rng.uniform() * 2 - 1, rng.uniform() * 0.84 - 0.42};
    ASSERT_EQ(parse_scenario(serialize(c)), c) << serialize(c);
  }
}

TEST(Builtin, FourteenNamesPlusAlias) {
  const auto names = builtin_names();
  const std::set<std::string_view> expected = {
      "11_vs_11_easy", "11_vs_11_medium", "11_vs_11_hard", "empty_goal_close", "empty_goal", "run_to_score",
      "run_to_score_with_keeper", "pass_and_shoot_with_keeper", "run_pass_and_shoot_with_keeper",
      "3_vs_1_with_keeper", "corner", "counterattack_easy", "counterattack_hard", "11_vs_11_with_lazy_opponents",
      "11_vs_11_stochastic"};
  EXPECT_EQ(std::set<std::string_view>(names.begin(), names.end()), expected);
  for (auto n : names) {
    const auto c = builtin(n);
    EXPECT_NO_THROW(validate(c)) << n;
    EXPECT_NO_THROW(reset_state(c, 1)) << n;
  }
}

TEST(Builtin, Benchmarks) {
  const auto hard = builtin("11_vs_11_hard");
  EXPECT_DOUBLE_EQ(hard.difficulty, 0.95);
  EXPECT_EQ(hard.duration_frames, 3000);
  EXPECT_DOUBLE_EQ(builtin("11_vs_11_easy").difficulty, 0.05);
  EXPECT_DOUBLE_EQ(builtin("11_vs_11_medium").difficulty, 0.6);
  auto alias = builtin("11_vs_11_stochastic");
  EXPECT_EQ(alias, builtin("11_vs_11_medium"));
  for (auto n : {"11_vs_11_easy", "11_vs_11_medium", "11_vs_11_hard"}) {
    const auto c = builtin(n);
    EXPECT_EQ(c.left_placements.size(), 11U);
    EXPECT_EQ(c.right_placements.size(), 11U);
    EXPECT_FALSE(c.end_on_score);
    EXPECT_EQ(c.start_mode, GameMode::KickOff);
  }
}

TEST(Builtin, AcademyDefaults) {
  for (auto n : builtin_names()) {
    const std::string name(n);
    if (name.rfind("11_vs_11", 0) == 0 && name != "11_vs_11_with_lazy_opponents") continue;
    const auto c = builtin(n);
    EXPECT_DOUBLE_EQ(c.difficulty, 0.6) << name;
    EXPECT_EQ(c.duration_frames, name == "11_vs_11_with_lazy_opponents" ? 3000 : 400) << name;
  }
  const auto corner = builtin("corner");
  EXPECT_EQ(corner.start_mode, GameMode::Corner);
  EXPECT_FALSE(corner.end_on_possession_loss);
  EXPECT_TRUE(builtin("11_vs_11_with_lazy_opponents").lazy_opponents);
}

TEST(Builtin, ThreeVersusOneLayout) {
  const auto c = builtin("3_vs_1_with_keeper");
  EXPECT_EQ(std::count_if(c.left_placements.begin(), c.left_placements.end(),
                          [](const Placement& p) { return p.role != Role::Keeper; }),
            3);
  EXPECT_EQ(c.right_placements.size(), 2U);
}

TEST(Builtin, UnknownNameListsValidNames) {
  try {
    builtin("academy_unknown");
    FAIL();
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("academy_unknown"), std::string::npos);
    EXPECT_NE(msg.find("empty_goal_close"), std::string::npos);
  }
}

// Termination -----------------------------------------------------------------------

TEST(Done, BenchmarkEndsOnTimeOnly) {
  const auto c = builtin("11_vs_11_medium");
  auto s = reset_state(c, 1);
  s.frame = 100;
  const std::vector<Event> goal{{EventKind::Goal, Side::Left}};
  EXPECT_FALSE(is_episode_done(s, c, goal));
  s.frame = 3000;
  EXPECT_EQ(is_episode_done(s, c, {}), EndReason::Time);
}

TEST(Done, AcademyEndsOnScoreAndStoppage) {
  const auto c = builtin("empty_goal_close");
  auto s = reset_state(c, 1);
  s.frame = 57;
  EXPECT_FALSE(is_episode_done(s, c, {}));
  const std::vector<Event> goal{{EventKind::Goal, Side::Left}};
  EXPECT_EQ(is_episode_done(s, c, goal), EndReason::Score);
  const std::vector<Event> own{{EventKind::OwnGoal, Side::Right}};
  EXPECT_EQ(is_episode_done(s, c, own), EndReason::Score);
  const std::vector<Event> out{{EventKind::OutLeftRight, Side::Right, -1, GameMode::ThrowIn}};
  EXPECT_EQ(is_episode_done(s, c, out), EndReason::OutOfPlay);
  const std::vector<Event> foul{{EventKind::Foul, Side::Right}};
  EXPECT_EQ(is_episode_done(s, c, foul), EndReason::OutOfPlay);
  const std::vector<Event> offside{{EventKind::OffsideCalled, Side::Left}};
  EXPECT_EQ(is_episode_done(s, c, offside), EndReason::OutOfPlay);
  s.frame = 400;
  EXPECT_EQ(is_episode_done(s, c, {}), EndReason::Time);
}

TEST(Done, PossessionLossOnlyToUncontrolledSide) {
  const auto c = builtin("run_to_score_with_keeper");
  const auto s = reset_state(c, 1);
  const std::vector<Event> lost{{EventKind::PossessionChange, Side::Right}};
  const std::vector<Event> won{{EventKind::PossessionChange, Side::Left}};
  EXPECT_EQ(is_episode_done(s, c, lost), EndReason::PossessionLost);
  EXPECT_FALSE(is_episode_done(s, c, won));
  EXPECT_FALSE(is_episode_done(s, builtin("corner"), lost));
}

TEST(Done, UncontrolledSide) {
  ScenarioConfig c;
  c.controlled_left = 1;
  c.controlled_right = 0;
  EXPECT_EQ(uncontrolled_side(c), Side::Right);
  c.controlled_left = 0;
  c.controlled_right = 3;
  EXPECT_EQ(uncontrolled_side(c), Side::Left);
  c.controlled_left = 1;
  EXPECT_FALSE(uncontrolled_side(c));
}

TEST(Done, StartModeRestartsHonoured) {
  const auto s = reset_state(builtin("corner"), 9);
  EXPECT_EQ(s.mode, GameMode::Corner);
  ASSERT_TRUE(s.ball.owned_by);
  EXPECT_EQ(s.ball.owned_by->side, Side::Left);
}
