#include <gtest/gtest.h>

#include <filesystem>

#include "replay_support.hpp"

using namespace football;
using namespace football::testing;

namespace {

Replay short_env_replay(std::uint64_t seed = 7) {
  auto env = Environment::create("empty_goal_close");
  return record_env_episode(env, random_agent(seed), seed);
}

}  // namespace

// Encoding ---------------------------------------------------------------------------

TEST(Encoding, RoundTrip) {
  const auto r = short_env_replay();
  const auto bytes = encode_replay(r);
  EXPECT_EQ(decode_replay(bytes), r);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "MPRP");
  EXPECT_EQ(bytes[4] | (bytes[5] << 8), kReplayVersion);
}

TEST(Encoding, RoundTripFullModeWithOpponentField) {
  Replay r;
  r.mode = ReplayMode::Full;
  r.scenario_text = serialize(builtin("3_vs_1_with_keeper"));
  r.episode_seed = 0xdeadbeefcafeULL;
  r.kickoff = Side::Right;
  r.opponent_players = 3;
  r.options_digest = 42;
  r.frames.push_back({{Action::Shot, Action::Left}, {Action::Idle}});
  r.frames.push_back({{}, {}});
  r.digests.push_back({100, 0x0123456789abcdefULL});
  EXPECT_EQ(decode_replay(encode_replay(r)), r);
}

TEST(Encoding, SaveAndLoad) {
  const auto r = short_env_replay(3);
  const auto path = (std::filesystem::temp_directory_path() / "football_test_replay.bin").string();
  save_replay(r, path);
  EXPECT_EQ(load_replay(path), r);
  std::filesystem::remove(path);
  EXPECT_THROW(load_replay(path), ReplayError);
}

TEST(Encoding, EveryTruncationRejected) {
  const auto bytes = encode_replay(short_env_replay());
  for (std::size_t n = 0; n < bytes.size(); ++n) {
    const std::vector<std::uint8_t> cut(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(n));
    EXPECT_THROW(decode_replay(cut), ReplayError) << "length " << n;
  }
}

TEST(Encoding, BadMagicVersionAndTrailingBytes) {
  const auto bytes = encode_replay(short_env_replay());
  auto magic = bytes;
  magic[0] = 'X';
  EXPECT_THROW(decode_replay(magic), ReplayError);
  auto version = bytes;
  version[4] = 2;
  EXPECT_THROW(decode_replay(version), ReplayError);
  auto trailing = bytes;
  trailing.push_back(0);
  EXPECT_THROW(decode_replay(trailing), ReplayError);
}

TEST(Encoding, InvalidActionByteRejected) {
  const auto r = short_env_replay();
  auto bytes = encode_replay(r);
  const auto offsets = action_byte_offsets(r);
  ASSERT_FALSE(offsets.empty());
  bytes[offsets.front()] = static_cast<std::uint8_t>(kActionCount);
  EXPECT_THROW(decode_replay(bytes), ReplayError);
}

TEST(Encoding, ActionOffsetsPointAtActions) {
  const auto r = short_env_replay();
  const auto bytes = encode_replay(r);
  const auto offsets = action_byte_offsets(r);
  std::size_t k = 0;
  for (const auto& f : r.frames) {
    for (Action a : f.actions) EXPECT_EQ(bytes[offsets[k++]], static_cast<std::uint8_t>(a));
  }
  EXPECT_EQ(k, offsets.size());
}

// Recording -------------------------------------------------------------------------

TEST(Record, DigestsEveryHundredFramesPlusFinal) {
  auto env = Environment::create("11_vs_11_easy");
  const auto r = record_env_episode(env, random_agent(1), 11);
  ASSERT_EQ(r.frames.size(), 3000U);
  ASSERT_EQ(r.digests.size(), 30U);
  for (std::size_t i = 0; i < r.digests.size(); ++i) EXPECT_EQ(r.digests[i].frame, 100 * (i + 1));
}

TEST(Record, ShortEpisodeEndsWithFinalDigest) {
  const auto r = short_env_replay();
  ASSERT_FALSE(r.digests.empty());
  EXPECT_EQ(r.digests.back().frame, r.frames.size());
  EXPECT_LT(r.frames.size(), 401U);
}

TEST(Record, HeaderCarriesEpisodeParameters) {
  auto env = Environment::create("counterattack_hard");
  env.set_kickoff_side(Side::Right);
  const auto r = record_env_episode(env, random_agent(2), 99);
  EXPECT_EQ(r.mode, ReplayMode::Env);
  EXPECT_EQ(r.episode_seed, 99U);
  EXPECT_EQ(r.kickoff, Side::Right);
  EXPECT_EQ(r.opponent_players, 0);
  EXPECT_EQ(r.scenario_text, serialize(builtin("counterattack_hard")));
}

// Verification ----------------------------------------------------------------------

class EnvModeVerify : public ::testing::TestWithParam<const char*> {};

TEST_P(EnvModeVerify, RecordedEpisodeVerifies) {
  auto env = Environment::create(GetParam());
  for (std::uint64_t seed : {1ULL, 2ULL}) {
    const auto r = record_env_episode(env, random_agent(seed * 31), episode_seed_for(5, seed));
    const auto v = verify_replay(decode_replay(encode_replay(r)));
    EXPECT_TRUE(v.ok) << v.message;
    EXPECT_EQ(v.frames, static_cast<int>(r.frames.size()));
    EXPECT_FALSE(v.mismatch_frame);
  }
}

INSTANTIATE_TEST_SUITE_P(Scenarios, EnvModeVerify,
                         ::testing::Values("empty_goal_close", "run_to_score_with_keeper",
                                           "3_vs_1_with_keeper", "corner",
                                           "11_vs_11_with_lazy_opponents", "11_vs_11_stochastic"));

TEST(Verify, FullModeEpisodeVerifies) {
  auto env = Environment::create("11_vs_11_hard");
  const auto r = record_full_episode(env, random_joint(4), 12345);
  EXPECT_EQ(r.mode, ReplayMode::Full);
  ASSERT_EQ(r.frames.size(), 3000U);
  EXPECT_EQ(r.frames.front().actions.size(), 22U);
  const auto v = verify_replay(r);
  EXPECT_TRUE(v.ok) << v.message;
}

TEST(Verify, FullModeBotGameVerifies) {
  auto env = Environment::create("3_vs_1_with_keeper");
  BotController left(BotParams::from_theta(0.8), DeterministicRng(1));
  BotController right(BotParams::from_theta(0.3), DeterministicRng(2));
  const auto r = record_full_episode(
      env,
      [&](const GameState& s) {
        JointAction a{};
        const auto l = left.act(s, Side::Left);
        const auto rr = right.act(s, Side::Right);
        for (int i = 0; i < kTeamSize; ++i) {
          a[joint_index({Side::Left, i})] = l[static_cast<std::size_t>(i)];
          a[joint_index({Side::Right, i})] = rr[static_cast<std::size_t>(i)];
        }
        return a;
      },
      77);
  const auto v = verify_replay(r);
  EXPECT_TRUE(v.ok) << v.message;
}

TEST(Verify, OpponentPolicyEpisodeVerifies) {
  auto env = Environment::create("11_vs_11_medium");
  auto rng = std::make_shared<DeterministicRng>(9);
  env.set_opponent_policy(
      [rng](std::span<const Observation> obs) {
        std::vector<Action> out;
        for (std::size_t i = 0; i < obs.size(); ++i) out.push_back(static_cast<Action>(rng->next_u64() % kActionCount));
        return out;
      },
      4);
  const auto r = record_env_episode(env, random_agent(8), 4242);
  EXPECT_EQ(r.opponent_players, 4);
  ASSERT_FALSE(r.frames.empty());
  EXPECT_EQ(r.frames.front().opponent.size(), 4U);
  const auto v = verify_replay(decode_replay(encode_replay(r)));
  EXPECT_TRUE(v.ok) << v.message;
}

TEST(Verify, ChangedActionDetectedAtNextDigest) {
  auto env = Environment::create("11_vs_11_easy");
  auto r = record_env_episode(env, random_agent(6), 3);
  auto& a = r.frames[150].actions[0];
  a = static_cast<Action>((static_cast<int>(a) + 1) % kActionCount);
  const auto v = verify_replay(r);
  EXPECT_FALSE(v.ok);
  ASSERT_TRUE(v.mismatch_frame);
  EXPECT_EQ(*v.mismatch_frame, 200U);
  EXPECT_NE(v.message.find("digest mismatch at frame 200"), std::string::npos);
}

TEST(Verify, EveryActionByteMutationDetected) {
  const auto r = short_env_replay(5);
  const auto bytes = encode_replay(r);
  const auto offsets = action_byte_offsets(r);
  for (std::size_t off : offsets) {
    for (int delta : {1, 7, 200}) {
      auto m = bytes;
      m[off] = static_cast<std::uint8_t>(m[off] + delta);
      EXPECT_TRUE(mutation_detected(m)) << "offset " << off << " delta " << delta;
    }
  }
}

TEST(Verify, WrongSeedDetected) {
  auto env = Environment::create("11_vs_11_stochastic");
  auto r = record_env_episode(env, random_agent(1), 10);
  r.episode_seed = 11;
  EXPECT_FALSE(verify_replay(r).ok);
}

TEST(Verify, ExtraAndMissingFramesDetected) {
  auto r = short_env_replay(2);
  auto longer = r;
  longer.frames.push_back(longer.frames.back());
  const auto v1 = verify_replay(longer);
  EXPECT_FALSE(v1.ok);
  EXPECT_NE(v1.message.find("continues after the episode ended"), std::string::npos);

  auto shorter = r;
  shorter.frames.pop_back();
  const auto v2 = verify_replay(shorter);
  EXPECT_FALSE(v2.ok);
}

TEST(Verify, BadScenarioTextReported) {
  auto r = short_env_replay();
  r.scenario_text = "garbage line\n";
  const auto v = verify_replay(r);
  EXPECT_FALSE(v.ok);
  EXPECT_NE(v.message.find("bad scenario in replay"), std::string::npos);
}

TEST(Verify, WrongActionCountRejectedByEngine) {
  auto r = short_env_replay();
  r.frames[0].actions.push_back(Action::Idle);
  const auto v = verify_replay(r);
  EXPECT_FALSE(v.ok);
  EXPECT_NE(v.message.find("rejected by engine"), std::string::npos);
}
