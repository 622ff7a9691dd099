#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <sstream>
#include <thread>

#include "football/harness.hpp"
#include "replay_support.hpp"

using namespace football;
using namespace football::testing;

namespace {

ScenarioConfig deterministic(std::string_view name) {
  auto c = builtin(name);
  c.stochastic = false;
  return c;
}

// Binomial tail by direct enumeration of all 2^n outcomes.
double brute_sign_p(int wins, int losses) {
  const int n = wins + losses;
  long hits = 0;
  for (long mask = 0; mask < (1L << n); ++mask) {
    if (__builtin_popcountl(static_cast<unsigned long>(mask)) >= wins) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(1L << n);
}

}  // namespace

// Controllers -----------------------------------------------------------------------

TEST(Controllers, SpecsAccepted) {
  for (const char* spec : {"bot", "bot:0", "bot:1", "bot:0.6", "idle", "random", "ext:localhost:9000"}) {
    EXPECT_NE(make_controller(spec), nullptr) << spec;
  }
}

TEST(Controllers, BadSpecsRejected) {
  for (const char* spec :
       {"", "bot:", "bot:1.5", "bot:-0.1", "bot:abc", "idle:1", "random:x", "replay:", "ext:", "ext:host", "ext:host:0",
        "ext:host:70000", "ext::80", "human", "Bot:0.5"}) {
    EXPECT_THROW(make_controller(spec), ConfigError) << spec;
  }
}

TEST(Controllers, UnknownSpecListsTheKinds) {
  try {
    make_controller("wizard");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("bot:THETA"), std::string::npos);
  }
}

TEST(Controllers, MissingReplayFileIsConfigError) {
  EXPECT_THROW(make_controller("replay:/nonexistent/file.bin"), ConfigError);
}

TEST(Controllers, EnvModeReplayRejected) {
  auto env = Environment::create("empty_goal_close");
  const auto r = record_env_episode(env, random_agent(1), 1);
  const auto path = (std::filesystem::temp_directory_path() / "football_env_mode.bin").string();
  save_replay(r, path);
  EXPECT_THROW(make_controller("replay:" + path), ConfigError);
  std::filesystem::remove(path);
}

TEST(Controllers, IdleControllerIdles) {
  const auto s = reset_state(builtin("11_vs_11_easy"), 0);
  IdleController c;
  for (Action a : c.act(s, Side::Left)) EXPECT_EQ(a, Action::Idle);
}

TEST(Controllers, RandomControllerIsSeeded) {
  const auto s = reset_state(builtin("11_vs_11_easy"), 0);
  RandomController a;
  RandomController b;
  a.begin_episode(s, Side::Left, 5);
  b.begin_episode(s, Side::Left, 5);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(a.act(s, Side::Left), b.act(s, Side::Left));
}

TEST(Controllers, ReplayControllersReproduceRecordedGame) {
  auto env = Environment::create("11_vs_11_hard");
  const auto r = record_full_episode(env, random_joint(3), 0);
  env.reset_episode(0);
  for (const auto& f : r.frames) {
    JointAction j{};
    std::copy(f.actions.begin(), f.actions.end(), j.begin());
    env.step_all(j);
  }
  const auto recorded = env.state().score;

  const auto path = (std::filesystem::temp_directory_path() / "football_full_mode.bin").string();
  save_replay(r, path);
  auto left = make_controller("replay:" + path);
  auto right = make_controller("replay:" + path);
  std::filesystem::remove(path);
  env.reset_episode(0);
  while (!env.done()) {
    JointAction j{};
    const auto l = left->act(env.state(), Side::Left);
    const auto rr = right->act(env.state(), Side::Right);
    std::copy(l.begin(), l.end(), j.begin());
    std::copy(rr.begin(), rr.end(), j.begin() + kTeamSize);
    env.step_all(j);
  }
  EXPECT_EQ(env.state().score, recorded);
}

TEST(Controllers, ExternalControllerOverHttp) {
  httplib::Server server;
  std::atomic<int> calls{0};
  std::atomic<bool> saw_side{true};
  server.Post("/act", [&](const httplib::Request& req, httplib::Response& res) {
    ++calls;
    const auto j = nlohmann::json::parse(req.body);
    if (j.at("side") != "right" || !j.contains("state")) saw_side = false;
    nlohmann::json reply;
    reply["actions"] = std::vector<std::string>(kTeamSize, "Idle");
    res.set_content(reply.dump(), "application/json");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread t([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  auto scenario = deterministic("empty_goal_close");
  EvalConfig ext{scenario, "bot:0.6", "ext:127.0.0.1:" + std::to_string(port), 1, 0, Side::Left};
  EvalConfig idle{scenario, "bot:0.6", "idle", 1, 0, Side::Left};
  EvalResult a;
  std::string error;
  try {
    a = run_eval(ext);
  } catch (const std::exception& e) {
    error = e.what();
  }
  server.stop();
  t.join();
  ASSERT_EQ(error, "");
  const auto b = run_eval(idle);
  EXPECT_GT(calls.load(), 0);
  EXPECT_TRUE(saw_side.load());
  EXPECT_EQ(a.goal_diffs, b.goal_diffs);
}

TEST(Controllers, UnreachableExternalControllerFails) {
  EvalConfig c{deterministic("empty_goal_close"), "ext:127.0.0.1:1", "idle", 1, 0, Side::Left};
  EXPECT_THROW(run_eval(c), ConfigError);
}

// Statistics ------------------------------------------------------------------------

TEST(Stats, SignTestMatchesEnumeration) {
  for (int w = 0; w <= 10; ++w) {
    for (int l = 0; w + l <= 14; ++l) {
      EXPECT_NEAR(sign_test_p_value(w, l), brute_sign_p(w, l), 1e-12) << w << "/" << l;
    }
  }
  EXPECT_DOUBLE_EQ(sign_test_p_value(0, 0), 1.0);
}

TEST(Stats, SummaryCountsAndSampleStd) {
  const auto r = summarize({2, -1, 0, 3});
  EXPECT_DOUBLE_EQ(r.mean, 1.0);
  EXPECT_DOUBLE_EQ(r.stddev, std::sqrt((1.0 + 4.0 + 1.0 + 4.0) / 3.0));
  EXPECT_EQ(r.wins, 2);
  EXPECT_EQ(r.losses, 1);
  EXPECT_EQ(r.draws, 1);
  EXPECT_DOUBLE_EQ(r.sign_test_p, 0.5);
}

// Evaluation ------------------------------------------------------------------------

TEST(Eval, SingleEpisodeHasZeroStd) {
  EvalConfig c{builtin("11_vs_11_easy"), "bot:0.6", "bot:0.6", 1, 4, Side::Left};
  const auto r = run_eval(c);
  ASSERT_EQ(r.goal_diffs.size(), 1U);
  EXPECT_DOUBLE_EQ(r.stddev, 0.0);
  EXPECT_DOUBLE_EQ(r.mean, r.goal_diffs[0]);
}

TEST(Eval, RepeatableForFixedSeed) {
  EvalConfig c{builtin("11_vs_11_stochastic"), "bot:0.7", "random", 3, 9, Side::Left};
  EXPECT_EQ(run_eval(c).goal_diffs, run_eval(c).goal_diffs);
}

TEST(Eval, ZeroEpisodesRejected) {
  EvalConfig c{builtin("11_vs_11_easy"), "bot", "bot", 0, 0, Side::Left};
  EXPECT_THROW(run_eval(c), ContractError);
}

TEST(Eval, StrongBotBeatsIdleSide) {
  EvalConfig c{builtin("11_vs_11_medium"), "bot:0.6", "idle", 2, 1, Side::Left};
  const auto r = run_eval(c);
  EXPECT_EQ(r.wins, 2);
}

class MirroredEval : public ::testing::TestWithParam<std::tuple<const char*, const char*, const char*>> {};

TEST_P(MirroredEval, SwappedSidesNegateExactly) {
  const auto [scenario, a, b] = GetParam();
  EvalConfig forward{deterministic(scenario), a, b, 4, 3, Side::Left};
  EvalConfig swapped{deterministic(scenario), b, a, 4, 3, Side::Right};
  const auto f = run_eval(forward);
  const auto s = run_eval(swapped);
  EXPECT_EQ(f.mean, -s.mean);
  for (std::size_t i = 0; i < f.goal_diffs.size(); ++i) EXPECT_EQ(f.goal_diffs[i], -s.goal_diffs[i]) << i;
}

INSTANTIATE_TEST_SUITE_P(Pairs, MirroredEval,
                         ::testing::Values(std::make_tuple("11_vs_11_easy", "bot:0.9", "bot:0.2"),
                                           std::make_tuple("11_vs_11_hard", "bot:0.6", "bot:0.6"),
                                           std::make_tuple("11_vs_11_medium", "bot:0.3", "idle"),
                                           std::make_tuple("counterattack_easy", "bot:0.8", "bot:0.4")));

// Benchmark -------------------------------------------------------------------------

TEST(Bench, StepAccountingExact) {
  for (int envs : {1, 2, 3}) {
    BenchConfig c;
    c.envs = envs;
    c.steps = 700;
    const auto row = run_benchmark(c);
    EXPECT_EQ(row.n_envs, envs);
    EXPECT_EQ(row.steps, 700L * envs);
    EXPECT_GT(row.seconds, 0.0);
    EXPECT_NEAR(row.steps_per_sec, static_cast<double>(row.steps) / row.seconds, 1e-6 * row.steps_per_sec);
    EXPECT_NEAR(row.steps_per_day, row.steps_per_sec * 86400.0, 1e-6 * row.steps_per_day);
  }
}

TEST(Bench, ShortEpisodesAreResetAndCounted) {
  BenchConfig c;
  c.scenario = "empty_goal_close";
  c.steps = 2000;
  EXPECT_EQ(run_benchmark(c).steps, 2000);
}

TEST(Bench, BadConfigRejected) {
  BenchConfig c;
  c.envs = 0;
  EXPECT_THROW(run_benchmark(c), ContractError);
  c.envs = 1;
  c.steps = 0;
  EXPECT_THROW(run_benchmark(c), ContractError);
  c.steps = 10;
  c.scenario = "no_such_scenario";
  EXPECT_THROW(run_benchmark(c), ConfigError);
}

TEST(Bench, PixelsSlowerThanRaw) {
  BenchConfig raw;
  raw.steps = 300;
  raw.representation = Representation::Raw;
  BenchConfig pixels = raw;
  pixels.representation = Representation::Pixels;
  EXPECT_GT(run_benchmark(raw).steps_per_sec, run_benchmark(pixels).steps_per_sec);
}

TEST(Bench, CsvHeaderAndRow) {
  EXPECT_EQ(kBenchCsvHeader, "n_envs,steps,seconds,steps_per_sec,steps_per_day");
  std::ostringstream out;
  write_bench_row(out, {2, 600, 0.5, 1200.0, 103680000.0});
  EXPECT_EQ(out.str(), "2,600,0.5,1200,1.0368e+08\n");
}

// Mirrored evaluation ---------------------------------------------------------------

TEST(MirroredEvalPairs, SecondEpisodeIsExactMirrorInDeterministicMode) {
  EvalConfig c{deterministic("11_vs_11_medium"), "bot:0.7", "bot:0.4", 6, 2, Side::Left};
  const auto r = run_mirrored_eval(c);
  ASSERT_EQ(r.goal_diffs.size(), 6U);
  for (std::size_t i = 0; i < r.goal_diffs.size(); i += 2) EXPECT_EQ(r.goal_diffs[i], r.goal_diffs[i + 1]) << i;
}

TEST(MirroredEvalPairs, ReportsFromFirstControllersView) {
  EvalConfig c{builtin("11_vs_11_stochastic"), "bot:0.6", "idle", 4, 0, Side::Left};
  const auto r = run_mirrored_eval(c);
  EXPECT_EQ(r.wins, 4);
  EXPECT_GT(r.mean, 0.0);
}

TEST(MirroredEvalPairs, PairsMatchTwoPlainRuns) {
  EvalConfig c{builtin("11_vs_11_stochastic"), "bot:0.9", "bot:0.2", 4, 5, Side::Left};
  const auto r = run_mirrored_eval(c);
  EvalConfig f = c;
  f.episodes = 2;
  EvalConfig s{c.scenario, "bot:0.2", "bot:0.9", 2, 5, Side::Right};
  const auto a = run_eval(f);
  const auto b = run_eval(s);
  EXPECT_EQ(r.goal_diffs, (std::vector<int>{a.goal_diffs[0], -b.goal_diffs[0], a.goal_diffs[1], -b.goal_diffs[1]}));
}

TEST(MirroredEvalPairs, OddOrZeroEpisodesRejected) {
  for (int n : {0, 1, 3}) {
    EvalConfig c{builtin("11_vs_11_easy"), "bot", "bot", n, 0, Side::Left};
    EXPECT_THROW(run_mirrored_eval(c), ContractError) << n;
  }
}
