#pragma once

#include <chrono>
#include <cmath>
#include <future>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "httplib.h"

#include "football/env.hpp"
#include "football/replay.hpp"
#include "football/wire.hpp"

namespace football {

// Controllers -----------------------------------------------------------------------

// Drives one whole side in absolute coordinates during evaluation.
class Controller {
 public:
  virtual ~Controller() = default;
  virtual void begin_episode(const GameState& /*state*/, Side /*side*/, std::uint64_t /*seed*/) {}
  virtual std::array<Action, kTeamSize> act(const GameState& state, Side side) = 0;
};

class BotSideController : public Controller {
 public:
  explicit BotSideController(double theta) : params_(BotParams::from_theta(theta)) {}
  void begin_episode(const GameState&, Side, std::uint64_t seed) override {
    bot_ = BotController(params_, DeterministicRng(seed));
  }
  std::array<Action, kTeamSize> act(const GameState& s, Side side) override { return bot_.act(s, side); }

 private:
  BotParams params_;
  BotController bot_;
};

class IdleController : public Controller {
 public:
  std::array<Action, kTeamSize> act(const GameState&, Side) override { return {}; }
};

// Uniformly random actions for the active player; teammates follow the built-in logic.
class RandomController : public Controller {
 public:
  void begin_episode(const GameState&, Side, std::uint64_t seed) override { rng_ = DeterministicRng(seed); }
  std::array<Action, kTeamSize> act(const GameState& s, Side side) override {
    std::array<Action, kTeamSize> out{};
    for (int i = 0; i < kTeamSize; ++i) out[static_cast<std::size_t>(i)] = teammate_action(s, side, i);
    const int active = s.active_player[index_of(side)];
    if (s.team(side)[static_cast<std::size_t>(active)].on_pitch()) {
      out[static_cast<std::size_t>(active)] = static_cast<Action>(rng_.next_u64() % kActionCount);
    }
    return out;
  }

 private:
  DeterministicRng rng_;
};

// Plays back one side of a full-mode replay, frame by frame.
class ReplayController : public Controller {
 public:
  explicit ReplayController(Replay replay) : replay_(std::move(replay)) {
    if (replay_.mode != ReplayMode::Full) throw ConfigError("replay controller needs a full-mode replay");
  }
  std::array<Action, kTeamSize> act(const GameState& s, Side side) override {
    std::array<Action, kTeamSize> out{};
    const auto frame = static_cast<std::size_t>(s.frame);
    if (frame >= replay_.frames.size()) return out;
    const auto& acts = replay_.frames[frame].actions;
    for (int i = 0; i < kTeamSize; ++i) {
      const Action a = acts[static_cast<std::size_t>(joint_index({side, i}))];
      out[static_cast<std::size_t>(i)] = s.team(side)[static_cast<std::size_t>(i)].on_pitch() ? a : Action::Idle;
    }
    return out;
  }

 private:
  Replay replay_;
};

// Asks an external process over HTTP: POST /act (see wire.hpp).
class ExternalController : public Controller {
 public:
  ExternalController(std::string host, int port) : client_(std::move(host), port) {
    client_.set_connection_timeout(5, 0);
    client_.set_read_timeout(30, 0);
  }
  std::array<Action, kTeamSize> act(const GameState& s, Side side) override {
    const auto res = client_.Post("/act", wire::act_request(s, side).dump(), "application/json");
    if (!res) throw ConfigError("external controller unreachable: " + httplib::to_string(res.error()));
    if (res->status != 200) throw ConfigError("external controller returned HTTP " + std::to_string(res->status));
    auto out = wire::parse_act_response(res->body);
    for (int i = 0; i < kTeamSize; ++i) {
      if (!s.team(side)[static_cast<std::size_t>(i)].on_pitch()) out[static_cast<std::size_t>(i)] = Action::Idle;
    }
    return out;
  }

 private:
  httplib::Client client_;
};

// Controller specs: "bot:THETA", "idle", "random", "replay:PATH", "ext:HOST:PORT".
inline std::unique_ptr<Controller> make_controller(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (kind == "bot") {
    const auto theta = colon == std::string_view::npos ? std::optional<double>(0.6) : detail::parse_double(arg);
    if (!theta || !(*theta >= 0.0 && *theta <= 1.0)) {
      throw ConfigError("controller '" + std::string(spec) + "': difficulty must be a number in [0, 1]");
    }
    return std::make_unique<BotSideController>(*theta);
  }
  if (kind == "idle" && arg.empty()) return std::make_unique<IdleController>();
  if (kind == "random" && arg.empty()) return std::make_unique<RandomController>();
  if (kind == "replay" && !arg.empty()) {
    try {
      return std::make_unique<ReplayController>(load_replay(std::string(arg)));
    } catch (const ReplayError& e) {
      throw ConfigError("controller '" + std::string(spec) + "': " + e.what());
    }
  }
  if (kind == "ext") {
    const auto sep = arg.rfind(':');
    const auto port = sep == std::string_view::npos ? std::nullopt : detail::parse_int(arg.substr(sep + 1));
    if (!port || *port <= 0 || *port > 65535 || sep == 0) {
      throw ConfigError("controller '" + std::string(spec) + "': expected ext:HOST:PORT");
    }
    return std::make_unique<ExternalController>(std::string(arg.substr(0, sep)), *port);
  }
  throw ConfigError("unknown controller '" + std::string(spec) +
                    "' (expected bot:THETA, idle, random, replay:PATH or ext:HOST:PORT)");
}

// Evaluation ------------------------------------------------------------------------

struct EvalConfig {
  ScenarioConfig scenario;
  std::string left = "bot:0.6";
  std::string right = "bot:0.6";
  int episodes = 10;
  std::uint64_t seed = 0;
  Side first_kickoff = Side::Left;
};

struct EvalResult {
  std::vector<int> goal_diffs;  // left minus right, per episode
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  int wins = 0;
  int losses = 0;
  int draws = 0;
  double sign_test_p = 1.0;  // one-sided, H1: left is better
};

// P(X >= wins) for X ~ Binomial(wins + losses, 1/2).
inline double sign_test_p_value(int wins, int losses) {
  const int n = wins + losses;
  if (n == 0) return 1.0;
  double p = 0.0;
  for (int k = wins; k <= n; ++k) {
    p += std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) - n * std::log(2.0));
  }
  return std::min(1.0, p);
}

inline EvalResult summarize(std::vector<int> diffs) {
  EvalResult r;
  r.goal_diffs = std::move(diffs);
  const auto n = static_cast<double>(r.goal_diffs.size());
  if (n > 0) r.mean = std::accumulate(r.goal_diffs.begin(), r.goal_diffs.end(), 0.0) / n;
  if (n > 1) {
    double ss = 0.0;
    for (int d : r.goal_diffs) ss += (d - r.mean) * (d - r.mean);
    r.stddev = std::sqrt(ss / (n - 1));
  }
  for (int d : r.goal_diffs) {
    if (d > 0) ++r.wins;
    else if (d < 0) ++r.losses;
    else ++r.draws;
  }
  r.sign_test_p = sign_test_p_value(r.wins, r.losses);
  return r;
}

// Plays episodes on seeds seed, seed + 1, ... between two controllers,
// alternating the kickoff side.
inline EvalResult run_eval(const EvalConfig& config) {
  if (config.episodes < 1) throw ContractError("run_eval: episodes must be at least 1");
  auto left = make_controller(config.left);
  auto right = make_controller(config.right);
  Environment env(config.scenario, EnvOptions{});
  std::vector<int> diffs;
  for (int e = 0; e < config.episodes; ++e) {
    env.seed(config.seed + static_cast<std::uint64_t>(e));
    env.set_kickoff_side(e % 2 == 0 ? config.first_kickoff : opponent(config.first_kickoff));
    env.reset();
    const DeterministicRng seeds(env.episode_seed());
    left->begin_episode(env.state(), Side::Left, seeds.split(1).next_u64());
    right->begin_episode(env.state(), Side::Right, seeds.split(2).next_u64());
    while (!env.done()) {
      JointAction joint{};
      const auto l = left->act(env.state(), Side::Left);
      const auto r = right->act(env.state(), Side::Right);
      std::copy(l.begin(), l.end(), joint.begin());
      std::copy(r.begin(), r.end(), joint.begin() + kTeamSize);
      env.step_all(joint);
    }
    diffs.push_back(env.state().score[0] - env.state().score[1]);
  }
  return summarize(std::move(diffs));
}

// Plays each seed twice with the controllers swapped and the kickoff flipped;
// goal differences are reported from config.left's point of view.
inline EvalResult run_mirrored_eval(const EvalConfig& config) {
  if (config.episodes < 2 || config.episodes % 2 != 0) {
    throw ContractError("run_mirrored_eval: episodes must be a positive even number");
  }
  EvalConfig forward = config;
  forward.episodes = config.episodes / 2;
  EvalConfig swapped = forward;
  std::swap(swapped.left, swapped.right);
  swapped.first_kickoff = opponent(config.first_kickoff);
  const auto f = run_eval(forward);
  const auto s = run_eval(swapped);
  std::vector<int> diffs;
  for (std::size_t i = 0; i < f.goal_diffs.size(); ++i) {
    diffs.push_back(f.goal_diffs[i]);
    diffs.push_back(-s.goal_diffs[i]);
  }
  return summarize(std::move(diffs));
}

// Throughput ------------------------------------------------------------------------

struct BenchConfig {
  std::string scenario = "11_vs_11_stochastic";
  int envs = 1;
  long steps = 3000;  // per environment
  Representation representation = Representation::Float115;
  std::uint64_t seed = 0;
};

struct BenchRow {
  int n_envs = 0;
  long steps = 0;  // total over all environments
  double seconds = 0.0;
  double steps_per_sec = 0.0;
  double steps_per_day = 0.0;
};

// One thread per environment, each stepping with uniformly random actions.
inline BenchRow run_benchmark(const BenchConfig& config) {
  if (config.envs < 1) throw ContractError("run_benchmark: envs must be at least 1");
  if (config.steps < 1) throw ContractError("run_benchmark: steps must be at least 1");
  const ScenarioConfig scenario = load_scenario(config.scenario);
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::future<long>> jobs;
  for (int i = 0; i < config.envs; ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] {
      EnvOptions options;
      options.representation = config.representation;
      options.seed = DeterministicRng(config.seed).split(static_cast<std::uint64_t>(i)).next_u64();
      Environment env(scenario, options);
      DeterministicRng rng(options.seed);
      std::vector<Action> actions(static_cast<std::size_t>(env.num_controlled()));
      env.reset();
      long done = 0;
      for (; done < config.steps; ++done) {
        if (env.done()) env.reset();
        for (auto& a : actions) a = static_cast<Action>(rng.next_u64() % kActionCount);
        env.step(actions);
      }
      return done;
    }));
  }
  long total = 0;
  for (auto& j : jobs) total += j.get();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  BenchRow row;
  row.n_envs = config.envs;
  row.steps = total;
  row.seconds = seconds;
  row.steps_per_sec = seconds > 0.0 ? static_cast<double>(total) / seconds : 0.0;
  row.steps_per_day = row.steps_per_sec * 86400.0;
  return row;
}

inline constexpr std::string_view kBenchCsvHeader = "n_envs,steps,seconds,steps_per_sec,steps_per_day";

inline void write_bench_row(std::ostream& out, const BenchRow& r) {
  out << r.n_envs << ',' << r.steps << ',' << r.seconds << ',' << r.steps_per_sec << ',' << r.steps_per_day << '\n';
}

}  // namespace football
