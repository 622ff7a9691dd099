// Command-line front end: bench, eval, replay, serve, scenarios.

#include <csignal>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"

#include "football/harness.hpp"
#include "football/replay.hpp"
#include "football/server.hpp"

using namespace football;

namespace {

Representation representation_arg(const std::string& name) {
  const auto r = parse_representation(name);
  if (!r) throw ConfigError("unknown representation '" + name + "' (raw, float115, smm, pixels)");
  return *r;
}

std::optional<Side> side_arg(const std::string& name) {
  if (name.empty()) return std::nullopt;
  if (name == "left") return Side::Left;
  if (name == "right") return Side::Right;
  throw ConfigError("side must be 'left' or 'right', got '" + name + "'");
}

int bench(const std::vector<int>& envs, long steps, const std::string& repr, const std::string& scenario,
          const std::string& out_path) {
  std::ofstream file;
  const bool to_file = !out_path.empty();
  if (to_file) {
    file.open(out_path);
    if (!file) throw ConfigError("cannot write '" + out_path + "'");
  }
  std::ostream& out = to_file ? static_cast<std::ostream&>(file) : std::cout;
  out << kBenchCsvHeader << '\n';
  for (int n : envs) {
    BenchConfig c;
    c.envs = n;
    c.steps = steps;
    c.representation = representation_arg(repr);
    c.scenario = scenario;
    const auto row = run_benchmark(c);
    write_bench_row(out, row);
    if (to_file) write_bench_row(std::cout, row);
  }
  return 0;
}

int eval(const std::string& left, const std::string& right, int episodes, const std::string& scenario,
         std::uint64_t seed, bool mirrored) {
  EvalConfig c;
  c.scenario = load_scenario(scenario);
  c.left = left;
  c.right = right;
  c.episodes = episodes;
  c.seed = seed;
  const auto r = mirrored ? run_mirrored_eval(c) : run_eval(c);
  for (std::size_t i = 0; i < r.goal_diffs.size(); ++i) {
    std::cout << "episode " << i << ": goal difference " << r.goal_diffs[i] << '\n';
  }
  std::cout << std::fixed << std::setprecision(3) << "mean goal difference " << r.mean << " +/- " << r.stddev
            << " (W" << r.wins << " D" << r.draws << " L" << r.losses << ", sign test p=" << r.sign_test_p << ")\n";
  return 0;
}

int replay_record(const std::string& path, const std::string& scenario, std::uint64_t seed, const std::string& mode,
                  const std::string& agent, const std::string& left, const std::string& right) {
  EnvOptions options;
  options.seed = seed;
  Environment env(load_scenario(scenario), options);
  const std::uint64_t episode = episode_seed_for(seed, 0);
  Replay r;
  if (mode == "full") {
    auto l = make_controller(left);
    auto rc = make_controller(right);
    bool started = false;
    const DeterministicRng seeds(episode);
    r = record_full_episode(
        env,
        [&](const GameState& s) {
          if (!started) {
            l->begin_episode(s, Side::Left, seeds.split(1).next_u64());
            rc->begin_episode(s, Side::Right, seeds.split(2).next_u64());
            started = true;
          }
          JointAction joint{};
          const auto a = l->act(s, Side::Left);
          const auto b = rc->act(s, Side::Right);
          std::copy(a.begin(), a.end(), joint.begin());
          std::copy(b.begin(), b.end(), joint.begin() + kTeamSize);
          return joint;
        },
        episode);
  } else if (mode == "env") {
    if (agent != "random" && agent != "idle") throw ConfigError("agent must be 'random' or 'idle'");
    DeterministicRng rng(episode);
    r = record_env_episode(
        env,
        [&](const std::vector<Observation>& obs) {
          std::vector<Action> acts(obs.size(), Action::Idle);
          if (agent == "random") {
            for (auto& a : acts) a = static_cast<Action>(rng.next_u64() % kActionCount);
          }
          return acts;
        },
        episode);
  } else {
    throw ConfigError("mode must be 'env' or 'full'");
  }
  save_replay(r, path);
  std::cout << "recorded " << r.frames.size() << " frames to " << path << " (score " << env.state().score[0] << "-"
            << env.state().score[1] << ")\n";
  return 0;
}

int replay_verify(const std::string& path) {
  const auto result = verify_replay(load_replay(path));
  std::cout << (result.ok ? "OK" : "FAILED") << ": " << result.message << " (" << result.frames << " frames)\n";
  return result.ok ? 0 : 1;
}

Server* g_server = nullptr;

int serve(const ServeConfig& config) {
  Server server(config);
  g_server = &server;
  std::signal(SIGINT, [](int) {
    if (g_server) g_server->stop();
  });
  std::cout << "serving on http://" << config.address << ":" << server.port() << "/ (socket at /ws)" << std::endl;
  server.run();
  g_server = nullptr;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Football reinforcement-learning environment tools"};
  app.require_subcommand(1);

  std::vector<int> envs{1};
  long steps = 3000;
  std::string repr = "float115", scenario = "11_vs_11_stochastic", out;
  auto* bench_cmd = app.add_subcommand("bench", "Measure environment throughput; prints CSV");
  bench_cmd->add_option("--envs", envs, "Parallel environments (one thread each); repeatable")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--steps", steps, "Steps per environment")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--repr", repr, "Observation: raw, float115, smm, pixels");
  bench_cmd->add_option("--scenario", scenario, "Scenario name or file");
  bench_cmd->add_option("--out", out, "CSV output file");

  std::string left = "bot:0.6", right = "bot:0.6";
  int episodes = 10;
  bool mirrored = false;
  std::uint64_t seed = 0;
  auto* eval_cmd = app.add_subcommand("eval", "Play two controllers against each other");
  eval_cmd->add_option("--left", left, "bot:THETA, idle, random, replay:PATH or ext:HOST:PORT");
  eval_cmd->add_option("--right", right, "Same forms as --left");
  eval_cmd->add_option("--episodes", episodes)->check(CLI::PositiveNumber);
  eval_cmd->add_option("--scenario", scenario, "Scenario name or file");
  eval_cmd->add_option("--seed", seed);
  eval_cmd->add_flag("--mirrored", mirrored, "Play each seed twice with sides swapped (needs an even episode count)");

  std::string file, mode = "env", agent = "random";
  auto* replay_cmd = app.add_subcommand("replay", "Record or verify replay files");
  replay_cmd->require_subcommand(1);
  auto* record_cmd = replay_cmd->add_subcommand("record", "Record one episode");
  record_cmd->add_option("--file", file)->required();
  record_cmd->add_option("--scenario", scenario, "Scenario name or file");
  record_cmd->add_option("--seed", seed);
  record_cmd->add_option("--mode", mode, "env (agent actions, bots re-run) or full (all 22 actions)");
  record_cmd->add_option("--agent", agent, "env mode agent: random or idle");
  record_cmd->add_option("--left", left, "full mode left controller");
  record_cmd->add_option("--right", right, "full mode right controller");
  auto* verify_cmd = replay_cmd->add_subcommand("verify", "Re-simulate and check digests");
  verify_cmd->add_option("--file", file)->required();

  ServeConfig serve_config;
  std::string human, replay_path;
  auto* serve_cmd = app.add_subcommand("serve", "Run the viewer server");
  serve_cmd->add_option("--port", serve_config.port)->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--address", serve_config.address);
  serve_cmd->add_option("--scenario", serve_config.scenario, "Scenario name or file");
  serve_cmd->add_option("--human-side", human, "left or right");
  serve_cmd->add_option("--replay", replay_path, "Replay file to play back");
  serve_cmd->add_option("--static", serve_config.static_dir, "Directory of viewer assets");
  serve_cmd->add_option("--seed", serve_config.seed);
  serve_cmd->add_option("--fps", serve_config.fps)->check(CLI::PositiveNumber);

  std::string show;
  auto* scen_cmd = app.add_subcommand("scenarios", "List built-in scenarios or print one");
  scen_cmd->add_option("--show", show, "Print this scenario in file format");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bench_cmd) return bench(envs, steps, repr, scenario, out);
    if (*eval_cmd) return eval(left, right, episodes, scenario, seed, mirrored);
    if (*record_cmd) return replay_record(file, scenario, seed, mode, agent, left, right);
    if (*verify_cmd) return replay_verify(file);
    if (*serve_cmd) {
      serve_config.human_side = side_arg(human);
      if (!replay_path.empty()) serve_config.replay_path = replay_path;
      return serve(serve_config);
    }
    if (*scen_cmd) {
      if (!show.empty()) {
        std::cout << serialize(load_scenario(show));
      } else {
        for (auto name : builtin_names()) std::cout << name << '\n';
      }
      return 0;
    }
  } catch (const ReplayError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const wire::ProtocolError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
