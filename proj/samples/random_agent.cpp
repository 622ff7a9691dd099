// Plays a few episodes of a scenario with uniformly random actions.
//
//   random_agent [scenario] [episodes] [seed]

#include <cstdlib>
#include <iostream>
#include <random>

#include "football/env.hpp"

using namespace football;

int main(int argc, char** argv) {
  const std::string scenario = argc > 1 ? argv[1] : "11_vs_11_easy";
  const int episodes = argc > 2 ? std::atoi(argv[2]) : 3;
  const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 0;

  EnvOptions options;
  options.reward = RewardKind::Checkpoints;
  options.seed = seed;
  Environment env = Environment::create(scenario, options);

  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> pick(0, kActionCount - 1);
  std::vector<Action> actions(static_cast<std::size_t>(env.num_controlled()));

  for (int e = 0; e < episodes; ++e) {
    env.reset();
    double total = 0.0;
    StepResult step;
    while (!env.done()) {
      for (auto& a : actions) a = static_cast<Action>(pick(gen));
      step = env.step(actions);
      total += step.rewards.empty() ? 0.0 : step.rewards.front();
    }
    std::cout << "episode " << e << ": " << step.info.frame << " frames, score " << step.info.score_left << "-"
              << step.info.score_right << ", return " << total << '\n';
  }
}
