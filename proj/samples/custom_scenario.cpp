// Loads a scenario from text, plays it with the built-in bot on both sides
// and prints every rule event.

#include <iostream>

#include "football/bot.hpp"
#include "football/env.hpp"

using namespace football;

constexpr const char* kTwoOnOne = R"(# two forwards against a keeper
name = two_on_one
duration_frames = 200
stochastic = false
end_on_score = true
ball = 0.6 0
left_player = Keeper -0.96 0
left_player = Forward 0.55 0
left_player = Midfielder 0.6 0.2
right_player = Keeper 0.96 0
)";

int main() {
  const ScenarioConfig config = parse_scenario(kTwoOnOne);
  std::cout << "loaded '" << config.name << "'\n" << serialize(config);

  Environment env(config, EnvOptions{});
  env.reset();
  BotController bot(BotParams::from_theta(0.8), DeterministicRng(1));
  while (!env.done()) {
    const auto team = bot.act(env.state(), Side::Left);
    const Action mine = team[static_cast<std::size_t>(env.state().active_player[0])];
    const auto step = env.step(std::vector<Action>{mine});
    for (const auto& e : step.info.events) std::cout << "frame " << step.info.frame << ": " << to_string(e) << '\n';
  }
}
