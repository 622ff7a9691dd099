#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "football/bot.hpp"
#include "football/engine.hpp"
#include "football/observations.hpp"
#include "football/rewards.hpp"
#include "football/scenario.hpp"

namespace football {

enum class Representation : std::uint8_t { Raw, Float115, Smm, Pixels };

inline constexpr std::array<std::string_view, 4> kRepresentationNames = {"raw", "float115", "smm", "pixels"};

inline std::optional<Representation> parse_representation(std::string_view name) {
  for (std::size_t i = 0; i < kRepresentationNames.size(); ++i) {
    if (kRepresentationNames[i] == name) return static_cast<Representation>(i);
  }
  return std::nullopt;
}

struct EnvOptions {
  Representation representation = Representation::Float115;
  int stacking = 1;
  RewardKind reward = RewardKind::Scoring;
  std::uint64_t seed = 0;
  int render_width = 96;
  int render_height = 72;
  RewardHook custom_reward;
};

// One raw frame: the full state plus whose view it is.
struct RawFrame {
  GameState state;
  Side side = Side::Left;
  int player = 0;
};

// A possibly stacked observation. Exactly one payload is filled:
//   float115 -> floats, shape {115 k}
//   smm      -> bytes,  shape {4 k, 72, 96}, plane-major
//   pixels   -> bytes,  shape {h, w, 3 k}, frames interleaved per pixel
//   raw      -> raw,    shape {k}, oldest first
struct Observation {
  Representation representation = Representation::Float115;
  std::vector<std::size_t> shape;
  std::vector<double> floats;
  std::vector<std::uint8_t> bytes;
  std::vector<RawFrame> raw;
};

struct StepInfo {
  int score_left = 0;
  int score_right = 0;
  int frame = 0;
  std::vector<Event> events;
  std::optional<EndReason> end_reason;
};

struct StepResult {
  std::vector<Observation> observations;  // controlled left slots, then right slots
  std::vector<double> rewards;
  bool done = false;
  StepInfo info;
};

// Maps opponent-side observations (one per policy-controlled player) to one
// action each, expressed in the opponent's own attacking frame.
using OpponentPolicy = std::function<std::vector<Action>(std::span<const Observation>)>;

inline std::uint64_t episode_seed_for(std::uint64_t base, std::uint64_t episode) {
  return DeterministicRng(base).split(episode).next_u64();
}

inline std::uint64_t bot_seed_for(std::uint64_t episode_seed, Side side) {
  return DeterministicRng(episode_seed).split(0xb07 + index_of(side)).next_u64();
}

// Deterministic scenarios ignore the seed entirely.
inline constexpr std::uint64_t kDeterministicEngineSeed = 0;

inline ScenarioConfig load_scenario(std::string_view name_or_path) {
  const std::string key(name_or_path);
  std::error_code ec;
  if (std::filesystem::is_regular_file(key, ec)) {
    std::ifstream in(key);
    std::stringstream buf;
    buf << in.rdbuf();
    if (!in && !in.eof()) throw ConfigError("cannot read scenario file '" + key + "'");
    try {
      return parse_scenario(buf.str());
    } catch (const ParseError& e) {
      throw ParseError(key + ": " + e.what());
    }
  }
  return builtin(name_or_path);
}

class Environment {
 public:
  Environment(ScenarioConfig config, EnvOptions options) : config_(std::move(config)), options_(std::move(options)) {
    validate(config_);
    if (options_.stacking < 1) throw ContractError("EnvOptions: stacking must be at least 1");
    if (options_.representation == Representation::Pixels &&
        (options_.render_width < 16 || options_.render_height < 16)) {
      throw ContractError("EnvOptions: render size must be at least 16x16");
    }
    base_seed_ = options_.seed;
  }

  static Environment create(std::string_view name, EnvOptions options = {}) {
    return Environment(load_scenario(name), std::move(options));
  }

  // Episode ------------------------------------------------------------------------

  std::vector<Observation> reset() {
    const std::uint64_t seed = episode_seed_for(base_seed_, episode_index_);
    ++episode_index_;
    return reset_episode(seed);
  }

  // Starts an episode from an explicit per-episode seed (replays).
  std::vector<Observation> reset_episode(std::uint64_t episode_seed) {
    episode_seed_ = episode_seed;
    const std::uint64_t engine_seed = config_.stochastic ? episode_seed_ : kDeterministicEngineSeed;
    state_ = reset_state(config_, engine_seed, kickoff_side_);
    for (Side side : {Side::Left, Side::Right}) {
      trackers_[index_of(side)] = {};
      bots_[index_of(side)] = BotController(BotParams::from_theta(config_.difficulty),
                                            DeterministicRng(bot_seed_for(episode_seed_, side)));
      stacks_[index_of(side)].clear();
    }
    policy_stacks_.clear();
    in_episode_ = true;
    done_ = false;
    assign_controlled();
    return controlled_observations();
  }

  StepResult step(std::span<const Action> actions) { return step_impl(actions, std::nullopt, nullptr); }

  // Replays: opponent-policy actions supplied directly instead of querying the policy.
  StepResult step(std::span<const Action> actions, std::span<const Action> opponent_actions) {
    return step_impl(actions, opponent_actions, nullptr);
  }

  // Every player's action in absolute (left-attacking) coordinates; no bots involved.
  StepResult step_all(const JointAction& actions) { return step_impl({}, std::nullopt, &actions); }

  void seed(std::uint64_t value) {
    if (in_episode_ && !done_) throw ContractError("seed: cannot reseed in the middle of an episode");
    base_seed_ = value;
    episode_index_ = 0;
  }

  void set_kickoff_side(Side side) { kickoff_side_ = side; }
  [[nodiscard]] Side kickoff_side() const { return kickoff_side_; }

  void set_opponent_policy(OpponentPolicy policy, int players = kTeamSize) {
    const auto side = uncontrolled_side(config_);
    if (!side) throw ContractError("set_opponent_policy: scenario has no single uncontrolled side");
    if (players < 1 || players > kTeamSize) throw ContractError("set_opponent_policy: players must be 1..11");
    policy_ = std::move(policy);
    policy_players_ = players;
    policy_stacks_.clear();
  }

  void clear_opponent_policy() {
    policy_ = nullptr;
    policy_stacks_.clear();
  }

  // Accessors ----------------------------------------------------------------------

  [[nodiscard]] const GameState& state() const { return state_; }
  [[nodiscard]] const ScenarioConfig& config() const { return config_; }
  [[nodiscard]] const EnvOptions& options() const { return options_; }
  [[nodiscard]] int num_controlled() const { return config_.controlled_left + config_.controlled_right; }
  [[nodiscard]] bool done() const { return done_; }
  [[nodiscard]] bool in_episode() const { return in_episode_ && !done_; }
  [[nodiscard]] std::uint64_t episode_seed() const { return episode_seed_; }
  [[nodiscard]] std::uint64_t bot_seed(Side side) const { return bot_seed_for(episode_seed_, side); }
  [[nodiscard]] bool has_opponent_policy() const { return static_cast<bool>(policy_); }
  [[nodiscard]] int opponent_policy_players() const { return policy_players_; }
  [[nodiscard]] const std::vector<Action>& last_opponent_actions() const { return last_opponent_actions_; }
  [[nodiscard]] const std::vector<int>& controlled_players(Side side) const {
    return controlled_[index_of(side)];
  }

 private:
  // Slot assignment: with at least as many slots as players, slots follow player
  // index; otherwise slot 0 is the active player and the rest are the nearest
  // other players to the ball.
  std::vector<int> assign_slots(Side side, int count) const {
    if (count <= 0) return {};
    std::vector<int> on;
    for (int i = 0; i < kTeamSize; ++i) {
      if (state_.team(side)[static_cast<std::size_t>(i)].on_pitch()) on.push_back(i);
    }
    std::vector<int> slots;
    if (count >= static_cast<int>(on.size())) {
      slots = on;
      slots.resize(static_cast<std::size_t>(count), -1);
      return slots;
    }
    const int active = state_.active_player[index_of(side)];
    slots.push_back(active);
    std::vector<int> rest;
    for (int i : on) {
      if (i != active) rest.push_back(i);
    }
    const Vec2 ball = state_.ball.position;
    std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
      const auto& pa = state_.team(side)[static_cast<std::size_t>(a)];
      const auto& pb = state_.team(side)[static_cast<std::size_t>(b)];
      const bool ka = pa.role == Role::Keeper, kb = pb.role == Role::Keeper;
      if (ka != kb) return kb;
      return distance(pa.position, ball) < distance(pb.position, ball);
    });
    for (int i = 0; i + 1 < count; ++i) slots.push_back(rest[static_cast<std::size_t>(i)]);
    return slots;
  }

  void assign_controlled() {
    for (Side side : {Side::Left, Side::Right}) controlled_[index_of(side)] = assign_slots(side, config_.controlled(side));
  }

  Observation single_frame(Side side, int player, const PixelFrame* pixels) const {
    Observation o;
    o.representation = options_.representation;
    std::optional<int> active;
    if (player >= 0) active.emplace(player);
    switch (options_.representation) {
      case Representation::Raw:
        o.raw.push_back({state_, side, player >= 0 ? player : state_.active_player[index_of(side)]});
        o.shape = {1};
        break;
      case Representation::Float115: {
        const auto v = to_float115(state_, side, active);
        o.floats.assign(v.begin(), v.end());
        o.shape = {kFloat115Size};
        break;
      }
      case Representation::Smm:
        o.bytes.resize(kSmmPlanes * SmmPlanes::kPlaneSize);
        write_smm(state_, side, active, o.bytes);
        o.shape = {static_cast<std::size_t>(kSmmPlanes), static_cast<std::size_t>(kSmmRows),
                   static_cast<std::size_t>(kSmmCols)};
        break;
      case Representation::Pixels:
        o.bytes = pixels->rgb;
        o.shape = {static_cast<std::size_t>(pixels->height), static_cast<std::size_t>(pixels->width), 3};
        break;
    }
    return o;
  }

  static Observation combine(const std::vector<Observation>& frames) {
    if (frames.size() == 1) return frames.front();
    Observation o;
    const auto& first = frames.front();
    o.representation = first.representation;
    const std::size_t k = frames.size();
    switch (first.representation) {
      case Representation::Raw:
        for (const auto& f : frames) o.raw.insert(o.raw.end(), f.raw.begin(), f.raw.end());
        o.shape = {k};
        break;
      case Representation::Float115:
        for (const auto& f : frames) o.floats.insert(o.floats.end(), f.floats.begin(), f.floats.end());
        o.shape = {kFloat115Size * k};
        break;
      case Representation::Smm:
        for (const auto& f : frames) o.bytes.insert(o.bytes.end(), f.bytes.begin(), f.bytes.end());
        o.shape = {kSmmPlanes * k, static_cast<std::size_t>(kSmmRows), static_cast<std::size_t>(kSmmCols)};
        break;
      case Representation::Pixels: {
        const std::size_t pixels = first.bytes.size() / 3;
        o.bytes.resize(first.bytes.size() * k);
        for (std::size_t px = 0; px < pixels; ++px)
          for (std::size_t f = 0; f < k; ++f)
            for (std::size_t c = 0; c < 3; ++c) o.bytes[(px * k + f) * 3 + c] = frames[f].bytes[px * 3 + c];
        o.shape = {first.shape[0], first.shape[1], 3 * k};
        break;
      }
    }
    return o;
  }

  std::vector<Observation> observe(Side side, const std::vector<int>& slots, std::vector<FrameStack<Observation>>& stacks) {
    std::optional<PixelFrame> pixels;
    if (options_.representation == Representation::Pixels) {
      pixels = to_pixels(state_, options_.render_width, options_.render_height);
    }
    if (stacks.size() != slots.size()) {
      stacks.assign(slots.size(), FrameStack<Observation>(static_cast<std::size_t>(options_.stacking)));
    }
    std::vector<Observation> out;
    out.reserve(slots.size());
    for (std::size_t j = 0; j < slots.size(); ++j) {
      stacks[j].push(single_frame(side, slots[j], pixels ? &*pixels : nullptr));
      out.push_back(combine(stacks[j].stacked()));
    }
    return out;
  }

  std::vector<Observation> controlled_observations() {
    std::vector<Observation> out;
    for (Side side : {Side::Left, Side::Right}) {
      auto obs = observe(side, controlled_[index_of(side)], stacks_[index_of(side)]);
      for (auto& o : obs) out.push_back(std::move(o));
    }
    return out;
  }

  double side_reward(Side side, std::span<const Event> events) {
    double r = scoring_reward(events, side);
    if (options_.reward == RewardKind::Checkpoints) {
      const auto step = checkpoint_step(trackers_[index_of(side)], state_, side, events);
      trackers_[index_of(side)] = step.tracker;
      r += step.reward();
    }
    if (options_.custom_reward) r = options_.custom_reward(state_, events, side, r);
    return r;
  }

  StepResult step_impl(std::span<const Action> actions, std::optional<std::span<const Action>> opponent_actions,
                       const JointAction* absolute) {
    if (!in_episode_) throw ContractError("step: call reset() first");
    if (done_) throw ContractError("step: episode is done; call reset()");
    JointAction joint{};
    if (absolute) {
      joint = *absolute;
    } else {
      if (static_cast<int>(actions.size()) != num_controlled()) {
        throw ContractError("step: expected " + std::to_string(num_controlled()) + " actions, got " +
                            std::to_string(actions.size()));
      }
      std::size_t offset = 0;
      const auto policy_side = uncontrolled_side(config_);
      const bool use_policy = (policy_ || opponent_actions) && policy_side;
      for (Side side : {Side::Left, Side::Right}) {
        const int n = config_.controlled(side);
        if (n > 0) {
          fill_slots(side, controlled_[index_of(side)], actions.subspan(offset, static_cast<std::size_t>(n)), joint);
          offset += static_cast<std::size_t>(n);
        } else if (use_policy && side == *policy_side) {
          const int players = opponent_actions ? static_cast<int>(opponent_actions->size()) : policy_players_;
          const auto slots = assign_slots(side, std::min(players, kTeamSize));
          if (opponent_actions) {
            last_opponent_actions_.assign(opponent_actions->begin(), opponent_actions->end());
          } else {
            const auto obs = observe(side, slots, policy_stacks_);
            last_opponent_actions_ = policy_(obs);
            if (last_opponent_actions_.size() != slots.size()) {
              throw ContractError("opponent policy returned " + std::to_string(last_opponent_actions_.size()) +
                                  " actions for " + std::to_string(slots.size()) + " players");
            }
          }
          fill_slots(side, slots, last_opponent_actions_, joint);
        } else {
          const auto acts = bots_[index_of(side)].act(state_, side);
          for (int i = 0; i < kTeamSize; ++i) joint[joint_index({side, i})] = acts[static_cast<std::size_t>(i)];
        }
      }
    }

    advance(state_, joint, events_);

    StepResult r;
    r.info.events = events_;
    std::array<double, 2> side_rewards{side_reward(Side::Left, events_), side_reward(Side::Right, events_)};
    for (Side side : {Side::Left, Side::Right}) {
      for (int j = 0; j < config_.controlled(side); ++j) r.rewards.push_back(side_rewards[index_of(side)]);
    }
    if (absolute) r.rewards = {side_rewards[0], side_rewards[1]};
    r.info.end_reason = is_episode_done(state_, config_, events_);
    r.done = r.info.end_reason.has_value();
    if (r.done) {
      Event end{EventKind::EpisodeEnd};
      end.reason = *r.info.end_reason;
      r.info.events.push_back(end);
      done_ = true;
    }
    r.info.score_left = state_.score[0];
    r.info.score_right = state_.score[1];
    r.info.frame = state_.frame;
    assign_controlled();
    if (!absolute) r.observations = controlled_observations();
    return r;
  }

  void fill_slots(Side side, const std::vector<int>& slots, std::span<const Action> acts, JointAction& joint) const {
    std::array<bool, kTeamSize> assigned{};
    for (std::size_t j = 0; j < slots.size(); ++j) {
      if (slots[j] < 0) continue;
      assigned[static_cast<std::size_t>(slots[j])] = true;
      joint[joint_index({side, slots[j]})] = action_for_side(side, acts[j]);
    }
    for (int i = 0; i < kTeamSize; ++i) {
      if (!assigned[static_cast<std::size_t>(i)]) {
        joint[joint_index({side, i})] = teammate_action(state_, side, i, config_.teammate_bot_enabled);
      }
    }
  }

  ScenarioConfig config_;
  EnvOptions options_;
  GameState state_;
  std::uint64_t base_seed_ = 0;
  std::uint64_t episode_index_ = 0;
  std::uint64_t episode_seed_ = 0;
  Side kickoff_side_ = Side::Left;
  bool in_episode_ = false;
  bool done_ = false;
  std::array<CheckpointTracker, 2> trackers_{};
  std::array<BotController, 2> bots_{};
  std::array<std::vector<int>, 2> controlled_{};
  std::array<std::vector<FrameStack<Observation>>, 2> stacks_{};
  std::vector<FrameStack<Observation>> policy_stacks_;
  OpponentPolicy policy_;
  int policy_players_ = kTeamSize;
  std::vector<Action> last_opponent_actions_;
  std::vector<Event> events_;
};

// Opponent policy that reproduces the built-in bot from raw observations.
// Needs the raw representation with the policy controlling every player.
class BuiltinBotPolicy {
 public:
  BuiltinBotPolicy(BotParams params, std::uint64_t bot_seed)
      : controller_(std::make_shared<BotController>(params, DeterministicRng(bot_seed))) {}

  std::vector<Action> operator()(std::span<const Observation> obs) const {
    std::vector<Action> out;
    if (obs.empty()) return out;
    if (obs.front().representation != Representation::Raw) {
      throw ContractError("BuiltinBotPolicy needs the raw representation");
    }
    const RawFrame& frame = obs.front().raw.back();
    const auto acts = controller_->act(frame.state, frame.side);
    for (const auto& o : obs) {
      const RawFrame& f = o.raw.back();
      out.push_back(action_for_side(f.side, acts[static_cast<std::size_t>(f.player)]));
    }
    return out;
  }

 private:
  std::shared_ptr<BotController> controller_;
};

}  // namespace football
