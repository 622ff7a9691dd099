#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <functional>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "football/digest.hpp"
#include "football/env.hpp"

// Replay file layout (all integers little-endian):
//
//   "MPRP"  u16 version
//   u32 n, n bytes   header: "key=value" lines
//   u32 n, n bytes   scenario text
//   u32 frames, then per frame:  u8 k, k action bytes, u8 m, m opponent action bytes
//   u32 digests, then per digest: u32 frame, u64 digest
//
// In env mode the actions are the controlled agents' actions and bots are
// re-run on playback; in full mode every frame carries all 22 absolute actions.

namespace football {

class ReplayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ReplayMode : std::uint8_t { Env, Full };

inline constexpr std::uint16_t kReplayVersion = 1;
inline constexpr int kDigestInterval = 100;

struct ReplayFrame {
  std::vector<Action> actions;
  std::vector<Action> opponent;
  friend bool operator==(const ReplayFrame&, const ReplayFrame&) = default;
};

struct ReplayDigest {
  std::uint32_t frame = 0;
  std::uint64_t digest = 0;
  friend bool operator==(const ReplayDigest&, const ReplayDigest&) = default;
};

struct Replay {
  ReplayMode mode = ReplayMode::Env;
  std::string scenario_text;
  std::uint64_t episode_seed = 0;
  Side kickoff = Side::Left;
  int opponent_players = 0;  // 0 when the opponent was the built-in bot
  std::uint64_t options_digest = 0;  // observation/reward options at record time
  std::vector<ReplayFrame> frames;
  std::vector<ReplayDigest> digests;
  friend bool operator==(const Replay&, const Replay&) = default;
};

namespace detail {

class ByteWriter {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v) { put(v, 2); }
  void u32(std::uint32_t v) { put(v, 4); }
  void u64(std::uint64_t v) { put(v, 8); }
  void bytes(std::string_view s) {
    u32(static_cast<std::uint32_t>(s.size()));
    out_.insert(out_.end(), s.begin(), s.end());
  }
  std::vector<std::uint8_t> take() { return std::move(out_); }

 private:
  void put(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  std::vector<std::uint8_t> out_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> in) : in_(in) {}

  std::uint8_t u8() { return static_cast<std::uint8_t>(get(1)); }
  std::uint16_t u16() { return static_cast<std::uint16_t>(get(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(get(4)); }
  std::uint64_t u64() { return get(8); }
  std::string bytes() {
    const std::uint32_t n = u32();
    need(n);
    std::string s(reinterpret_cast<const char*>(in_.data() + pos_), n);
    pos_ += n;
    return s;
  }
  [[nodiscard]] bool at_end() const { return pos_ == in_.size(); }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) throw ReplayError("replay truncated at byte " + std::to_string(pos_));
  }
  std::uint64_t get(int n) {
    need(static_cast<std::size_t>(n));
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) v |= static_cast<std::uint64_t>(in_[pos_ + static_cast<std::size_t>(i)]) << (8 * i);
    pos_ += static_cast<std::size_t>(n);
    return v;
  }
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

inline Action action_from_byte(std::uint8_t b) {
  if (b >= kActionCount) throw ReplayError("invalid action byte " + std::to_string(b));
  return static_cast<Action>(b);
}

}  // namespace detail

inline std::vector<std::uint8_t> encode_replay(const Replay& r) {
  detail::ByteWriter w;
  for (char c : std::string_view("MPRP")) w.u8(static_cast<std::uint8_t>(c));
  w.u16(kReplayVersion);
  std::string header;
  header += "mode=" + std::string(r.mode == ReplayMode::Env ? "env" : "full") + "\n";
  header += "seed=" + std::to_string(r.episode_seed) + "\n";
  header += "kickoff=" + std::string(side_name(r.kickoff)) + "\n";
  header += "opponent_players=" + std::to_string(r.opponent_players) + "\n";
  header += "options=" + std::to_string(r.options_digest) + "\n";
  w.bytes(header);
  w.bytes(r.scenario_text);
  w.u32(static_cast<std::uint32_t>(r.frames.size()));
  for (const auto& f : r.frames) {
    w.u8(static_cast<std::uint8_t>(f.actions.size()));
    for (Action a : f.actions) w.u8(static_cast<std::uint8_t>(a));
    w.u8(static_cast<std::uint8_t>(f.opponent.size()));
    for (Action a : f.opponent) w.u8(static_cast<std::uint8_t>(a));
  }
  w.u32(static_cast<std::uint32_t>(r.digests.size()));
  for (const auto& d : r.digests) {
    w.u32(d.frame);
    w.u64(d.digest);
  }
  return w.take();
}

inline Replay decode_replay(std::span<const std::uint8_t> bytes) {
  detail::ByteReader in(bytes);
  char magic[4];
  for (char& c : magic) c = static_cast<char>(in.u8());
  if (std::string_view(magic, 4) != "MPRP") throw ReplayError("not a replay file (bad magic)");
  const std::uint16_t version = in.u16();
  if (version != kReplayVersion) throw ReplayError("unsupported replay version " + std::to_string(version));

  Replay r;
  const std::string header = in.bytes();
  std::size_t start = 0;
  while (start < header.size()) {
    std::size_t end = header.find('\n', start);
    if (end == std::string::npos) end = header.size();
    const std::string_view line(header.data() + start, end - start);
    start = end + 1;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ReplayError("bad header line '" + std::string(line) + "'");
    const auto key = line.substr(0, eq);
    const auto value = line.substr(eq + 1);
    if (key == "mode") {
      if (value == "env") r.mode = ReplayMode::Env;
      else if (value == "full") r.mode = ReplayMode::Full;
      else throw ReplayError("bad replay mode '" + std::string(value) + "'");
    } else if (key == "seed") {
      r.episode_seed = std::stoull(std::string(value));
    } else if (key == "kickoff") {
      r.kickoff = value == "right" ? Side::Right : Side::Left;
    } else if (key == "opponent_players") {
      r.opponent_players = std::stoi(std::string(value));
    } else if (key == "options") {
      r.options_digest = std::stoull(std::string(value));
    }
  }
  r.scenario_text = in.bytes();
  const std::uint32_t frames = in.u32();
  r.frames.reserve(frames);
  for (std::uint32_t i = 0; i < frames; ++i) {
    ReplayFrame f;
    const std::uint8_t k = in.u8();
    for (int j = 0; j < k; ++j) f.actions.push_back(detail::action_from_byte(in.u8()));
    const std::uint8_t m = in.u8();
    for (int j = 0; j < m; ++j) f.opponent.push_back(detail::action_from_byte(in.u8()));
    r.frames.push_back(std::move(f));
  }
  const std::uint32_t digests = in.u32();
  for (std::uint32_t i = 0; i < digests; ++i) {
    ReplayDigest d;
    d.frame = in.u32();
    d.digest = in.u64();
    r.digests.push_back(d);
  }
  if (!in.at_end()) throw ReplayError("trailing bytes after replay");
  return r;
}

inline void save_replay(const Replay& r, const std::string& path) {
  const auto bytes = encode_replay(r);
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw ReplayError("cannot write replay '" + path + "'");
}

inline Replay load_replay(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ReplayError("cannot open replay '" + path + "'");
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_replay(bytes);
}

// Recording -----------------------------------------------------------------------

using AgentFn = std::function<std::vector<Action>(const std::vector<Observation>&)>;
using JointFn = std::function<JointAction(const GameState&)>;

namespace detail {

inline void record_digest(Replay& r, const TrajectoryDigest& d, const GameState& s, bool final) {
  if (final || s.frame % kDigestInterval == 0) {
    if (!r.digests.empty() && r.digests.back().frame == static_cast<std::uint32_t>(s.frame)) return;
    r.digests.push_back({static_cast<std::uint32_t>(s.frame), d.digest(s)});
  }
}

inline Replay replay_header(const Environment& env, ReplayMode mode, std::uint64_t episode_seed) {
  Replay r;
  r.mode = mode;
  r.scenario_text = serialize(env.config());
  r.episode_seed = episode_seed;
  r.kickoff = env.kickoff_side();
  r.opponent_players = mode == ReplayMode::Env && env.has_opponent_policy() ? env.opponent_policy_players() : 0;
  const auto& o = env.options();
  Fnv1a h;
  h.byte(static_cast<std::uint8_t>(o.representation)).i32(o.stacking).byte(static_cast<std::uint8_t>(o.reward));
  h.i32(o.render_width).i32(o.render_height).u64(o.seed);
  r.options_digest = h.value();
  return r;
}

}  // namespace detail

// Plays one episode with `agent` choosing the controlled players' actions.
inline Replay record_env_episode(Environment& env, const AgentFn& agent, std::uint64_t episode_seed) {
  Replay r = detail::replay_header(env, ReplayMode::Env, episode_seed);
  TrajectoryDigest digest;
  auto obs = env.reset_episode(episode_seed);
  while (!env.done()) {
    const auto actions = agent(obs);
    auto step = env.step(actions);
    ReplayFrame f{actions, {}};
    if (env.has_opponent_policy()) f.opponent = env.last_opponent_actions();
    digest.add_actions(f.actions);
    digest.add_actions(f.opponent);
    r.frames.push_back(std::move(f));
    detail::record_digest(r, digest, env.state(), step.done);
    obs = std::move(step.observations);
  }
  return r;
}

// Plays one episode with `policy` choosing all 22 absolute actions.
inline Replay record_full_episode(Environment& env, const JointFn& policy, std::uint64_t episode_seed) {
  Replay r = detail::replay_header(env, ReplayMode::Full, episode_seed);
  TrajectoryDigest digest;
  env.reset_episode(episode_seed);
  while (!env.done()) {
    const JointAction joint = policy(env.state());
    const auto step = env.step_all(joint);
    ReplayFrame f{{joint.begin(), joint.end()}, {}};
    digest.add_actions(f.actions);
    digest.add_actions(f.opponent);
    r.frames.push_back(std::move(f));
    detail::record_digest(r, digest, env.state(), step.done);
  }
  return r;
}

// Verification --------------------------------------------------------------------

struct VerifyResult {
  bool ok = false;
  int frames = 0;
  std::optional<std::uint32_t> mismatch_frame;
  std::string message;
};

// Re-simulates a replay and compares every stored digest.
inline VerifyResult verify_replay(const Replay& r) {
  VerifyResult out;
  auto fail = [&](std::string msg, std::optional<std::uint32_t> frame = std::nullopt) {
    out.ok = false;
    out.message = std::move(msg);
    out.mismatch_frame = frame;
    return out;
  };
  ScenarioConfig config;
  try {
    config = parse_scenario(r.scenario_text);
  } catch (const ConfigError& e) {
    return fail(std::string("bad scenario in replay: ") + e.what());
  }
  EnvOptions options;
  options.representation = Representation::Float115;
  Environment env(config, options);
  env.set_kickoff_side(r.kickoff);
  env.reset_episode(r.episode_seed);
  TrajectoryDigest digest;
  std::size_t next_digest = 0;
  try {
    for (const auto& f : r.frames) {
      if (env.done()) return fail("replay continues after the episode ended", static_cast<std::uint32_t>(env.state().frame));
      if (r.mode == ReplayMode::Full) {
        if (f.actions.size() != static_cast<std::size_t>(kPlayerCount)) return fail("full-mode frame without 22 actions");
        JointAction joint{};
        std::copy(f.actions.begin(), f.actions.end(), joint.begin());
        env.step_all(joint);
      } else if (r.opponent_players > 0) {
        env.step(f.actions, f.opponent);
      } else {
        env.step(f.actions);
      }
      digest.add_actions(f.actions);
      digest.add_actions(f.opponent);
      ++out.frames;
      const auto frame = static_cast<std::uint32_t>(env.state().frame);
      while (next_digest < r.digests.size() && r.digests[next_digest].frame == frame) {
        if (r.digests[next_digest].digest != digest.digest(env.state())) {
          return fail("digest mismatch at frame " + std::to_string(frame), frame);
        }
        ++next_digest;
      }
    }
  } catch (const ContractError& e) {
    return fail(std::string("replay rejected by engine: ") + e.what(), static_cast<std::uint32_t>(env.state().frame));
  }
  if (next_digest != r.digests.size()) return fail("replay ended before all digests were checked");
  if (!env.done()) return fail("replay ends before the episode does");
  out.ok = true;
  out.message = "ok";
  return out;
}

}  // namespace football
