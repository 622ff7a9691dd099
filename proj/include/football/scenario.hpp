#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "football/builtin_scenarios.hpp"
#include "football/constants.hpp"
#include "football/types.hpp"

namespace football {

class ParseError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

struct Placement {
  Role role = Role::Midfielder;
  Vec2 position;
  friend bool operator==(const Placement&, const Placement&) = default;
};

struct ScenarioConfig {
  std::string name = "custom";
  int duration_frames = 400;
  double difficulty = 0.6;
  bool stochastic = true;
  bool offsides_enabled = true;
  std::vector<Placement> left_placements;
  std::vector<Placement> right_placements;
  Vec2 ball_start;
  GameMode start_mode = GameMode::Normal;
  int controlled_left = 1;
  int controlled_right = 0;
  bool teammate_bot_enabled = true;
  bool end_on_score = true;
  bool end_on_possession_loss = true;
  bool end_on_out_of_play = true;
  bool lazy_opponents = false;

  [[nodiscard]] const std::vector<Placement>& placements(Side s) const {
    return s == Side::Left ? left_placements : right_placements;
  }
  [[nodiscard]] int controlled(Side s) const { return s == Side::Left ? controlled_left : controlled_right; }

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

inline std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

inline std::optional<bool> parse_bool(std::string_view s) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  return std::nullopt;
}

inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

inline bool on_pitch(Vec2 p) {
  return std::fabs(p.x) <= physics::kHalfLength && std::fabs(p.y) <= physics::kHalfWidth;
}

}  // namespace detail

inline std::optional<GameMode> parse_game_mode(std::string_view s) {
  for (std::size_t i = 0; i < kGameModeCount; ++i) {
    if (kGameModeNames[i] == s) return static_cast<GameMode>(i);
  }
  return std::nullopt;
}

inline std::optional<Role> parse_role(std::string_view s) {
  for (std::size_t i = 0; i < kRoleNames.size(); ++i) {
    if (kRoleNames[i] == s) return static_cast<Role>(i);
  }
  return std::nullopt;
}

// Throws ConfigError naming the first offending entry.
inline void validate(const ScenarioConfig& c) {
  auto fail = [&](const std::string& what) { throw ConfigError("scenario '" + c.name + "': " + what); };
  if (c.duration_frames < 1) fail("duration_frames must be positive");
  if (!(c.difficulty >= 0.0 && c.difficulty <= 1.0)) fail("difficulty must lie in [0, 1]");
  for (Side s : {Side::Left, Side::Right}) {
    const auto& ps = c.placements(s);
    const std::string key = std::string(side_name(s)) + "_player";
    if (ps.size() > static_cast<std::size_t>(kTeamSize)) {
      fail(key + ": at most 11 players, got " + std::to_string(ps.size()));
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (!detail::on_pitch(ps[i].position)) {
        fail(key + "[" + std::to_string(i) + "]: position (" + detail::format_double(ps[i].position.x) + ", " +
             detail::format_double(ps[i].position.y) + ") is outside the pitch");
      }
    }
    const auto keepers = std::count_if(ps.begin(), ps.end(), [](const Placement& p) { return p.role == Role::Keeper; });
    if (ps.size() == static_cast<std::size_t>(kTeamSize) && keepers != 1) {
      fail(key + ": a full team needs exactly one Keeper, got " + std::to_string(keepers));
    }
    const int controlled = c.controlled(s);
    if (controlled < 0 || controlled > static_cast<int>(ps.size())) {
      fail("controlled_" + std::string(side_name(s)) + " = " + std::to_string(controlled) + " exceeds team size");
    }
  }
  if (c.left_placements.empty() && c.right_placements.empty()) fail("no players placed");
  if (!detail::on_pitch(c.ball_start)) fail("ball: start position is outside the pitch");
}

inline ScenarioConfig parse_scenario(std::string_view text) {
  ScenarioConfig c;
  c.left_placements.clear();
  c.right_placements.clear();
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    auto fail = [&](const std::string& what) -> void {
      throw ParseError("line " + std::to_string(line_no) + ": " + what);
    };
    if (eq == std::string_view::npos) fail("expected 'key = value'");
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string_view value = detail::trim(line.substr(eq + 1));
    auto bad = [&](std::string_view expected) {
      fail("key '" + key + "': expected " + std::string(expected) + ", got '" + std::string(value) + "'");
    };
    auto as_bool = [&] {
      auto b = detail::parse_bool(value);
      if (!b) bad("true or false");
      return *b;
    };
    auto as_int = [&] {
      auto v = detail::parse_int(value);
      if (!v) bad("an integer");
      return *v;
    };
    auto as_vec = [&](std::span<const std::string_view> parts) {
      if (parts.size() != 2) bad("two coordinates");
      auto x = detail::parse_double(parts[0]);
      auto y = detail::parse_double(parts[1]);
      if (!x || !y) bad("two coordinates");
      return Vec2{*x, *y};
    };

    if (key == "name") {
      if (value.empty()) bad("a name");
      c.name = std::string(value);
    } else if (key == "duration_frames") {
      c.duration_frames = as_int();
    } else if (key == "difficulty") {
      auto v = detail::parse_double(value);
      if (!v) bad("a number");
      if (!(*v >= 0.0 && *v <= 1.0)) fail("key 'difficulty': " + std::string(value) + " is outside [0, 1]");
      c.difficulty = *v;
    } else if (key == "stochastic") {
      c.stochastic = as_bool();
    } else if (key == "offsides") {
      c.offsides_enabled = as_bool();
    } else if (key == "end_on_score") {
      c.end_on_score = as_bool();
    } else if (key == "end_on_possession_loss") {
      c.end_on_possession_loss = as_bool();
    } else if (key == "end_on_out_of_play") {
      c.end_on_out_of_play = as_bool();
    } else if (key == "teammate_bot") {
      c.teammate_bot_enabled = as_bool();
    } else if (key == "lazy_opponents") {
      c.lazy_opponents = as_bool();
    } else if (key == "controlled_left") {
      c.controlled_left = as_int();
    } else if (key == "controlled_right") {
      c.controlled_right = as_int();
    } else if (key == "start_mode") {
      auto m = parse_game_mode(value);
      if (!m) bad("a game mode");
      c.start_mode = *m;
    } else if (key == "ball") {
      const auto parts = detail::split_ws(value);
      c.ball_start = as_vec(parts);
    } else if (key == "left_player" || key == "right_player") {
      const auto parts = detail::split_ws(value);
      if (parts.size() != 3) bad("'<role> <x> <y>'");
      auto role = parse_role(parts[0]);
      if (!role) bad("a role (Keeper, Defender, Midfielder, Forward)");
      const Placement p{*role, as_vec(std::span(parts).subspan(1))};
      (key == "left_player" ? c.left_placements : c.right_placements).push_back(p);
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (c.left_placements.empty() && c.right_placements.empty()) {
    throw ParseError("scenario '" + c.name + "': no left_player or right_player entries");
  }
  try {
    validate(c);
  } catch (const ConfigError& e) {
    throw ParseError(e.what());
  }
  return c;
}

inline std::string serialize(const ScenarioConfig& c) {
  std::ostringstream out;
  auto b = [](bool v) { return v ? "true" : "false"; };
  out << "name = " << c.name << '\n'
      << "duration_frames = " << c.duration_frames << '\n'
      << "difficulty = " << detail::format_double(c.difficulty) << '\n'
      << "stochastic = " << b(c.stochastic) << '\n'
      << "offsides = " << b(c.offsides_enabled) << '\n'
      << "end_on_score = " << b(c.end_on_score) << '\n'
      << "end_on_possession_loss = " << b(c.end_on_possession_loss) << '\n'
      << "end_on_out_of_play = " << b(c.end_on_out_of_play) << '\n'
      << "ball = " << detail::format_double(c.ball_start.x) << ' ' << detail::format_double(c.ball_start.y) << '\n'
      << "start_mode = " << kGameModeNames[static_cast<std::size_t>(c.start_mode)] << '\n'
      << "controlled_left = " << c.controlled_left << '\n'
      << "controlled_right = " << c.controlled_right << '\n'
      << "teammate_bot = " << b(c.teammate_bot_enabled) << '\n'
      << "lazy_opponents = " << b(c.lazy_opponents) << '\n';
  for (Side s : {Side::Left, Side::Right}) {
    for (const auto& p : c.placements(s)) {
      out << side_name(s) << "_player = " << kRoleNames[static_cast<std::size_t>(p.role)] << ' '
          << detail::format_double(p.position.x) << ' ' << detail::format_double(p.position.y) << '\n';
    }
  }
  return out.str();
}

inline std::vector<std::string_view> builtin_names() {
  std::vector<std::string_view> names;
  for (const auto& entry : builtin_data::kScenarios) names.push_back(entry.name);
  names.push_back("11_vs_11_stochastic");
  return names;
}

inline ScenarioConfig builtin(std::string_view name) {
  const std::string_view lookup = name == "11_vs_11_stochastic" ? std::string_view("11_vs_11_medium") : name;
  for (const auto& entry : builtin_data::kScenarios) {
    if (entry.name == lookup) return parse_scenario(entry.text);
  }
  std::string valid;
  for (auto n : builtin_names()) {
    if (!valid.empty()) valid += ", ";
    valid += n;
  }
  throw ConfigError("unknown scenario '" + std::string(name) + "'; valid names: " + valid);
}

// The side an agent does not control, when exactly one side is agent-controlled.
inline std::optional<Side> uncontrolled_side(const ScenarioConfig& c) {
  if (c.controlled_left > 0 && c.controlled_right == 0) return Side::Right;
  if (c.controlled_right > 0 && c.controlled_left == 0) return Side::Left;
  return std::nullopt;
}

inline std::optional<EndReason> is_episode_done(const GameState& state, const ScenarioConfig& config,
                                                std::span<const Event> events) {
  const auto has = [&](auto pred) { return std::any_of(events.begin(), events.end(), pred); };
  if (config.end_on_score && has([](const Event& e) { return scoring_side(e).has_value(); })) {
    return EndReason::Score;
  }
  if (config.end_on_possession_loss) {
    if (const auto other = uncontrolled_side(config)) {
      if (has([&](const Event& e) { return e.kind == EventKind::PossessionChange && e.side == *other; })) {
        return EndReason::PossessionLost;
      }
    }
  }
  if (config.end_on_out_of_play && has([](const Event& e) {
        return e.kind == EventKind::OutLeftRight || e.kind == EventKind::OutGoalLine ||
               e.kind == EventKind::Foul || e.kind == EventKind::OffsideCalled;
      })) {
    return EndReason::OutOfPlay;
  }
  if (state.frame >= state.duration_frames || state.frame >= config.duration_frames) return EndReason::Time;
  return std::nullopt;
}

}  // namespace football
