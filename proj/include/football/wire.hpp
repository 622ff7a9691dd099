#pragma once

#include <optional>
#include <string>
#include <variant>

#include "json.hpp"

#include "football/scenario.hpp"
#include "football/types.hpp"

// JSON messages shared by the viewer socket and external controllers.
//
// server -> client
//   {"t":"config","scenario":..,"duration":..,"human_side":"left"|"right"|null,"replay":bool,"frames":n}
//   {"t":"state","frame":..,"players":[{"s","i","p":[x,y],"a","dir","sp","dr","role"}..],
//    "ball":[x,y,z],"score":[l,r],"mode":..}
//   {"t":"error","message":..}
// client -> server
//   {"t":"input","action":"Right","press":true}
//   {"t":"ctl","cmd":"pause"|"resume"|"seek"|"speed","frame":n,"speed":x}

namespace football::wire {

using nlohmann::json;

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json state_message(const GameState& s) {
  json players = json::array();
  for (Side side : {Side::Left, Side::Right}) {
    for (int i = 0; i < kTeamSize; ++i) {
      const auto& p = s.team(side)[static_cast<std::size_t>(i)];
      if (!p.on_pitch()) continue;
      players.push_back({{"s", side_name(side)},
                         {"i", i},
                         {"p", {p.position.x, p.position.y}},
                         {"a", s.active_player[index_of(side)] == i},
                         {"dir", p.sticky_direction ? json(action_name(*p.sticky_direction)) : json(nullptr)},
                         {"sp", p.sticky_sprint},
                         {"dr", p.sticky_dribble},
                         {"role", kRoleNames[static_cast<std::size_t>(p.role)]}});
    }
  }
  return {{"t", "state"},
          {"frame", s.frame},
          {"players", std::move(players)},
          {"ball", {s.ball.position.x, s.ball.position.y, s.ball.z}},
          {"score", {s.score[0], s.score[1]}},
          {"mode", kGameModeNames[static_cast<std::size_t>(s.mode)]}};
}

inline json config_message(const ScenarioConfig& c, std::optional<Side> human, bool replay, int frames) {
  return {{"t", "config"},
          {"scenario", c.name},
          {"duration", c.duration_frames},
          {"human_side", human ? json(side_name(*human)) : json(nullptr)},
          {"replay", replay},
          {"frames", frames}};
}

inline json error_message(const std::string& message) { return {{"t", "error"}, {"message", message}}; }

struct InputMsg {
  Action action = Action::Idle;
  bool press = true;
};

struct ControlMsg {
  enum class Cmd { Pause, Resume, Seek, Speed } cmd = Cmd::Pause;
  int frame = 0;
  double speed = 1.0;
};

using ClientMsg = std::variant<InputMsg, ControlMsg>;

inline ClientMsg parse_client_message(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    throw ProtocolError("message is not valid JSON");
  }
  if (!j.is_object() || !j.contains("t") || !j["t"].is_string()) throw ProtocolError("message needs a string field 't'");
  const auto t = j["t"].get<std::string>();
  if (t == "input") {
    if (!j.contains("action") || !j["action"].is_string()) throw ProtocolError("input needs 'action'");
    const auto a = parse_action(j["action"].get<std::string>());
    if (!a) throw ProtocolError("unknown action '" + j["action"].get<std::string>() + "'");
    InputMsg m{*a, true};
    if (j.contains("press")) {
      if (!j["press"].is_boolean()) throw ProtocolError("'press' must be a boolean");
      m.press = j["press"].get<bool>();
    }
    return m;
  }
  if (t == "ctl") {
    if (!j.contains("cmd") || !j["cmd"].is_string()) throw ProtocolError("ctl needs 'cmd'");
    const auto cmd = j["cmd"].get<std::string>();
    ControlMsg m;
    if (cmd == "pause") {
      m.cmd = ControlMsg::Cmd::Pause;
    } else if (cmd == "resume") {
      m.cmd = ControlMsg::Cmd::Resume;
    } else if (cmd == "seek") {
      m.cmd = ControlMsg::Cmd::Seek;
      if (!j.contains("frame") || !j["frame"].is_number_integer()) throw ProtocolError("seek needs integer 'frame'");
      m.frame = j["frame"].get<int>();
    } else if (cmd == "speed") {
      m.cmd = ControlMsg::Cmd::Speed;
      if (!j.contains("speed") || !j["speed"].is_number() || !(j["speed"].get<double>() > 0.0)) {
        throw ProtocolError("speed needs positive 'speed'");
      }
      m.speed = j["speed"].get<double>();
    } else {
      throw ProtocolError("unknown ctl command '" + cmd + "'");
    }
    return m;
  }
  throw ProtocolError("unknown message type '" + t + "'");
}

// Action a human input maps to; releasing a key undoes its sticky effect.
inline std::optional<Action> input_action(const InputMsg& m) {
  if (m.press) return m.action;
  if (m.action == Action::Sprint) return Action::StopSprint;
  if (m.action == Action::Dribble) return Action::StopDribble;
  if (is_direction(m.action)) return Action::StopMoving;
  return std::nullopt;
}

// External controller exchange: POST /act with the request, reply {"actions":[11 names]}
// in absolute coordinates.
inline json act_request(const GameState& s, Side side) {
  return {{"side", side_name(side)}, {"frame", s.frame}, {"state", state_message(s)}};
}

inline std::array<Action, kTeamSize> parse_act_response(std::string_view body) {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::parse_error&) {
    throw ProtocolError("controller reply is not valid JSON");
  }
  if (!j.is_object() || !j.contains("actions") || !j["actions"].is_array() || j["actions"].size() != kTeamSize) {
    throw ProtocolError("controller reply needs 'actions' with 11 entries");
  }
  std::array<Action, kTeamSize> out{};
  for (std::size_t i = 0; i < kTeamSize; ++i) {
    const auto& v = j["actions"][i];
    if (!v.is_string()) throw ProtocolError("controller actions must be names");
    const auto a = parse_action(v.get<std::string>());
    if (!a) throw ProtocolError("unknown action '" + v.get<std::string>() + "'");
    out[i] = *a;
  }
  return out;
}

}  // namespace football::wire
