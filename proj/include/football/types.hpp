#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "football/rng.hpp"

namespace football {

// Errors ---------------------------------------------------------------------

// Caller broke an API precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Geometry -------------------------------------------------------------------

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  friend constexpr bool operator==(Vec2, Vec2) = default;

  [[nodiscard]] constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
  [[nodiscard]] constexpr double norm2() const { return x * x + y * y; }
  [[nodiscard]] double norm() const { return std::sqrt(norm2()); }
  [[nodiscard]] Vec2 normalized() const {
    const double n = norm();
    return n > 0.0 ? Vec2{x / n, y / n} : Vec2{};
  }
  [[nodiscard]] Vec2 rotated(double angle) const {
    const double c = std::cos(angle), s = std::sin(angle);
    return {x * c - y * s, x * s + y * c};
  }
};

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

// Distance from p to the segment [a, b].
inline double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = ab.norm2();
  if (len2 == 0.0) return distance(p, a);
  double t = (p - a).dot(ab) / len2;
  t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
  return distance(p, a + ab * t);
}

// Sides, roles, modes ----------------------------------------------------------

enum class Side : std::uint8_t { Left = 0, Right = 1 };

constexpr Side opponent(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
constexpr std::size_t index_of(Side s) { return static_cast<std::size_t>(s); }
constexpr std::string_view side_name(Side s) { return s == Side::Left ? "left" : "right"; }
// +1 when the side attacks toward x = +1.
constexpr double attack_sign(Side s) { return s == Side::Left ? 1.0 : -1.0; }

// Point reflection through the centre spot; maps one side's attacking frame onto the other's.
constexpr Vec2 mirror(Vec2 v) { return {-v.x, -v.y}; }
constexpr Vec2 to_frame(Side s, Vec2 v) { return s == Side::Left ? v : mirror(v); }

enum class Role : std::uint8_t { Keeper, Defender, Midfielder, Forward };

inline constexpr std::array<std::string_view, 4> kRoleNames = {"Keeper", "Defender", "Midfielder",
                                                               "Forward"};

enum class GameMode : std::uint8_t { Normal, KickOff, GoalKick, FreeKick, Corner, ThrowIn, Penalty };

inline constexpr std::size_t kGameModeCount = 7;
inline constexpr std::array<std::string_view, kGameModeCount> kGameModeNames = {
    "Normal", "KickOff", "GoalKick", "FreeKick", "Corner", "ThrowIn", "Penalty"};

// Actions ----------------------------------------------------------------------

enum class Action : std::uint8_t {
  Idle,
  Left,
  TopLeft,
  Top,
  TopRight,
  Right,
  BottomRight,
  Bottom,
  BottomLeft,
  ShortPass,
  HighPass,
  LongPass,
  Shot,
  Sliding,
  Dribble,
  StopDribble,
  Sprint,
  StopMoving,
  StopSprint,
};

inline constexpr std::size_t kActionCount = 19;
inline constexpr std::array<std::string_view, kActionCount> kActionNames = {
    "Idle",      "Left",     "TopLeft",  "Top",         "TopRight", "Right",      "BottomRight",
    "Bottom",    "BottomLeft", "ShortPass", "HighPass", "LongPass", "Shot",       "Sliding",
    "Dribble",   "StopDribble", "Sprint",  "StopMoving", "StopSprint"};

constexpr std::string_view action_name(Action a) { return kActionNames[static_cast<std::size_t>(a)]; }

inline std::optional<Action> parse_action(std::string_view name) {
  for (std::size_t i = 0; i < kActionCount; ++i) {
    if (kActionNames[i] == name) return static_cast<Action>(i);
  }
  return std::nullopt;
}

constexpr bool is_direction(Action a) { return a >= Action::Left && a <= Action::BottomLeft; }
constexpr bool is_kick(Action a) { return a >= Action::ShortPass && a <= Action::Shot; }

// Unit heading of a direction action. "Top" is toward negative y (screen up).
inline Vec2 direction_vector(Action a) {
  constexpr double d = 0.70710678118654752440;
  switch (a) {
    case Action::Left: return {-1, 0};
    case Action::TopLeft: return {-d, -d};
    case Action::Top: return {0, -1};
    case Action::TopRight: return {d, -d};
    case Action::Right: return {1, 0};
    case Action::BottomRight: return {d, d};
    case Action::Bottom: return {0, 1};
    case Action::BottomLeft: return {-d, d};
    default: return {0, 0};
  }
}

// Rotates direction actions by 180 degrees, the action-space image of mirror().
constexpr Action mirror_action(Action a) {
  if (!is_direction(a)) return a;
  const int k = static_cast<int>(a) - 1;  // 0..7, counter-clockwise on screen
  return static_cast<Action>(((k + 4) % 8) + 1);
}

constexpr Action action_for_side(Side s, Action a) { return s == Side::Left ? a : mirror_action(a); }

// Nearest of the eight directions, by exact component comparisons so that
// quantize(-v) == mirror_action(quantize(v)).
inline Action quantize_heading(Vec2 v) {
  if (v.x == 0.0 && v.y == 0.0) return Action::Idle;
  // tan(22.5 deg)
  constexpr double t = 0.41421356237309504880;
  const double ax = std::fabs(v.x), ay = std::fabs(v.y);
  if (ay <= t * ax) return v.x > 0 ? Action::Right : Action::Left;
  if (ax <= t * ay) return v.y > 0 ? Action::Bottom : Action::Top;
  if (v.x > 0) return v.y > 0 ? Action::BottomRight : Action::TopRight;
  return v.y > 0 ? Action::BottomLeft : Action::TopLeft;
}

// State --------------------------------------------------------------------------

inline constexpr int kTeamSize = 11;
inline constexpr int kPlayerCount = 2 * kTeamSize;

struct PlayerRef {
  Side side = Side::Left;
  int index = 0;
  friend constexpr bool operator==(PlayerRef, PlayerRef) = default;
  friend constexpr auto operator<=>(PlayerRef a, PlayerRef b) {
    return a.side != b.side ? a.side <=> b.side : a.index <=> b.index;
  }
};

struct PlayerState {
  Vec2 position;
  Vec2 velocity;
  Vec2 facing{1.0, 0.0};
  double tiredness = 0.0;
  std::optional<Action> sticky_direction;
  bool sticky_sprint = false;
  bool sticky_dribble = false;
  int yellow_cards = 0;
  bool sent_off = false;
  // False for slots the scenario leaves empty.
  bool present = false;
  double base_speed = 0.01;
  Role role = Role::Midfielder;

  [[nodiscard]] bool on_pitch() const { return present && !sent_off; }
  friend bool operator==(const PlayerState&, const PlayerState&) = default;
};

struct BallState {
  Vec2 position;
  double z = 0.0;
  Vec2 velocity;
  double vz = 0.0;
  std::optional<PlayerRef> owned_by;
  friend bool operator==(const BallState&, const BallState&) = default;
};

using Team = std::array<PlayerState, kTeamSize>;

struct GameState {
  int frame = 0;
  int duration_frames = 3000;
  std::array<Team, 2> teams{};
  BallState ball;
  GameMode mode = GameMode::KickOff;
  Side mode_owner = Side::Left;
  std::array<int, 2> score{0, 0};
  std::array<int, 2> active_player{0, 0};
  DeterministicRng rng;
  bool stochastic = false;

  // Rule configuration.
  bool offsides_enabled = true;
  std::array<bool, 2> frozen{false, false};      // lazy sides: no movement
  std::array<double, 2> keeper_skill{0.6, 0.6};  // difficulty of each side's keeper

  // Rules bookkeeping.
  std::optional<PlayerRef> last_toucher;
  std::optional<PlayerRef> kick_cooldown_player;
  int kick_cooldown = 0;
  int possession_frames = 0;
  std::optional<Side> shot_side;  // side whose shot is in flight
  bool shot_beat_keeper = false;
  std::optional<Side> offside_side;  // side whose flagged players are offside
  std::uint16_t offside_flags = 0;   // bit i: player i of offside_side
  std::optional<PlayerRef> set_piece_taker;
  int set_piece_frames = 0;

  Team& team(Side s) { return teams[index_of(s)]; }
  [[nodiscard]] const Team& team(Side s) const { return teams[index_of(s)]; }
  PlayerState& player(PlayerRef r) { return teams[index_of(r.side)][static_cast<std::size_t>(r.index)]; }
  [[nodiscard]] const PlayerState& player(PlayerRef r) const {
    return teams[index_of(r.side)][static_cast<std::size_t>(r.index)];
  }
  [[nodiscard]] std::optional<Side> possession() const {
    if (!ball.owned_by) return std::nullopt;
    return ball.owned_by->side;
  }

  friend bool operator==(const GameState&, const GameState&) = default;
};

// Events --------------------------------------------------------------------------

enum class EventKind : std::uint8_t {
  Goal,              // side scored
  OwnGoal,           // side put the ball into its own goal
  OutLeftRight,      // throw-in awarded to side
  OutGoalLine,       // corner or goal kick awarded to side
  OffsideCalled,     // side was caught offside
  Foul,              // side committed a foul
  YellowCard,        // side/player booked
  RedCard,           // side/player sent off
  PossessionChange,  // side gained the ball
  KickExecuted,      // side/player kicked; kick holds the action
  EpisodeEnd,
};

enum class EndReason : std::uint8_t { Time, Score, PossessionLost, OutOfPlay };

inline constexpr std::array<std::string_view, 4> kEndReasonNames = {"time", "score", "possession_lost",
                                                                    "out_of_play"};

struct Event {
  EventKind kind = EventKind::Goal;
  Side side = Side::Left;
  int player = -1;
  GameMode restart = GameMode::Normal;  // for Out* events
  Action kick = Action::Idle;           // for KickExecuted
  EndReason reason = EndReason::Time;   // for EpisodeEnd
  friend bool operator==(const Event&, const Event&) = default;
};

// Side whose score an event increments, if any.
constexpr std::optional<Side> scoring_side(const Event& e) {
  if (e.kind == EventKind::Goal) return e.side;
  if (e.kind == EventKind::OwnGoal) return opponent(e.side);
  return std::nullopt;
}

inline std::string to_string(const Event& e) {
  const std::string side(side_name(e.side));
  switch (e.kind) {
    case EventKind::Goal: return "Goal(" + side + ")";
    case EventKind::OwnGoal: return "OwnGoal(" + side + ")";
    case EventKind::OutLeftRight: return "OutLeftRight(ThrowIn:" + side + ")";
    case EventKind::OutGoalLine:
      return "OutGoalLine(" + std::string(kGameModeNames[static_cast<std::size_t>(e.restart)]) + ":" + side + ")";
    case EventKind::OffsideCalled: return "OffsideCalled(" + side + ")";
    case EventKind::Foul: return "Foul(" + side + ")";
    case EventKind::YellowCard: return "YellowCard(" + side + "," + std::to_string(e.player) + ")";
    case EventKind::RedCard: return "RedCard(" + side + "," + std::to_string(e.player) + ")";
    case EventKind::PossessionChange: return "PossessionChange(" + side + ")";
    case EventKind::KickExecuted:
      return "KickExecuted(" + std::string(action_name(e.kick)) + ":" + side + "," + std::to_string(e.player) + ")";
    case EventKind::EpisodeEnd:
      return "EpisodeEnd(" + std::string(kEndReasonNames[static_cast<std::size_t>(e.reason)]) + ")";
  }
  return {};
}

}  // namespace football
