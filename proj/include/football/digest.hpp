#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>

#include "football/types.hpp"

namespace football {

// 64-bit FNV-1a over a canonical little-endian encoding of the state.
class Fnv1a {
 public:
  static constexpr std::uint64_t kOffset = 0xcbf29ce484222325ULL;
  static constexpr std::uint64_t kPrime = 0x100000001b3ULL;

  Fnv1a& byte(std::uint8_t b) {
    h_ = (h_ ^ b) * kPrime;
    return *this;
  }
  Fnv1a& u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) byte(static_cast<std::uint8_t>(v >> (8 * i)));
    return *this;
  }
  Fnv1a& i32(int v) {
    const auto u = static_cast<std::uint32_t>(v);
    for (int i = 0; i < 4; ++i) byte(static_cast<std::uint8_t>(u >> (8 * i)));
    return *this;
  }
  // +0.0 and -0.0 hash alike.
  Fnv1a& f64(double v) { return u64(std::bit_cast<std::uint64_t>(v == 0.0 ? 0.0 : v)); }
  Fnv1a& vec(Vec2 v) { return f64(v.x).f64(v.y); }
  Fnv1a& flag(bool b) { return byte(b ? 1 : 0); }
  Fnv1a& ref(const std::optional<PlayerRef>& r) {
    if (!r) return byte(0xff);
    return byte(static_cast<std::uint8_t>(index_of(r->side))).byte(static_cast<std::uint8_t>(r->index));
  }

  [[nodiscard]] std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = kOffset;
};

inline std::uint64_t state_digest(const GameState& s) {
  Fnv1a h;
  h.i32(s.frame).i32(s.duration_frames).i32(s.score[0]).i32(s.score[1]);
  h.byte(static_cast<std::uint8_t>(s.mode)).byte(static_cast<std::uint8_t>(index_of(s.mode_owner)));
  h.vec(s.ball.position).f64(s.ball.z).vec(s.ball.velocity).f64(s.ball.vz).ref(s.ball.owned_by);
  for (const auto& team : s.teams) {
    for (const auto& p : team) {
      h.vec(p.position).vec(p.velocity).vec(p.facing).f64(p.tiredness);
      h.byte(p.sticky_direction ? static_cast<std::uint8_t>(*p.sticky_direction) : 0xff);
      h.flag(p.sticky_sprint).flag(p.sticky_dribble).i32(p.yellow_cards).flag(p.sent_off).flag(p.present);
    }
  }
  h.i32(s.active_player[0]).i32(s.active_player[1]);
  h.u64(s.rng.key()).u64(s.rng.counter());
  h.ref(s.last_toucher).ref(s.kick_cooldown_player).i32(s.kick_cooldown).i32(s.possession_frames);
  h.byte(s.shot_side ? static_cast<std::uint8_t>(index_of(*s.shot_side)) : 0xff).flag(s.shot_beat_keeper);
  h.byte(s.offside_side ? static_cast<std::uint8_t>(index_of(*s.offside_side)) : 0xff).i32(s.offside_flags);
  h.ref(s.set_piece_taker).i32(s.set_piece_frames);
  return h.value();
}

// Rolling digest of a trajectory: every applied action byte feeds the action
// chain, so a changed action shows up even when the state happens not to move.
class TrajectoryDigest {
 public:
  void add_actions(std::span<const Action> actions) {
    actions_.i32(static_cast<int>(actions.size()));
    for (Action a : actions) actions_.byte(static_cast<std::uint8_t>(a));
  }

  [[nodiscard]] std::uint64_t digest(const GameState& s) const {
    Fnv1a h;
    h.u64(state_digest(s)).u64(actions_.value());
    return h.value();
  }

 private:
  Fnv1a actions_;
};

}  // namespace football
