#pragma once

// Canonical formation tables. All positions are in the owning side's attacking
// frame (own goal at x = -1) and indexed by player slot.

#include <array>

#include "football/types.hpp"

namespace football::formations {

struct Slot {
  Role role;
  Vec2 position;
};

// 4-4-2 base shape; also the kickoff shape of the side not kicking off.
inline constexpr std::array<Slot, kTeamSize> kBase442 = {{
    {Role::Keeper, {-0.96, 0.0}},
    {Role::Defender, {-0.70, -0.28}},
    {Role::Defender, {-0.74, -0.09}},
    {Role::Defender, {-0.74, 0.09}},
    {Role::Defender, {-0.70, 0.28}},
    {Role::Midfielder, {-0.42, -0.28}},
    {Role::Midfielder, {-0.45, -0.09}},
    {Role::Midfielder, {-0.45, 0.09}},
    {Role::Midfielder, {-0.42, 0.28}},
    {Role::Forward, {-0.15, -0.10}},
    {Role::Forward, {-0.15, 0.10}},
}};

// Kicking-off side: slot 10 takes the kick from the centre spot.
inline constexpr int kKickOffTaker = 10;
inline constexpr std::array<Vec2, kTeamSize> kKickOffAttack = {{
    {-0.96, 0.0},
    {-0.70, -0.28},
    {-0.74, -0.09},
    {-0.74, 0.09},
    {-0.70, 0.28},
    {-0.42, -0.28},
    {-0.45, -0.09},
    {-0.45, 0.09},
    {-0.42, 0.28},
    {-0.06, -0.12},
    {-0.01, 0.0},
}};

// Penalty: taker at the spot, defending keeper on the line, everyone else
// waits outside the box. Indexed by the k-th waiting player of each side.
inline constexpr double kPenaltyKeeperX = 0.99;
inline constexpr std::array<Vec2, kTeamSize> kPenaltyAttackersWaiting = {{
    {0.62, -0.35}, {0.62, -0.28}, {0.62, -0.21}, {0.62, -0.14}, {0.62, -0.07}, {0.62, 0.0},
    {0.62, 0.07}, {0.62, 0.14}, {0.62, 0.21}, {0.62, 0.28}, {0.62, 0.35},
}};
inline constexpr std::array<Vec2, kTeamSize> kPenaltyDefendersWaiting = {{
    {0.58, -0.35}, {0.58, -0.28}, {0.58, -0.21}, {0.58, -0.14}, {0.58, -0.07}, {0.58, 0.0},
    {0.58, 0.07}, {0.58, 0.14}, {0.58, 0.21}, {0.58, 0.28}, {0.58, 0.35},
}};

}  // namespace football::formations
