#pragma once

#include "football/types.hpp"

namespace football {

// Every per-frame tuning constant of the simulation lives here.
// Units: pitch units (x spans [-1, 1]) and frames (10 Hz).
namespace physics {

// Pitch geometry.
inline constexpr double kHalfLength = 1.0;
inline constexpr double kHalfWidth = 0.42;
inline constexpr double kContainmentMargin = 0.02;
inline constexpr double kGoalHalfWidth = 0.044;
inline constexpr double kCrossbarHeight = 0.05;
inline constexpr double kBoxDepth = 0.3;  // penalty box spans |x| >= 1 - depth
inline constexpr double kBoxHalfWidth = 0.24;
inline constexpr double kPenaltySpot = 0.79;

// Players.
inline constexpr double kBaseSpeed = 0.01;
inline constexpr double kSprintMultiplier = 1.4;
inline constexpr double kDribbleSpeedFactor = 0.9;
inline constexpr double kFatiguePenalty = 0.3;
inline constexpr double kSprintFatigue = 0.0005;
inline constexpr double kMoveFatigue = 0.0001;
inline constexpr double kRecovery = 0.0002;

constexpr double role_speed(Role r) {
  switch (r) {
    case Role::Keeper: return 0.009;
    case Role::Defender: return 0.0098;
    case Role::Midfielder: return kBaseSpeed;
    case Role::Forward: return 0.0102;
  }
  return kBaseSpeed;
}

// Ball.
inline constexpr double kGroundFriction = 0.95;
inline constexpr double kAirDrag = 0.99;
inline constexpr double kGravity = 0.002;
inline constexpr double kBounce = 0.5;
inline constexpr double kMinBounceSpeed = 0.004;
inline constexpr double kControlRadius = 0.015;
inline constexpr double kControlHeight = 0.02;
inline constexpr double kBallOffset = 0.01;
inline constexpr double kDribbleBallOffset = 0.007;

// Kicks.
inline constexpr double kShortPassSpeed = 0.022;
inline constexpr double kLongPassSpeed = 0.04;
inline constexpr double kShotSpeed = 0.06;
inline constexpr double kHighPassSpeed = 0.028;
inline constexpr double kHighPassLift = 0.025;
inline constexpr double kShotAimOffset = 0.03;
inline constexpr double kPassNoise = 0.04;  // radians, stochastic mode only
inline constexpr double kShotNoise = 0.06;
inline constexpr int kKickCooldownFrames = 5;

// Contests and rules.
inline constexpr int kStealProtectionFrames = 3;
inline constexpr double kDribbleStealFactor = 0.6;
inline constexpr double kSlideReach = 0.03;
inline constexpr double kYellowCardProbability = 0.25;
inline constexpr double kKeeperReach = 0.03;
inline constexpr double kKeeperReachHeight = 0.06;
inline constexpr double kRestartClearance = 0.05;
inline constexpr int kSetPieceTimeoutFrames = 30;
inline constexpr double kActiveSwitchHysteresis = 0.02;

constexpr double keeper_save_probability(double theta) { return 0.2 + 0.6 * theta; }

}  // namespace physics
}  // namespace football
