#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "football/constants.hpp"
#include "football/types.hpp"

namespace football {

// Float115 -------------------------------------------------------------------------
//
// Wire layout (viewpoint side attacks toward +x):
//   [0, 22)    own positions (x, y) x 11
//   [22, 44)   own velocities
//   [44, 66)   opponent positions
//   [66, 88)   opponent velocities
//   [88, 91)   ball position x, y, z
//   [91, 94)   ball velocity
//   [94, 97)   ownership one-hot: none, own, opponent
//   [97, 108)  own active player one-hot
//   [108, 115) game mode one-hot
// Players not on the pitch are encoded at (-1, -0.42) with zero velocity.

inline constexpr std::size_t kFloat115Size = 115;
using Float115 = std::array<double, kFloat115Size>;

namespace float115 {
inline constexpr std::size_t kOwnPositions = 0;
inline constexpr std::size_t kOwnVelocities = 22;
inline constexpr std::size_t kOpponentPositions = 44;
inline constexpr std::size_t kOpponentVelocities = 66;
inline constexpr std::size_t kBallPosition = 88;
inline constexpr std::size_t kBallVelocity = 91;
inline constexpr std::size_t kOwnership = 94;
inline constexpr std::size_t kActivePlayer = 97;
inline constexpr std::size_t kGameMode = 108;
inline constexpr Vec2 kAbsentPosition{-1.0, -0.42};
}  // namespace float115

// `active` overrides the own active player marked in the one-hot block.
inline Float115 to_float115(const GameState& s, Side viewpoint, std::optional<int> active = std::nullopt) {
  using namespace float115;
  Float115 v{};
  auto write_team = [&](Side side, std::size_t pos_at, std::size_t vel_at) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(kTeamSize); ++i) {
      const auto& p = s.team(side)[i];
      Vec2 pos = kAbsentPosition, vel{};
      if (p.on_pitch()) {
        pos = to_frame(viewpoint, p.position);
        vel = to_frame(viewpoint, p.velocity);
      }
      v[pos_at + 2 * i] = pos.x;
      v[pos_at + 2 * i + 1] = pos.y;
      v[vel_at + 2 * i] = vel.x;
      v[vel_at + 2 * i + 1] = vel.y;
    }
  };
  write_team(viewpoint, kOwnPositions, kOwnVelocities);
  write_team(opponent(viewpoint), kOpponentPositions, kOpponentVelocities);
  const Vec2 bp = to_frame(viewpoint, s.ball.position);
  const Vec2 bv = to_frame(viewpoint, s.ball.velocity);
  v[kBallPosition] = bp.x;
  v[kBallPosition + 1] = bp.y;
  v[kBallPosition + 2] = s.ball.z;
  v[kBallVelocity] = bv.x;
  v[kBallVelocity + 1] = bv.y;
  v[kBallVelocity + 2] = s.ball.vz;
  std::size_t owner = 0;
  if (s.ball.owned_by) owner = s.ball.owned_by->side == viewpoint ? 1 : 2;
  v[kOwnership + owner] = 1.0;
  const int act = active.value_or(s.active_player[index_of(viewpoint)]);
  v[kActivePlayer + static_cast<std::size_t>(std::clamp(act, 0, kTeamSize - 1))] = 1.0;
  v[kGameMode + static_cast<std::size_t>(s.mode)] = 1.0;
  return v;
}

// Reflects every coordinate entry of an encoding. Involution; the absent
// sentinel is left in place.
inline Float115 mirror_coordinates(const Float115& in) {
  using namespace float115;
  Float115 v = in;
  auto flip_pairs = [&](std::size_t at, std::size_t count, bool positions) {
    for (std::size_t i = 0; i < count; ++i) {
      const double x = in[at + 2 * i], y = in[at + 2 * i + 1];
      if (positions && x == kAbsentPosition.x && y == kAbsentPosition.y) continue;
      v[at + 2 * i] = -x;
      v[at + 2 * i + 1] = -y;
    }
  };
  flip_pairs(kOwnPositions, 11, true);
  flip_pairs(kOwnVelocities, 11, false);
  flip_pairs(kOpponentPositions, 11, true);
  flip_pairs(kOpponentVelocities, 11, false);
  flip_pairs(kBallPosition, 1, false);
  flip_pairs(kBallVelocity, 1, false);
  return v;
}

// Super Mini Map ----------------------------------------------------------------------

inline constexpr int kSmmRows = 72;
inline constexpr int kSmmCols = 96;
inline constexpr int kSmmPlanes = 4;

struct GridCell {
  int row = 0;
  int col = 0;
  friend constexpr bool operator==(GridCell, GridCell) = default;
};

inline GridCell world_to_grid(Vec2 p) {
  const long col = std::lround((p.x + 1.0) / 2.0 * (kSmmCols - 1));
  const long row = std::lround((p.y + physics::kHalfWidth) / (2.0 * physics::kHalfWidth) * (kSmmRows - 1));
  return {static_cast<int>(std::clamp(row, 0L, static_cast<long>(kSmmRows - 1))),
          static_cast<int>(std::clamp(col, 0L, static_cast<long>(kSmmCols - 1)))};
}

// Planes in order: own team, opponents, ball, own active player; plane-major,
// row-major, one byte per cell holding 0 or 1.
struct SmmPlanes {
  static constexpr std::size_t kPlaneSize = static_cast<std::size_t>(kSmmRows) * kSmmCols;
  std::array<std::uint8_t, kSmmPlanes * kPlaneSize> data{};

  std::uint8_t& at(int plane, int row, int col) {
    return data[static_cast<std::size_t>(plane) * kPlaneSize + static_cast<std::size_t>(row) * kSmmCols +
                static_cast<std::size_t>(col)];
  }
  [[nodiscard]] std::uint8_t at(int plane, int row, int col) const {
    return data[static_cast<std::size_t>(plane) * kPlaneSize + static_cast<std::size_t>(row) * kSmmCols +
                static_cast<std::size_t>(col)];
  }
  [[nodiscard]] int plane_sum(int plane) const {
    int sum = 0;
    const auto begin = data.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(plane) * kPlaneSize);
    for (auto it = begin; it != begin + static_cast<std::ptrdiff_t>(kPlaneSize); ++it) sum += *it;
    return sum;
  }
  friend bool operator==(const SmmPlanes&, const SmmPlanes&) = default;
};

inline void write_smm(const GameState& s, Side viewpoint, std::optional<int> active, std::span<std::uint8_t> out) {
  std::fill(out.begin(), out.end(), std::uint8_t{0});
  auto mark = [&](int plane, Vec2 p) {
    const GridCell c = world_to_grid(to_frame(viewpoint, p));
    out[static_cast<std::size_t>(plane) * SmmPlanes::kPlaneSize + static_cast<std::size_t>(c.row) * kSmmCols +
        static_cast<std::size_t>(c.col)] = 1;
  };
  for (const auto& p : s.team(viewpoint)) {
    if (p.on_pitch()) mark(0, p.position);
  }
  for (const auto& p : s.team(opponent(viewpoint))) {
    if (p.on_pitch()) mark(1, p.position);
  }
  mark(2, s.ball.position);
  const int act = active.value_or(s.active_player[index_of(viewpoint)]);
  const auto& ap = s.team(viewpoint)[static_cast<std::size_t>(std::clamp(act, 0, kTeamSize - 1))];
  if (ap.on_pitch()) mark(3, ap.position);
}

inline SmmPlanes to_smm(const GameState& s, Side viewpoint, std::optional<int> active = std::nullopt) {
  SmmPlanes planes;
  write_smm(s, viewpoint, active, planes.data);
  return planes;
}

// Pixels ----------------------------------------------------------------------------

struct PixelFrame {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;  // row-major, 3 bytes per pixel
  friend bool operator==(const PixelFrame&, const PixelFrame&) = default;
};

namespace raster {

struct Rgb {
  std::uint8_t r, g, b;
};

inline constexpr Rgb kGrass{34, 139, 34};
inline constexpr Rgb kLine{255, 255, 255};
inline constexpr Rgb kBall{250, 250, 250};
inline constexpr Rgb kLeftTeam{220, 40, 40};
inline constexpr Rgb kRightTeam{40, 80, 220};
inline constexpr Rgb kActiveRing{255, 220, 0};
inline constexpr Rgb kStrip{20, 20, 20};

// 3x5 digit glyphs, one row per 3-bit mask, most significant bit left.
inline constexpr std::array<std::array<std::uint8_t, 5>, 11> kGlyphs = {{
    {7, 5, 5, 5, 7}, {2, 6, 2, 2, 7}, {7, 1, 7, 4, 7}, {7, 1, 7, 1, 7}, {5, 5, 7, 1, 1}, {7, 4, 7, 1, 7},
    {7, 4, 7, 5, 7}, {7, 1, 1, 1, 1}, {7, 5, 7, 5, 7}, {7, 5, 7, 1, 7}, {0, 0, 7, 0, 0},  // '-'
}};

class Canvas {
 public:
  Canvas(PixelFrame& f, int top) : f_(f), top_(top) {}

  void put(int x, int y, Rgb c) {
    if (x < 0 || y < 0 || x >= f_.width || y >= f_.height) return;
    const std::size_t at = (static_cast<std::size_t>(y) * static_cast<std::size_t>(f_.width) + static_cast<std::size_t>(x)) * 3;
    f_.rgb[at] = c.r;
    f_.rgb[at + 1] = c.g;
    f_.rgb[at + 2] = c.b;
  }
  void fill_rect(int x0, int y0, int x1, int y1, Rgb c) {
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x) put(x, y, c);
  }

  // Pitch coordinates to pixel coordinates of the field area.
  [[nodiscard]] double px(double x) const { return (x + 1.0) / 2.0 * (f_.width - 1); }
  [[nodiscard]] double py(double y) const {
    return top_ + (y + physics::kHalfWidth) / (2.0 * physics::kHalfWidth) * (f_.height - 1 - top_);
  }

  void line(Vec2 a, Vec2 b, Rgb c) {
    const double x0 = px(a.x), y0 = py(a.y), x1 = px(b.x), y1 = py(b.y);
    const int steps = static_cast<int>(std::ceil(std::max(std::fabs(x1 - x0), std::fabs(y1 - y0)))) + 1;
    for (int i = 0; i <= steps; ++i) {
      const double t = static_cast<double>(i) / steps;
      put(static_cast<int>(std::lround(x0 + (x1 - x0) * t)), static_cast<int>(std::lround(y0 + (y1 - y0) * t)), c);
    }
  }
  void rect(Vec2 a, Vec2 b, Rgb c) {
    line(a, {b.x, a.y}, c);
    line({b.x, a.y}, b, c);
    line(b, {a.x, b.y}, c);
    line({a.x, b.y}, a, c);
  }
  void ellipse(Vec2 centre, double radius, Rgb c) {
    constexpr int kSegments = 48;
    for (int i = 0; i < kSegments; ++i) {
      const double a0 = 2.0 * 3.14159265358979323846 * i / kSegments;
      const double a1 = 2.0 * 3.14159265358979323846 * (i + 1) / kSegments;
      line(centre + Vec2{std::cos(a0), std::sin(a0)} * radius, centre + Vec2{std::cos(a1), std::sin(a1)} * radius, c);
    }
  }
  void disc(Vec2 centre, int r, Rgb c) {
    const int cx = static_cast<int>(std::lround(px(centre.x)));
    const int cy = static_cast<int>(std::lround(py(centre.y)));
    for (int dy = -r; dy <= r; ++dy)
      for (int dx = -r; dx <= r; ++dx)
        if (dx * dx + dy * dy <= r * r) put(cx + dx, cy + dy, c);
  }
  void ring(Vec2 centre, int r, Rgb c) {
    const int cx = static_cast<int>(std::lround(px(centre.x)));
    const int cy = static_cast<int>(std::lround(py(centre.y)));
    for (int dy = -r; dy <= r; ++dy)
      for (int dx = -r; dx <= r; ++dx) {
        const int d2 = dx * dx + dy * dy;
        if (d2 <= r * r && d2 > (r - 1) * (r - 1)) put(cx + dx, cy + dy, c);
      }
  }
  void glyph(int index, int x, int y, int scale, Rgb c) {
    for (int row = 0; row < 5; ++row)
      for (int col = 0; col < 3; ++col)
        if (kGlyphs[static_cast<std::size_t>(index)][static_cast<std::size_t>(row)] & (4 >> col))
          fill_rect(x + col * scale, y + row * scale, x + (col + 1) * scale - 1, y + (row + 1) * scale - 1, c);
  }

 private:
  PixelFrame& f_;
  int top_;
};

}  // namespace raster

// Top-down rendering with a score strip along the top edge.
inline PixelFrame to_pixels(const GameState& s, int width, int height) {
  if (width < 16 || height < 16) throw ContractError("to_pixels: width and height must be at least 16");
  PixelFrame f{width, height, std::vector<std::uint8_t>(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3)};
  const int strip = std::max(6, height / 12);
  raster::Canvas c(f, strip);
  c.fill_rect(0, 0, width - 1, strip - 1, raster::kStrip);
  c.fill_rect(0, strip, width - 1, height - 1, raster::kGrass);

  const double hw = physics::kHalfWidth;
  const double box_x = physics::kHalfLength - physics::kBoxDepth;
  c.rect({-1.0, -hw}, {1.0, hw}, raster::kLine);
  c.line({0.0, -hw}, {0.0, hw}, raster::kLine);
  c.ellipse({0.0, 0.0}, 0.174, raster::kLine);
  c.rect({-1.0, -physics::kBoxHalfWidth}, {-box_x, physics::kBoxHalfWidth}, raster::kLine);
  c.rect({box_x, -physics::kBoxHalfWidth}, {1.0, physics::kBoxHalfWidth}, raster::kLine);

  const int r = std::max(1, width / 96);
  for (Side side : {Side::Left, Side::Right}) {
    const auto colour = side == Side::Left ? raster::kLeftTeam : raster::kRightTeam;
    for (const auto& p : s.team(side))
      if (p.on_pitch()) c.disc(p.position, r, colour);
    const auto& active = s.team(side)[static_cast<std::size_t>(s.active_player[index_of(side)])];
    if (active.on_pitch()) c.ring(active.position, r + 1, raster::kActiveRing);
  }
  c.disc(s.ball.position, std::max(1, r - 1 + static_cast<int>(s.ball.z > physics::kControlHeight)), raster::kBall);

  // Score "L-R", centred.
  const int scale = std::max(1, (strip - 1) / 5);
  std::vector<int> glyphs;
  for (char ch : std::to_string(s.score[0])) glyphs.push_back(ch - '0');
  glyphs.push_back(10);
  for (char ch : std::to_string(s.score[1])) glyphs.push_back(ch - '0');
  const int advance = 4 * scale;
  int x = (width - static_cast<int>(glyphs.size()) * advance) / 2;
  const int y = (strip - 5 * scale) / 2;
  for (int g : glyphs) {
    c.glyph(g, x, y, scale, raster::kLine);
    x += advance;
  }
  return f;
}

// Frame stacking -------------------------------------------------------------------

// Last k frames oldest first; before k frames exist the first frame is repeated.
template <typename T>
std::vector<T> stack_obs(std::span<const T> history, std::size_t k) {
  if (k < 1) throw ContractError("stack_obs: k must be at least 1");
  if (history.empty()) throw ContractError("stack_obs: empty history");
  std::vector<T> out;
  out.reserve(k);
  const std::size_t n = history.size();
  for (std::size_t i = 0; i < k; ++i) {
    // Position of the i-th output frame, counted back from the newest.
    const std::size_t back = k - 1 - i;
    out.push_back(back < n ? history[n - 1 - back] : history.front());
  }
  return out;
}

// Bounded history that yields stack_obs() views without retaining old frames.
template <typename T>
class FrameStack {
 public:
  explicit FrameStack(std::size_t k) : k_(k) {
    if (k < 1) throw ContractError("FrameStack: k must be at least 1");
  }
  void clear() { frames_.clear(); first_.reset(); }
  void push(T frame) {
    if (!first_) first_ = frame;
    frames_.push_back(std::move(frame));
    if (frames_.size() > k_) frames_.pop_front();
  }
  [[nodiscard]] std::vector<T> stacked() const {
    std::vector<T> out;
    out.reserve(k_);
    for (std::size_t i = frames_.size(); i < k_; ++i) out.push_back(*first_);
    for (const auto& f : frames_) out.push_back(f);
    return out;
  }
  [[nodiscard]] std::size_t k() const { return k_; }

 private:
  std::size_t k_;
  std::deque<T> frames_;
  std::optional<T> first_;
};

}  // namespace football
