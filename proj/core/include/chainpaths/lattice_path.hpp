#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chainpaths {

/// H = (1,0), V = (0,1), D = (1,1). The enumerator values are the text characters, so
/// comparing steps orders them D < H < V.
enum class Step : char { diag = 'D', horiz = 'H', vert = 'V' };

/// A path of H/V/D steps from (0,0) to (side, side).
class LatticePath {
 public:
  /// Throws ErrorCode::bad_character or ErrorCode::wrong_endpoint.
  static LatticePath parse(std::string_view text, int side);
  /// Same, with side = #H + #D.
  static LatticePath parse(std::string_view text);
  static LatticePath from_steps(int side, std::vector<Step> steps);
  static LatticePath all_diagonal(int side);

  int side() const noexcept { return side_; }
  std::span<const Step> steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }

  std::string to_string() const;

  bool operator==(const LatticePath&) const = default;
  auto operator<=>(const LatticePath& other) const {
    if (auto c = side_ <=> other.side_; c != 0) return c;
    return steps_ <=> other.steps_;
  }

 private:
  LatticePath(int side, std::vector<Step> steps) : side_(side), steps_(std::move(steps)) {}

  int side_ = 0;
  std::vector<Step> steps_;
};

/// Level-by-level normal form. For level y in 0..side-1, runs[y] H steps are taken at height
/// y and then leave[y] (V or D) raises the path to y + 1; runs[side] H steps finish at the top.
struct LevelProfile {
  std::vector<int> runs;    // size side + 1
  std::vector<Step> leave;  // size side

  bool operator==(const LevelProfile&) const = default;
};

LevelProfile to_profile(const LatticePath& p);
/// Throws ErrorCode::profile_inconsistent when sizes or totals do not describe a side x side path.
LatticePath from_profile(const LevelProfile& profile);

/// Every vertex (x, y) on the path has y <= x.
bool is_subdiagonal(const LatticePath& p) noexcept;

struct PathStats {
  int v_count = 0;
  int h_segments = 0;
  std::optional<int> last_h_level;
  bool last_step_is_h = false;
  bool has_diag = false;

  bool operator==(const PathStats&) const = default;
};

PathStats path_stats(const LatticePath& p) noexcept;

/// The idempotent-path shape: no D directly after an H, and every maximal H run of length k is
/// followed by exactly k V steps and then only D steps until the next H run (or the end).
/// Steps before the first H run are unconstrained.
bool is_idempotent_path(const LatticePath& p) noexcept;

/// A standalone SVG drawing of the path over its unit grid, with the line y = x dashed.
std::string render_svg(const LatticePath& p);

}  // namespace chainpaths
