#include "chainpaths/lattice_path.hpp"

#include <algorithm>
#include <sstream>

#include "chainpaths/errors.hpp"

namespace chainpaths {

namespace {

struct Displacement {
  int dx = 0;
  int dy = 0;
};

Displacement displacement(std::span<const Step> steps) {
  Displacement d;
  for (Step s : steps) {
    d.dx += s != Step::vert ? 1 : 0;
    d.dy += s != Step::horiz ? 1 : 0;
  }
  return d;
}

std::vector<Step> read_steps(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'D': steps.push_back(Step::diag); break;
      case 'H': steps.push_back(Step::horiz); break;
      case 'V': steps.push_back(Step::vert); break;
      default:
        throw Error(ErrorCode::bad_character, "unexpected character '" + std::string(1, text[i]) +
                                                  "' at position " + std::to_string(i));
    }
  }
  return steps;
}

}  // namespace

LatticePath LatticePath::parse(std::string_view text, int side) {
  return from_steps(side, read_steps(text));
}

LatticePath LatticePath::parse(std::string_view text) {
  auto steps = read_steps(text);
  const auto d = displacement(steps);
  return from_steps(d.dx, std::move(steps));
}

LatticePath LatticePath::from_steps(int side, std::vector<Step> steps) {
  if (side < 0) {
    throw Error(ErrorCode::wrong_endpoint, "side must be nonnegative, got " + std::to_string(side));
  }
  const auto d = displacement(steps);
  if (d.dx != side || d.dy != side) {
    throw Error(ErrorCode::wrong_endpoint, "path ends at (" + std::to_string(d.dx) + "," +
                                               std::to_string(d.dy) + "), expected (" +
                                               std::to_string(side) + "," + std::to_string(side) + ")");
  }
  return LatticePath(side, std::move(steps));
}

LatticePath LatticePath::all_diagonal(int side) {
  return from_steps(side, std::vector<Step>(static_cast<std::size_t>(std::max(side, 0)), Step::diag));
}

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(static_cast<char>(s));
  return out;
}

LevelProfile to_profile(const LatticePath& p) {
  LevelProfile profile;
  profile.runs.assign(static_cast<std::size_t>(p.side()) + 1, 0);
  profile.leave.reserve(static_cast<std::size_t>(p.side()));
  std::size_t level = 0;
  for (Step s : p.steps()) {
    if (s == Step::horiz) {
      ++profile.runs[level];
    } else {
      profile.leave.push_back(s);
      ++level;
    }
  }
  return profile;
}

LatticePath from_profile(const LevelProfile& profile) {
  if (profile.runs.size() != profile.leave.size() + 1) {
    throw Error(ErrorCode::profile_inconsistent, "runs must have exactly one more entry than leave");
  }
  const int side = static_cast<int>(profile.leave.size());
  int width = 0;
  for (int r : profile.runs) {
    if (r < 0) throw Error(ErrorCode::profile_inconsistent, "negative horizontal run");
    width += r;
  }
  for (Step s : profile.leave) {
    if (s == Step::horiz) throw Error(ErrorCode::profile_inconsistent, "leave steps must be V or D");
    width += s == Step::diag ? 1 : 0;
  }
  if (width != side) {
    throw Error(ErrorCode::profile_inconsistent, "profile spans width " + std::to_string(width) +
                                                     " but has " + std::to_string(side) + " levels");
  }
  std::vector<Step> steps;
  for (std::size_t y = 0; y <= profile.leave.size(); ++y) {
    steps.insert(steps.end(), static_cast<std::size_t>(profile.runs[y]), Step::horiz);
    if (y < profile.leave.size()) steps.push_back(profile.leave[y]);
  }
  return LatticePath::from_steps(side, std::move(steps));
}

bool is_subdiagonal(const LatticePath& p) noexcept {
  int x = 0;
  int y = 0;
  for (Step s : p.steps()) {
    x += s != Step::vert ? 1 : 0;
    y += s != Step::horiz ? 1 : 0;
    if (y > x) return false;
  }
  return true;
}

PathStats path_stats(const LatticePath& p) noexcept {
  PathStats st;
  int y = 0;
  Step prev = Step::diag;
  bool first = true;
  for (Step s : p.steps()) {
    switch (s) {
      case Step::horiz:
        if (first || prev != Step::horiz) ++st.h_segments;
        st.last_h_level = y;
        break;
      case Step::vert:
        ++st.v_count;
        ++y;
        break;
      case Step::diag:
        st.has_diag = true;
        ++y;
        break;
    }
    prev = s;
    first = false;
  }
  st.last_step_is_h = !first && prev == Step::horiz;
  return st;
}

bool is_idempotent_path(const LatticePath& p) noexcept {
  const auto steps = p.steps();
  std::size_t i = 0;
  // Prefix before the first horizontal run is free.
  while (i < steps.size() && steps[i] != Step::horiz) ++i;
  while (i < steps.size()) {
    std::size_t run = 0;
    while (i < steps.size() && steps[i] == Step::horiz) {
      ++run;
      ++i;
    }
    for (std::size_t v = 0; v < run; ++v, ++i) {
      if (i >= steps.size() || steps[i] != Step::vert) return false;
    }
    while (i < steps.size() && steps[i] == Step::diag) ++i;
    if (i < steps.size() && steps[i] != Step::horiz) return false;
  }
  return true;
}

std::string render_svg(const LatticePath& p) {
  constexpr int cell = 40;
  constexpr int margin = 20;
  const int n = p.side();
  const int extent = n * cell;
  const int size = extent + 2 * margin;
  auto px = [&](int x) { return margin + x * cell; };
  auto py = [&](int y) { return margin + extent - y * cell; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  svg << "  <g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (int i = 0; i <= n; ++i) {
    svg << "    <line x1=\"" << px(i) << "\" y1=\"" << py(0) << "\" x2=\"" << px(i) << "\" y2=\"" << py(n)
        << "\"/>\n";
    svg << "    <line x1=\"" << px(0) << "\" y1=\"" << py(i) << "\" x2=\"" << px(n) << "\" y2=\"" << py(i)
        << "\"/>\n";
  }
  svg << "  </g>\n";
  svg << "  <line class=\"diagonal\" x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(n)
      << "\" y2=\"" << py(n) << "\" stroke=\"#888888\" stroke-dasharray=\"4 4\"/>\n";
  svg << "  <polyline class=\"path\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"3\" points=\"";
  int x = 0;
  int y = 0;
  svg << px(x) << ',' << py(y);
  for (Step s : p.steps()) {
    x += s != Step::vert ? 1 : 0;
    y += s != Step::horiz ? 1 : 0;
    svg << ' ' << px(x) << ',' << py(y);
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

}  // namespace chainpaths
