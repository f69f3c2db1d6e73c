#include "chainpaths/enumeration.hpp"

#include <algorithm>
#include <array>

#include "chainpaths/errors.hpp"

namespace chainpaths {

namespace {

void check_size(int n, int guard) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "n must be nonnegative, got " + std::to_string(n));
  if (n > guard) {
    throw Error(ErrorCode::size_guard_exceeded,
                "n = " + std::to_string(n) + " exceeds the enumeration guard " + std::to_string(guard));
  }
}

bool is_decreasing_class(ClassId c) {
  return c == ClassId::pc || c == ClassId::c || c == ClassId::q || c == ClassId::qp;
}

constexpr std::array<Step, 3> kStepOrder{Step::diag, Step::horiz, Step::vert};

}  // namespace

ClassEnumerator::ClassEnumerator(ClassId cls, int n, int guard)
    : cls_(cls), n_(n), cod_(cls == ClassId::del ? n + 1 : n), decreasing_(is_decreasing_class(cls)) {
  check_size(n, guard);
  mask_end_ = (1ul << n) - 1;
}

bool ClassEnumerator::load_mask() {
  const unsigned long full = mask_end_;
  for (; mask_ <= mask_end_; ++mask_) {
    if ((cls_ == ClassId::c || cls_ == ClassId::o) && mask_ != full) continue;
    if (cls_ == ClassId::q && (mask_ & 1ul) == 0) continue;
    if (cls_ == ClassId::qp && (mask_ & 1ul) != 0) continue;
    points_.clear();
    upper_.clear();
    for (int x = 0; x < n_; ++x) {
      if (mask_ & (1ul << x)) {
        points_.push_back(x);
        upper_.push_back(decreasing_ ? std::min(x, cod_ - 1) : cod_ - 1);
      }
    }
    images_.assign(points_.size(), 0);
    return true;
  }
  return false;
}

bool ClassEnumerator::advance_images() {
  // Upper bounds are nondecreasing along the domain, so resetting the tail to the bumped
  // value keeps every bound satisfied.
  for (std::size_t i = images_.size(); i-- > 0;) {
    if (images_[i] < upper_[i]) {
      ++images_[i];
      std::fill(images_.begin() + static_cast<std::ptrdiff_t>(i) + 1, images_.end(), images_[i]);
      return true;
    }
  }
  return false;
}

std::optional<ChainMap> ClassEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    mask_ = 0;
    if (!load_mask()) {
      done_ = true;
      return std::nullopt;
    }
  } else if (!advance_images()) {
    ++mask_;
    if (!load_mask()) {
      done_ = true;
      return std::nullopt;
    }
  }
  std::vector<MapPair> pairs(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) pairs[i] = {points_[i], images_[i]};
  return ChainMap::make(n_, cod_, std::move(pairs));
}

std::vector<ChainMap> enumerate_class(ClassId cls, int n, int guard) {
  std::vector<ChainMap> out;
  ClassEnumerator gen(cls, n, guard);
  for (const auto& m : gen) out.push_back(m);
  return out;
}

PathEnumerator::PathEnumerator(int n, PathFilter filter, int guard) : n_(n), filter_(filter) {
  check_size(n, guard);
}

bool PathEnumerator::allowed(Point from, Step step) const {
  if (filter_.no_diag && step == Step::diag) return false;
  const Point to{from.x + (step != Step::vert ? 1 : 0), from.y + (step != Step::horiz ? 1 : 0)};
  if (to.x > n_ || to.y > n_) return false;
  if (filter_.subdiagonal && to.y > to.x) return false;
  if (to.x == n_ && to.y == n_) return !(filter_.last_not_h && step == Step::horiz);
  // Once the top edge is reached only H steps remain, so the last step would be H.
  if (filter_.last_not_h && to.y == n_) return false;
  return true;
}

// Every vertex admitted by allowed() can still be completed (finish with H steps to x = n,
// then V steps), so the greedy smallest-step extension never dead-ends.
bool PathEnumerator::complete_from_here() {
  while (!(trail_.back().x == n_ && trail_.back().y == n_)) {
    bool extended = false;
    for (Step s : kStepOrder) {
      if (allowed(trail_.back(), s)) {
        const Point from = trail_.back();
        steps_.push_back(s);
        trail_.push_back({from.x + (s != Step::vert ? 1 : 0), from.y + (s != Step::horiz ? 1 : 0)});
        extended = true;
        break;
      }
    }
    if (!extended) return false;
  }
  return true;
}

bool PathEnumerator::advance() {
  while (!steps_.empty()) {
    const Step last = steps_.back();
    steps_.pop_back();
    trail_.pop_back();
    for (Step s : kStepOrder) {
      if (s <= last || !allowed(trail_.back(), s)) continue;
      const Point from = trail_.back();
      steps_.push_back(s);
      trail_.push_back({from.x + (s != Step::vert ? 1 : 0), from.y + (s != Step::horiz ? 1 : 0)});
      if (complete_from_here()) return true;
    }
  }
  return false;
}

std::optional<LatticePath> PathEnumerator::next() {
  if (done_) return std::nullopt;
  bool ok = false;
  if (!started_) {
    started_ = true;
    trail_.assign(1, Point{});
    ok = complete_from_here();
  } else {
    ok = advance();
  }
  if (!ok) {
    done_ = true;
    return std::nullopt;
  }
  return LatticePath::from_steps(n_, steps_);
}

std::vector<LatticePath> enumerate_paths(int n, PathFilter filter, int guard) {
  std::vector<LatticePath> out;
  PathEnumerator gen(n, filter, guard);
  for (const auto& p : gen) out.push_back(p);
  return out;
}

std::map<int, BigCount> census(ClassId cls, int n, Statistic stat, int guard) {
  std::map<int, BigCount> hist;
  ClassEnumerator gen(cls, n, guard);
  for (const auto& m : gen) {
    const auto s = stats(m);
    int key = 0;
    switch (stat) {
      case Statistic::dom_card: key = s.dom_card; break;
      case Statistic::im_card: key = s.im_card; break;
      case Statistic::g_bucket: key = s.max_im ? *s.max_im + 1 : 0; break;
    }
    ++hist[key];
  }
  return hist;
}

}  // namespace chainpaths
