#pragma once

#include <iterator>
#include <map>
#include <optional>
#include <vector>

#include "chainpaths/big_count.hpp"
#include "chainpaths/chain_map.hpp"
#include "chainpaths/lattice_path.hpp"

namespace chainpaths {

inline constexpr int kDefaultSizeGuard = 12;

namespace detail {

// Input iterator over anything with `std::optional<T> next()`.
template <class Generator, class T>
class GeneratorIterator {
 public:
  using value_type = T;
  using difference_type = std::ptrdiff_t;

  GeneratorIterator() = default;
  explicit GeneratorIterator(Generator* gen) : gen_(gen) { ++*this; }

  const T& operator*() const { return *current_; }
  const T* operator->() const { return &*current_; }
  GeneratorIterator& operator++() {
    current_ = gen_->next();
    return *this;
  }
  void operator++(int) { ++*this; }
  friend bool operator==(const GeneratorIterator& it, std::default_sentinel_t) {
    return !it.current_.has_value();
  }

 private:
  Generator* gen_ = nullptr;
  std::optional<T> current_;
};

}  // namespace detail

/// Lazily yields every member of a class on the n-chain exactly once. Order: domain bitmask
/// ascending (bit i <-> point i), then image tuple lexicographic. Class constraints bound each
/// image from above, so no candidate is generated and then rejected.
class ClassEnumerator {
 public:
  /// Throws ErrorCode::size_guard_exceeded when n > guard, invalid_argument when n < 0.
  ClassEnumerator(ClassId cls, int n, int guard = kDefaultSizeGuard);

  std::optional<ChainMap> next();

  auto begin() { return detail::GeneratorIterator<ClassEnumerator, ChainMap>(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  bool load_mask();
  bool advance_images();

  ClassId cls_;
  int n_;
  int cod_;
  bool decreasing_;
  unsigned long mask_ = 0;
  unsigned long mask_end_ = 0;
  std::vector<int> points_;
  std::vector<int> images_;
  std::vector<int> upper_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<ChainMap> enumerate_class(ClassId cls, int n, int guard = kDefaultSizeGuard);

struct PathFilter {
  bool subdiagonal = false;
  bool no_diag = false;
  bool last_not_h = false;
};

/// Lazily yields each n x n path passing the filter exactly once, in lexicographic order of
/// the step strings (D < H < V).
class PathEnumerator {
 public:
  PathEnumerator(int n, PathFilter filter, int guard = kDefaultSizeGuard);

  std::optional<LatticePath> next();

  auto begin() { return detail::GeneratorIterator<PathEnumerator, LatticePath>(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  struct Point {
    int x = 0;
    int y = 0;
  };

  bool allowed(Point from, Step step) const;
  bool complete_from_here();
  bool advance();

  int n_;
  PathFilter filter_;
  std::vector<Step> steps_;
  std::vector<Point> trail_;  // trail_[i] is the vertex before steps_[i]; back() is the current end
  bool started_ = false;
  bool done_ = false;
};

std::vector<LatticePath> enumerate_paths(int n, PathFilter filter, int guard = kDefaultSizeGuard);

enum class Statistic {
  dom_card,  // |Dom|
  im_card,   // |Im|
  g_bucket,  // max(Im) + 1, and 0 for the empty map
};

/// Histogram of a statistic over a class.
std::map<int, BigCount> census(ClassId cls, int n, Statistic stat, int guard = kDefaultSizeGuard);

}  // namespace chainpaths
