#pragma once

// Test-only brute force. Nothing here calls the enumeration or counting code under test:
// maps come from scanning every partial function, paths from scanning every step string.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chainpaths/chain_map.hpp"

namespace chainpaths::oracle {

/// Every order-preserving partial map {0..n-1} -> {0..m-1}, found by scanning all (m+1)^n
/// partial functions. Order is unspecified.
inline std::vector<ChainMap> all_order_preserving(int n, int m) {
  std::vector<ChainMap> out;
  std::vector<int> f(static_cast<std::size_t>(n), 0);  // value m = undefined
  for (;;) {
    std::vector<MapPair> pairs;
    bool monotone = true;
    int last = -1;
    for (int x = 0; x < n; ++x) {
      if (f[x] == m) continue;
      if (f[x] < last) monotone = false;
      last = f[x];
      pairs.push_back({x, f[x]});
    }
    if (monotone) out.push_back(ChainMap::make(n, m, pairs));
    int pos = 0;
    while (pos < n && ++f[pos] == m + 1) f[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

/// Class membership straight from the definitions.
inline std::vector<ChainMap> brute_class(ClassId cls, int n) {
  const int m = cls == ClassId::del ? n + 1 : n;
  std::vector<ChainMap> out;
  for (const auto& f : all_order_preserving(n, m)) {
    bool decreasing = true;
    bool has_zero = false;
    for (const auto& p : f.pairs()) {
      decreasing = decreasing && p.image <= p.point;
      has_zero = has_zero || p.point == 0;
    }
    const bool full = static_cast<int>(f.size()) == n;
    bool keep = false;
    switch (cls) {
      case ClassId::pc: keep = decreasing; break;
      case ClassId::c: keep = decreasing && full; break;
      case ClassId::po: keep = true; break;
      case ClassId::o: keep = full; break;
      case ClassId::del: keep = true; break;
      case ClassId::q: keep = decreasing && has_zero; break;
      case ClassId::qp: keep = decreasing && !has_zero; break;
    }
    if (keep) out.push_back(f);
  }
  return out;
}

/// Every string over {D,H,V} ending at (n,n), by plain recursion.
inline std::vector<std::string> all_path_strings(int n) {
  std::vector<std::string> out;
  std::function<void(int, int, std::string&)> rec = [&](int x, int y, std::string& s) {
    if (x == n && y == n) {
      out.push_back(s);
      return;
    }
    for (char c : {'D', 'H', 'V'}) {
      const int nx = x + (c != 'V');
      const int ny = y + (c != 'H');
      if (nx > n || ny > n) continue;
      s.push_back(c);
      rec(nx, ny, s);
      s.pop_back();
    }
  };
  std::string s;
  rec(0, 0, s);
  return out;
}

inline bool string_subdiagonal(const std::string& s) {
  int x = 0;
  int y = 0;
  for (char c : s) {
    x += c != 'V';
    y += c != 'H';
    if (y > x) return false;
  }
  return true;
}

/// D(n,k) by the lattice recurrence on the grid.
inline std::uint64_t delannoy_dp(int n, int k) {
  std::vector<std::vector<std::uint64_t>> d(static_cast<std::size_t>(n) + 1,
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 1, 1));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= k; ++j) d[i][j] = d[i - 1][j] + d[i][j - 1] + d[i - 1][j - 1];
  }
  return d[n][k];
}

/// Pascal's triangle in 64-bit; exact up to n = 62.
inline std::uint64_t pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

/// x(fg) = (xf)g evaluated pointwise through apply().
inline ChainMap compose_pointwise(const ChainMap& f, const ChainMap& g) {
  std::vector<MapPair> pairs;
  for (int x = 0; x < f.dom_size(); ++x) {
    auto fx = f.apply(x);
    if (!fx) continue;
    auto gfx = g.apply(*fx);
    if (gfx) pairs.push_back({x, *gfx});
  }
  return ChainMap::make(f.dom_size(), g.cod_size(), pairs);
}

}  // namespace chainpaths::oracle
