#include "chainpaths/bijection.hpp"

#include <vector>

namespace chainpaths {

LatticePath map_to_path(const ChainMap& m) {
  const ChainMap wide = m.cod_size() == m.dom_size() + 1 ? m : m.widened();
  const int n = wide.dom_size();

  LevelProfile profile;
  profile.runs.assign(static_cast<std::size_t>(n) + 1, 0);
  profile.leave.assign(static_cast<std::size_t>(n), Step::diag);
  for (const auto& p : wide.pairs()) {
    ++profile.runs[static_cast<std::size_t>(p.image)];
    profile.leave[static_cast<std::size_t>(p.point)] = Step::vert;
  }
  return from_profile(profile);
}

ChainMap path_to_map(const LatticePath& p) {
  std::vector<int> domain;
  std::vector<int> simage;
  int level = 0;
  for (Step s : p.steps()) {
    switch (s) {
      case Step::horiz: simage.push_back(level); break;
      case Step::vert: domain.push_back(level++); break;
      case Step::diag: ++level; break;
    }
  }
  // #H == #V for every path from (0,0) to (n,n), so the two lists have equal length.
  std::vector<MapPair> pairs;
  pairs.reserve(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) pairs.push_back({domain[i], simage[i]});
  return ChainMap::make(p.side(), p.side() + 1, std::move(pairs));
}

}  // namespace chainpaths
