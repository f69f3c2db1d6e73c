#pragma once

#include "chainpaths/chain_map.hpp"
#include "chainpaths/lattice_path.hpp"

namespace chainpaths {

// Paths in the n x n square correspond one-to-one with order-preserving partial maps
// {0..n-1} -> {0..n}. Level y of the path carries one H step per point sent to y, then
// leaves the level by V when y is in the domain and by D otherwise. The ordinary classes
// (pc, c, po, o) are sub-bijections: decreasing <-> subdiagonal, full <-> no D step,
// images below n <-> last step not H.

/// Accepts cod_size == dom_size + 1, or cod_size == dom_size (widened first).
LatticePath map_to_path(const ChainMap& m);

/// The result has cod_size == side + 1. Domain points are the levels left by a V step; the
/// nondecreasing list of H-step levels is paired with them positionally.
ChainMap path_to_map(const LatticePath& p);

}  // namespace chainpaths
