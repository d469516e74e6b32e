#pragma once

// Independent brute-force oracles used by the verification suites and by
// `amodlab reproduce`. Nothing here shares code with the implementations
// it cross-checks (snf, census, element_order).

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "amodlab/snf.hpp"
#include "amodlab/trees.hpp"

namespace amod::oracle {

// Rank over Q by fraction-based Gaussian elimination.
int rational_rank(const SparseColMatrix& m);

// Spine vertex counts per height, by exhaustive enumeration of connected
// subtrees containing the central polygon.
std::map<int, long long> census_by_enumeration(const TreeFamily& f, int max_height);

// All admissible surfaces rooted at `root`, heights 1..max_height.
std::vector<std::set<PolygonAddress>> enumerate_subtrees(const TreeFamily& f,
                                                         const PolygonAddress& root,
                                                         int max_height);

// Order of (t, s) in Z^2 / <(a, -b)>; nullopt = infinite. Brute force.
std::optional<long long> lattice_order(long long t, long long s, long long a, long long b);

// Order of t in Z_r, r >= 1. Brute force.
long long cyclic_order(long long t, long long r);

} // namespace amod::oracle
