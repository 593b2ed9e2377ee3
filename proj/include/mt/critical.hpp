#pragma once

#include <utility>
#include <vector>

#include "mt/interleaving.hpp"

namespace mt {

// A value in Delta[P] together with the pair of critical points that witnesses it.
// arrow kind: a = source point, b = target point, d = direction, value = shift(a, b).
// zigzag kind: a = lower vertex, b = upper vertex of the same tree
// (d = forward for T1, backward for T2), value = (f(b) - f(a)) / 2.
struct critical_pair {
  enum class kind_t { arrow, zigzag };
  kind_t kind = kind_t::arrow;
  dir d = dir::forward;
  point a;
  point b;
  height value;

  bool operator==(const critical_pair&) const = default;
};

// Delta(T1, T2) = Delta1 u Delta2 u Delta3 over finite vertices, ascending, deduplicated.
std::vector<height> critical_values(const merge_tree& t1, const merge_tree& t2);

// Finite vertices plus every finite arrow endpoint of p on the respective tree,
// each sorted by the tree's point order.
std::pair<std::vector<point>, std::vector<point>> critical_points(const tree_pair& tp,
                                                                  const partial_interleaving& p);

// Delta[P] = Delta1[P] u Delta2 u Delta3, ascending.
std::vector<height> residual_critical_values(const tree_pair& tp, const partial_interleaving& p);

// Every critical pair whose value equals delta: arrow pairs first, then zigzag pairs,
// in deterministic point order. Throws if delta is not in Delta[P].
std::vector<critical_pair> realizing_pairs(const tree_pair& tp, const partial_interleaving& p,
                                           const height& delta);

bool pair_is_used(const tree_pair& tp, const partial_interleaving& q, const critical_pair& cp);

}  // namespace mt
