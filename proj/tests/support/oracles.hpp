#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "mt/interleaving.hpp"

namespace oracle {

// Connected components of the sublevel set at h on the combinatorial tree,
// counted by BFS over the node adjacency (independent of points_at_height).
inline int sublevel_components(const mt::merge_tree& t, const mt::height& h) {
  const auto& vs = t.finite_vertices();
  std::vector<mt::node_id> in;
  for (mt::node_id v : vs)
    if (t.height_of(v) <= h) in.push_back(v);
  std::vector<char> seen(t.node_count(), 0);
  auto inside = [&](mt::node_id v) {
    return v != t.root() && t.height_of(v) <= h;
  };
  int comps = 0;
  for (mt::node_id s : in) {
    if (seen[s]) continue;
    ++comps;
    std::queue<mt::node_id> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      mt::node_id v = q.front();
      q.pop();
      std::vector<mt::node_id> nbs = t.children_of(v);
      if (v != t.root()) nbs.push_back(*t.parent_of(v));
      for (mt::node_id nb : nbs)
        if (inside(nb) && !seen[nb]) {
          seen[nb] = 1;
          q.push(nb);
        }
    }
  }
  return comps;
}

// Parent-walk descendant test: x1 below x2 iff x2's carrier lies on the carrier
// chain of x1 (with a height check when the carriers coincide).
inline bool descendant_walk(const mt::merge_tree& t, const mt::point& x1, const mt::point& x2) {
  if (x2.is_root()) return true;
  if (x1.is_root()) return false;
  mt::node_id c = x1.carrier;
  if (c == x2.carrier) return x1.h <= x2.h;
  while (c != t.root()) {
    c = *t.parent_of(c);
    if (c == x2.carrier) return true;
  }
  return false;
}

// Flood-fill component count of {cells <= threshold} over an explicit neighbor graph.
inline int flood_fill_components(const std::vector<mt::height>& vals,
                                 const std::vector<std::vector<int>>& neighbors,
                                 const mt::height& threshold) {
  const int n = static_cast<int>(vals.size());
  std::vector<char> seen(n, 0);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s] || vals[s] > threshold) continue;
    ++comps;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int nb : neighbors[v])
        if (!seen[nb] && vals[nb] <= threshold) {
          seen[nb] = 1;
          q.push(nb);
        }
    }
  }
  return comps;
}

inline std::vector<std::vector<int>> series_neighbors(size_t n) {
  std::vector<std::vector<int>> nb(n);
  for (int i = 0; i < static_cast<int>(n); ++i) {
    if (i > 0) nb[i].push_back(i - 1);
    if (i + 1 < static_cast<int>(n)) nb[i].push_back(i + 1);
  }
  return nb;
}

}  // namespace oracle
