#include "mt/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace mt {

std::optional<violation> validate(const std::vector<tree_node>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n == 0) return violation{"empty", -1, "tree has no nodes"};

  std::vector<int> seen(n, 0);
  for (const auto& nd : nodes) {
    if (nd.id < 0 || nd.id >= n)
      return violation{"non-dense ids", nd.id, "node ids must be exactly 0..n-1"};
    if (seen[nd.id]++)
      return violation{"non-dense ids", nd.id, "duplicate node id"};
  }

  std::vector<const tree_node*> by_id(n);
  for (const auto& nd : nodes) by_id[nd.id] = &nd;

  node_id root = -1;
  for (int i = 0; i < n; ++i) {
    if (!by_id[i]->parent) {
      if (root >= 0)
        return violation{"multiple roots", i, "more than one parentless node"};
      root = i;
    } else if (*by_id[i]->parent < 0 || *by_id[i]->parent >= n) {
      return violation{"bad parent", i, "parent id out of range"};
    } else if (*by_id[i]->parent == i) {
      return violation{"cycle", i, "node is its own parent"};
    }
  }
  if (root < 0) return violation{"no root", -1, "no parentless node"};
  if (!by_id[root]->h.is_infinite())
    return violation{"root not infinite", root, "the root must have height inf"};

  for (int i = 0; i < n; ++i) {
    if (i == root) continue;
    if (by_id[i]->h.is_infinite())
      return violation{"non-finite height", i, "only the root may have height inf"};
    if (by_id[i]->h.is_negative())
      return violation{"negative height", i, "heights must be nonnegative"};
  }
  if (n == 1) return violation{"no finite vertices", root, "tree has only the root"};

  // acyclicity: every parent walk must reach the root
  for (int i = 0; i < n; ++i) {
    node_id cur = i;
    int steps = 0;
    while (cur != root) {
      cur = *by_id[cur]->parent;
      if (++steps > n) return violation{"cycle", i, "parent walk does not reach the root"};
    }
  }

  for (int i = 0; i < n; ++i) {
    if (i == root) continue;
    node_id p = *by_id[i]->parent;
    if (!(by_id[i]->h < by_id[p]->h))
      return violation{"non-increasing", i, "child height must be strictly below parent height"};
  }

  // Two branches meeting only at infinity would make every interleaving
  // distance infinite; the root must close off a single branch.
  int root_children = 0;
  node_id second = -1;
  for (int i = 0; i < n; ++i)
    if (i != root && *by_id[i]->parent == root && ++root_children > 1) second = i;
  if (root_children > 1)
    return violation{"disconnected", second, "the root at infinity must have exactly one child"};
  return std::nullopt;
}

merge_tree::merge_tree(std::vector<tree_node> nodes) {
  if (auto v = validate(nodes))
    throw std::invalid_argument("invalid merge tree: " + v->code + " (node " +
                                std::to_string(v->node) + "): " + v->message);
  const int n = static_cast<int>(nodes.size());
  raw_ = nodes;
  std::sort(raw_.begin(), raw_.end(), [](const tree_node& a, const tree_node& b) { return a.id < b.id; });
  heights_.resize(n);
  parent_.resize(n);
  children_.assign(n, {});
  for (const auto& nd : raw_) {
    heights_[nd.id] = nd.h;
    if (nd.parent) {
      parent_[nd.id] = *nd.parent;
      children_[*nd.parent].push_back(nd.id);
    } else {
      root_ = nd.id;
      parent_[nd.id] = nd.id;
    }
  }
  for (auto& c : children_) std::sort(c.begin(), c.end());

  dfs_index_.assign(n, -1);
  std::vector<node_id> stack(children_[root_].rbegin(), children_[root_].rend());
  while (!stack.empty()) {
    node_id v = stack.back();
    stack.pop_back();
    dfs_index_[v] = static_cast<int>(dfs_order_.size());
    dfs_order_.push_back(v);
    for (auto it = children_[v].rbegin(); it != children_[v].rend(); ++it) stack.push_back(*it);
  }
}

bool merge_tree::valid_point(const point& x) const {
  if (x.is_root()) return x.h.is_infinite();
  if (x.carrier < 0 || x.carrier >= node_count() || x.carrier == root_) return false;
  if (x.h.is_infinite()) return false;
  return x.h >= heights_[x.carrier] && x.h < edge_top(x.carrier);
}

point merge_tree::normalized(node_id base, const height& h) const {
  if (h.is_infinite()) return point::root();
  node_id c = base;
  while (c != root_ && h >= edge_top(c)) c = parent_[c];
  if (c == root_) return point::root();  // unreachable for finite h
  if (h < heights_[c]) throw std::invalid_argument("point below its carrier");
  return point::at(c, h);
}

point ancestor_at(const merge_tree& t, const point& x, const height& h) {
  if (x.is_root()) {
    if (!h.is_infinite()) throw std::invalid_argument("ancestor_at: root has no finite ancestor");
    return point::root();
  }
  if (h < x.h) throw std::invalid_argument("ancestor_at: target height below the point");
  if (h.is_infinite()) return point::root();
  return t.normalized(x.carrier, h);
}

bool is_descendant(const merge_tree& t, const point& x1, const point& x2) {
  if (x2.is_root()) return true;
  if (x1.is_root()) return false;
  if (x1.h > x2.h) return false;
  return ancestor_at(t, x1, x2.h) == x2;
}

std::vector<point> points_at_height(const merge_tree& t, const height& h) {
  if (h.is_infinite()) throw std::invalid_argument("points_at_height: h must be finite");
  std::vector<point> out;
  for (node_id v : t.finite_vertices())
    if (t.height_of(v) <= h && h < t.edge_top(v)) out.push_back(point::at(v, h));
  return out;  // finite_vertices() is already DFS-ordered
}

bool point_less(const merge_tree& t, const point& a, const point& b) {
  if (a.is_root() || b.is_root()) return !a.is_root() && b.is_root();
  int da = t.dfs_index(a.carrier), db = t.dfs_index(b.carrier);
  if (da != db) return da < db;
  return a.h < b.h;
}

}  // namespace mt
