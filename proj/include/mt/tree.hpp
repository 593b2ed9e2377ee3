#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mt/height.hpp"

namespace mt {

using node_id = int;

struct tree_node {
  node_id id = 0;
  height h;
  std::optional<node_id> parent;
};

struct violation {
  std::string code;  // names the violated invariant
  node_id node = -1;
  std::string message;
};

// Checks all merge-tree invariants on a raw node list; reports the first violation.
std::optional<violation> validate(const std::vector<tree_node>& nodes);

// A location on the topological realization: carrier is the lower endpoint of
// the edge the point lies on. carrier == -1 encodes the root at +infinity.
struct point {
  node_id carrier = -1;
  height h = height::infinity();

  bool is_root() const { return carrier < 0; }
  static point root() { return point{}; }
  static point at(node_id c, height hh) { return point{c, std::move(hh)}; }
  bool operator==(const point&) const = default;
};

class merge_tree {
 public:
  // Throws std::invalid_argument if validate() reports a violation.
  explicit merge_tree(std::vector<tree_node> nodes);

  int node_count() const { return static_cast<int>(heights_.size()); }
  node_id root() const { return root_; }
  const height& height_of(node_id v) const { return heights_[v]; }
  std::optional<node_id> parent_of(node_id v) const {
    return v == root_ ? std::nullopt : std::optional<node_id>(parent_[v]);
  }
  const std::vector<node_id>& children_of(node_id v) const { return children_[v]; }

  // Finite vertices in deterministic DFS order (children visited by ascending id).
  const std::vector<node_id>& finite_vertices() const { return dfs_order_; }
  int dfs_index(node_id v) const { return dfs_index_[v]; }

  point vertex_point(node_id v) const { return point::at(v, heights_[v]); }

  // Upper height of the edge whose lower endpoint is v (parent height; +inf on the root edge).
  const height& edge_top(node_id v) const { return heights_[parent_[v]]; }

  bool valid_point(const point& x) const;
  // Normalizes (base, h) to the carrier whose edge interval [f(c), f(parent(c))) contains h.
  point normalized(node_id base, const height& h) const;

  const std::vector<tree_node>& nodes() const { return raw_; }

 private:
  std::vector<tree_node> raw_;
  std::vector<height> heights_;
  std::vector<node_id> parent_;  // parent_[root_] == root_
  std::vector<std::vector<node_id>> children_;
  std::vector<node_id> dfs_order_;
  std::vector<int> dfs_index_;
  node_id root_ = -1;
};

// The unique ancestor of x at height h. Requires h >= height(x); h == +inf gives the root point.
point ancestor_at(const merge_tree& t, const point& x, const height& h);

// x1 ⪯ x2: an f-monotone path from x1 up to x2 exists.
bool is_descendant(const merge_tree& t, const point& x1, const point& x2);

// One point per edge whose height interval contains finite h, in DFS order of carriers.
std::vector<point> points_at_height(const merge_tree& t, const height& h);

// Deterministic total order on points of one tree: (dfs index of carrier, height); root last.
bool point_less(const merge_tree& t, const point& a, const point& b);

}  // namespace mt
