#include "mt/ingest.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mt {

namespace {

struct sweep_node {
  height h;
  int parent = -1;
  bool alive = true;
  bool internal = false;
  std::vector<int> children;
};

class sweep {
 public:
  explicit sweep(size_t cells) : comp_(cells, -1), top_(cells, -1) {}

  int find(int c) {
    int r = c;
    while (comp_[r] != r) r = comp_[r];
    while (comp_[c] != r) c = std::exchange(comp_[c], r);
    return r;
  }

  bool active(int c) const { return comp_[c] >= 0; }

  void activate(int c, const height& v) {
    comp_[c] = c;
    top_[c] = new_node(v, false);
  }

  // Attach a fresh cell to an existing component.
  void join(int c, int into) { comp_[c] = find(into); }

  // Merge the components of a and b at value v. Tops strictly below v become
  // children of the merge vertex; an internal top at v is reused as a multi-way
  // vertex; a leaf top at v is a zero-persistence minimum and is dropped.
  void merge(int a, int b, const height& v) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return;
    int ta = top_[ra], tb = top_[rb];
    int saddle = -1;
    std::vector<int> kids;
    std::vector<int> flat_leaves;
    for (int t : {ta, tb}) {
      if (nodes_[t].h == v) {
        if (nodes_[t].internal) {
          if (saddle < 0) {
            saddle = t;
          } else {
            for (int ch : nodes_[t].children) set_parent(ch, saddle);
            nodes_[t].alive = false;
          }
        } else {
          flat_leaves.push_back(t);
        }
      } else {
        kids.push_back(t);
      }
    }
    int top;
    if (saddle >= 0) {
      for (int t : flat_leaves) nodes_[t].alive = false;
      for (int t : kids) set_parent(t, saddle);
      top = saddle;
    } else if (kids.size() == 2) {
      top = new_node(v, true);
      for (int t : kids) set_parent(t, top);
    } else if (kids.size() == 1) {
      for (int t : flat_leaves) nodes_[t].alive = false;
      top = kids[0];
    } else {
      nodes_[flat_leaves[1]].alive = false;
      top = flat_leaves[0];
    }
    comp_[rb] = ra;
    top_[find(ra)] = top;
  }

  merge_tree finish() {
    std::vector<int> remap(nodes_.size(), -1);
    std::vector<tree_node> out;
    for (size_t i = 0; i < nodes_.size(); ++i) {
      if (!nodes_[i].alive) continue;
      remap[i] = static_cast<int>(out.size());
      out.push_back({static_cast<int>(out.size()), nodes_[i].h, std::nullopt});
    }
    node_id root = static_cast<node_id>(out.size());
    for (size_t i = 0; i < nodes_.size(); ++i) {
      if (!nodes_[i].alive) continue;
      out[remap[i]].parent = nodes_[i].parent >= 0 ? remap[nodes_[i].parent] : root;
    }
    out.push_back({root, height::infinity(), std::nullopt});
    out[root].parent = std::nullopt;
    return merge_tree(std::move(out));
  }

 private:
  int new_node(const height& v, bool internal) {
    nodes_.push_back({v, -1, true, internal, {}});
    return static_cast<int>(nodes_.size() - 1);
  }

  void set_parent(int child, int parent) {
    nodes_[child].parent = parent;
    nodes_[parent].children.push_back(child);
  }

  std::vector<sweep_node> nodes_;
  std::vector<int> comp_;
  std::vector<int> top_;
};

merge_tree sweep_cells(const std::vector<height>& vals,
                       const std::vector<std::vector<int>>& neighbors) {
  for (const auto& v : vals) {
    if (v.is_infinite()) throw std::invalid_argument("ingest: infinite value");
    if (v.is_negative()) throw std::invalid_argument("ingest: negative value");
  }
  std::vector<int> order(vals.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });

  sweep s(vals.size());
  for (int c : order) {
    int first = -1;
    for (int nb : neighbors[c]) {
      if (!s.active(nb)) continue;
      if (first < 0)
        first = nb;
      else
        s.merge(first, nb, vals[c]);
    }
    if (first < 0)
      s.activate(c, vals[c]);
    else
      s.join(c, first);
  }
  return s.finish();
}

}  // namespace

merge_tree merge_tree_from_series(const std::vector<height>& values) {
  if (values.empty()) throw std::invalid_argument("ingest: empty series");
  std::vector<std::vector<int>> nb(values.size());
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    if (i > 0) nb[i].push_back(i - 1);
    if (i + 1 < static_cast<int>(values.size())) nb[i].push_back(i + 1);
  }
  return sweep_cells(values, nb);
}

merge_tree merge_tree_from_grid(const std::vector<std::vector<height>>& grid, int connectivity) {
  if (grid.empty() || grid[0].empty()) throw std::invalid_argument("ingest: empty grid");
  if (connectivity != 4 && connectivity != 8)
    throw std::invalid_argument("ingest: connectivity must be 4 or 8");
  const int rows = static_cast<int>(grid.size());
  const int cols = static_cast<int>(grid[0].size());
  for (const auto& row : grid)
    if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("ingest: ragged grid");

  std::vector<height> vals;
  vals.reserve(static_cast<size_t>(rows) * cols);
  for (const auto& row : grid)
    for (const auto& v : row) vals.push_back(v);

  auto idx = [&](int r, int c) { return r * cols + c; };
  std::vector<std::vector<int>> nb(vals.size());
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          if (connectivity == 4 && dr != 0 && dc != 0) continue;
          int r2 = r + dr, c2 = c + dc;
          if (r2 < 0 || r2 >= rows || c2 < 0 || c2 >= cols) continue;
          nb[idx(r, c)].push_back(idx(r2, c2));
        }
      }
    }
  }
  return sweep_cells(vals, nb);
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::string line = trim(text.substr(pos, nl - pos));
    if (!line.empty()) out.push_back(line);
    pos = nl + 1;
  }
  return out;
}

}  // namespace

std::vector<height> parse_series_csv(const std::string& text) {
  std::vector<height> out;
  for (const auto& line : split_lines(text)) out.push_back(height::parse(line));
  return out;
}

std::vector<std::vector<height>> parse_grid_csv(const std::string& text) {
  std::vector<std::vector<height>> out;
  for (const auto& line : split_lines(text)) {
    std::vector<height> row;
    size_t pos = 0;
    while (pos <= line.size()) {
      size_t c = line.find(',', pos);
      if (c == std::string::npos) c = line.size();
      std::string cell = trim(line.substr(pos, c - pos));
      if (!cell.empty()) row.push_back(height::parse(cell));
      pos = c + 1;
    }
    if (!row.empty()) out.push_back(std::move(row));
  }
  return out;
}

}  // namespace mt
