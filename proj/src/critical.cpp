#include "mt/critical.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mt {

namespace {

std::vector<height> vertex_heights(const merge_tree& t) {
  std::vector<height> hs;
  for (node_id v : t.finite_vertices()) hs.push_back(t.height_of(v));
  return hs;
}

void add_half_diffs(const std::vector<height>& hs, std::set<height>& out) {
  for (size_t i = 0; i < hs.size(); ++i)
    for (size_t j = i; j < hs.size(); ++j) out.insert(abs_diff(hs[i], hs[j]).half());
}

std::vector<height> sorted(const std::set<height>& s) { return {s.begin(), s.end()}; }

void sort_points(const merge_tree& t, std::vector<point>& pts) {
  std::sort(pts.begin(), pts.end(),
            [&](const point& a, const point& b) { return point_less(t, a, b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

std::vector<height> critical_values(const merge_tree& t1, const merge_tree& t2) {
  std::set<height> out;
  auto h1 = vertex_heights(t1), h2 = vertex_heights(t2);
  for (const auto& a : h1)
    for (const auto& b : h2) out.insert(abs_diff(a, b));
  add_half_diffs(h1, out);
  add_half_diffs(h2, out);
  return sorted(out);
}

std::pair<std::vector<point>, std::vector<point>> critical_points(
    const tree_pair& tp, const partial_interleaving& p) {
  std::vector<point> c1, c2;
  for (node_id v : tp.t1->finite_vertices()) c1.push_back(tp.t1->vertex_point(v));
  for (node_id w : tp.t2->finite_vertices()) c2.push_back(tp.t2->vertex_point(w));
  // The root at infinity never becomes a critical point: height differences
  // against it are undefined.
  for (const auto& a : p.fwd.arrows) {
    c1.push_back(a.src);
    if (!a.tgt.is_root()) c2.push_back(a.tgt);
  }
  for (const auto& a : p.bwd.arrows) {
    c2.push_back(a.src);
    if (!a.tgt.is_root()) c1.push_back(a.tgt);
  }
  sort_points(*tp.t1, c1);
  sort_points(*tp.t2, c2);
  return {std::move(c1), std::move(c2)};
}

std::vector<height> residual_critical_values(const tree_pair& tp,
                                             const partial_interleaving& p) {
  auto [c1, c2] = critical_points(tp, p);
  std::set<height> out;
  for (const auto& x : c1)
    for (const auto& y : c2) out.insert(abs_diff(x.h, y.h));
  add_half_diffs(vertex_heights(*tp.t1), out);
  add_half_diffs(vertex_heights(*tp.t2), out);
  return sorted(out);
}

std::vector<critical_pair> realizing_pairs(const tree_pair& tp, const partial_interleaving& p,
                                           const height& delta) {
  auto values = residual_critical_values(tp, p);
  if (!std::binary_search(values.begin(), values.end(), delta))
    throw std::invalid_argument("realizing_pairs: not a critical value");

  std::vector<critical_pair> out;
  auto [c1, c2] = critical_points(tp, p);
  for (const auto& v : c1)
    for (const auto& w : c2)
      if (v.h <= w.h && w.h - v.h == delta)
        out.push_back({critical_pair::kind_t::arrow, dir::forward, v, w, delta});
  for (const auto& w : c2)
    for (const auto& v : c1)
      if (w.h <= v.h && v.h - w.h == delta)
        out.push_back({critical_pair::kind_t::arrow, dir::backward, w, v, delta});

  auto zigzags = [&](const merge_tree& t, dir d) {
    for (node_id lo : t.finite_vertices())
      for (node_id hi : t.finite_vertices())
        if (t.height_of(lo) <= t.height_of(hi) &&
            (t.height_of(hi) - t.height_of(lo)).half() == delta)
          out.push_back({critical_pair::kind_t::zigzag, d, t.vertex_point(lo),
                         t.vertex_point(hi), delta});
  };
  zigzags(*tp.t1, dir::forward);
  zigzags(*tp.t2, dir::backward);
  return out;
}

bool pair_is_used(const tree_pair& tp, const partial_interleaving& q, const critical_pair& cp) {
  if (cp.kind == critical_pair::kind_t::arrow) {
    const partial_up_map& m = cp.d == dir::forward ? q.fwd : q.bwd;
    auto t = m.lookup(cp.a);
    return t && *t == cp.b;
  }
  // zigzag (v1, v2) in the tree named by cp.d: out-map sends v1 to a point y at
  // height f(v1) + value and the return map sends y back exactly to v2.
  const partial_up_map& outm = cp.d == dir::forward ? q.fwd : q.bwd;
  const partial_up_map& backm = cp.d == dir::forward ? q.bwd : q.fwd;
  auto y = outm.lookup(cp.a);
  if (!y || y->is_root() || !(y->h == cp.a.h + cp.value)) return false;
  auto back = backm.lookup(*y);
  (void)tp;
  return back && *back == cp.b;
}

}  // namespace mt
