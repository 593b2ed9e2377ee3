#include "mt/interleaving.hpp"

#include <algorithm>
#include <stdexcept>

namespace mt {

height shift(const arrow& a) { return a.tgt.h - a.src.h; }

std::optional<point> partial_up_map::lookup(const point& src) const {
  for (const auto& a : arrows)
    if (a.src == src) return a.tgt;
  return std::nullopt;
}

partial_up_map make_up_map(const tree_pair& tp, dir d, std::vector<arrow> arrows) {
  const merge_tree& st = tp.src(d);
  std::sort(arrows.begin(), arrows.end(),
            [&](const arrow& a, const arrow& b) { return point_less(st, a.src, b.src); });
  for (size_t i = 1; i < arrows.size(); ++i)
    if (arrows[i].src == arrows[i - 1].src)
      throw std::invalid_argument("up-map: duplicate source");
  return partial_up_map{d, std::move(arrows)};
}

partial_interleaving make_interleaving(const tree_pair& tp, partial_up_map fwd,
                                       partial_up_map bwd) {
  (void)tp;
  if (fwd.direction != dir::forward || bwd.direction != dir::backward)
    throw std::invalid_argument("interleaving: wrong map directions");
  return partial_interleaving{std::move(fwd), std::move(bwd)};
}

std::optional<std::string> validate_up_map(const tree_pair& tp, const partial_up_map& m) {
  const merge_tree& st = tp.src(m.direction);
  const merge_tree& tt = tp.tgt(m.direction);
  for (const auto& a : m.arrows) {
    if (a.src.is_root()) return "arrow source is the root at infinity";
    if (!st.valid_point(a.src)) return "arrow source is not a point of the source tree";
    if (!tt.valid_point(a.tgt)) return "arrow target is not a point of the target tree";
    if (a.src.h > a.tgt.h) return "arrow target below its source";
  }
  for (size_t i = 0; i < m.arrows.size(); ++i) {
    for (size_t j = 0; j < m.arrows.size(); ++j) {
      if (i == j) continue;
      if (m.arrows[i].src == m.arrows[j].src) return "duplicate source";
      if (is_descendant(st, m.arrows[i].src, m.arrows[j].src) &&
          !is_descendant(tt, m.arrows[i].tgt, m.arrows[j].tgt))
        return "ancestor preservation violated";
    }
  }
  return std::nullopt;
}

namespace {

std::optional<std::string> check_cross(const tree_pair& tp, const partial_up_map& fwd,
                                       const partial_up_map& bwd) {
  for (const auto& fa : fwd.arrows) {
    for (const auto& ba : bwd.arrows) {
      // fa: x -> phi(x) in T2, ba: y -> psi(y) in T1
      if (is_descendant(*tp.t2, fa.tgt, ba.src) && !is_descendant(*tp.t1, fa.src, ba.tgt))
        return "cross-condition violated: phi(x) below y but psi(y) not above x";
      if (is_descendant(*tp.t1, ba.tgt, fa.src) && !is_descendant(*tp.t2, ba.src, fa.tgt))
        return "cross-condition violated: psi(y) below x but phi(x) not above y";
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> validate_interleaving(const tree_pair& tp,
                                                 const partial_interleaving& p) {
  if (p.fwd.direction != dir::forward || p.bwd.direction != dir::backward)
    return "wrong map directions";
  if (auto e = validate_up_map(tp, p.fwd)) return "forward map: " + *e;
  if (auto e = validate_up_map(tp, p.bwd)) return "backward map: " + *e;
  return check_cross(tp, p.fwd, p.bwd);
}

height map_shift(const partial_up_map& m) {
  height best(0);
  for (const auto& a : m.arrows) best = std::max(best, shift(a));
  return best;
}

height interleaving_shift(const partial_interleaving& p) {
  return std::max(map_shift(p.fwd), map_shift(p.bwd));
}

partial_up_map lift_map(const tree_pair& tp, const partial_up_map& m, const height& delta) {
  if (delta.is_negative() || delta.is_infinite())
    throw std::invalid_argument("lift: delta must be finite and nonnegative");
  const merge_tree& tt = tp.tgt(m.direction);
  partial_up_map out{m.direction, {}};
  out.arrows.reserve(m.arrows.size());
  for (const auto& a : m.arrows)
    out.arrows.push_back({a.src, ancestor_at(tt, a.tgt, std::max(a.src.h + delta, a.tgt.h))});
  return out;
}

partial_interleaving lift_interleaving(const tree_pair& tp, const partial_interleaving& p,
                                       const height& delta) {
  return partial_interleaving{lift_map(tp, p.fwd, delta), lift_map(tp, p.bwd, delta)};
}

anchored_interleaving lift_anchored(const tree_pair& tp, const anchored_interleaving& i,
                                    const height& delta) {
  return anchored_interleaving{lift_map(tp, i.fwd, delta), lift_map(tp, i.bwd, delta)};
}

bool arrow_extends(const tree_pair& tp, dir d, const arrow& a, const arrow& b) {
  return a.src == b.src && is_descendant(tp.tgt(d), b.tgt, a.tgt);
}

bool arrow_uses(const arrow& a, const arrow& b) { return a.src == b.src && a.tgt == b.tgt; }

bool map_extends(const tree_pair& tp, const partial_up_map& larger,
                 const partial_up_map& smaller) {
  if (larger.direction != smaller.direction) return false;
  const merge_tree& tt = tp.tgt(larger.direction);
  for (const auto& b : smaller.arrows) {
    auto t = larger.lookup(b.src);
    if (!t || !is_descendant(tt, b.tgt, *t)) return false;
  }
  return true;
}

bool map_uses(const partial_up_map& larger, const partial_up_map& smaller) {
  for (const auto& b : smaller.arrows) {
    auto t = larger.lookup(b.src);
    if (!t || !(*t == b.tgt)) return false;
  }
  return true;
}

bool interleaving_extends(const tree_pair& tp, const partial_interleaving& larger,
                          const partial_interleaving& smaller) {
  return map_extends(tp, larger.fwd, smaller.fwd) && map_extends(tp, larger.bwd, smaller.bwd);
}

bool interleaving_uses(const partial_interleaving& larger, const partial_interleaving& smaller) {
  return map_uses(larger.fwd, smaller.fwd) && map_uses(larger.bwd, smaller.bwd);
}

bool anchored_extends(const tree_pair& tp, const anchored_interleaving& i,
                      const partial_interleaving& p) {
  for (dir d : {dir::forward, dir::backward}) {
    const merge_tree& tt = tp.tgt(d);
    for (const auto& b : (d == dir::forward ? p.fwd : p.bwd).arrows)
      if (!is_descendant(tt, b.tgt, eval(tp, i, d, b.src))) return false;
  }
  return true;
}

bool in_fan(const tree_pair& tp, const arrow& a, const partial_up_map& phi) {
  const merge_tree& st = tp.src(phi.direction);
  for (const auto& f : phi.arrows)
    if (a.tgt == f.tgt && is_descendant(st, f.src, a.src) && a.src.h <= f.tgt.h) return true;
  return false;
}

height residual_shift(const tree_pair& tp, const arrow& a, const partial_up_map& phi) {
  return in_fan(tp, a, phi) ? height(0) : shift(a);
}

height residual_shift(const tree_pair& tp, const partial_up_map& m, const partial_up_map& phi) {
  height best(0);
  for (const auto& a : m.arrows) best = std::max(best, residual_shift(tp, a, phi));
  return best;
}

height residual_shift(const tree_pair& tp, const partial_interleaving& q,
                      const partial_interleaving& p) {
  return std::max(residual_shift(tp, q.fwd, p.fwd), residual_shift(tp, q.bwd, p.bwd));
}

height residual_shift(const tree_pair& tp, const anchored_interleaving& i,
                      const partial_interleaving& p) {
  // Eval above an anchor v only shortens arrows or stays inside the same fan, so
  // the supremum over all points is attained at the anchors.
  return std::max(residual_shift(tp, i.fwd, p.fwd), residual_shift(tp, i.bwd, p.bwd));
}

partial_interleaving restriction(const tree_pair& tp, const partial_interleaving& p,
                                 const std::vector<point>& s1, const std::vector<point>& s2) {
  auto restrict_side = [&](const partial_up_map& m, const std::vector<point>& s) {
    partial_up_map out{m.direction, {}};
    for (const auto& x : s) {
      auto t = m.lookup(x);
      if (!t) throw std::invalid_argument("restriction: point not in the map domain");
      out.arrows.push_back({x, *t});
    }
    return make_up_map(tp, m.direction, std::move(out.arrows));
  };
  return partial_interleaving{restrict_side(p.fwd, s1), restrict_side(p.bwd, s2)};
}

partial_interleaving relative_difference(const tree_pair& tp, const partial_interleaving& p,
                                         const partial_interleaving& q) {
  (void)tp;
  auto diff_side = [](const partial_up_map& a, const partial_up_map& b) {
    partial_up_map out{a.direction, {}};
    for (const auto& ar : a.arrows) {
      auto t = b.lookup(ar.src);
      if (!t || !(*t == ar.tgt)) out.arrows.push_back(ar);
    }
    return out;
  };
  return partial_interleaving{diff_side(p.fwd, q.fwd), diff_side(p.bwd, q.bwd)};
}

std::optional<arrow> highest_anchor_at_or_below(const tree_pair& tp, const partial_up_map& m,
                                                const point& x) {
  const merge_tree& st = tp.src(m.direction);
  const arrow* best = nullptr;
  for (const auto& a : m.arrows) {
    if (!is_descendant(st, a.src, x)) continue;
    if (!best || a.src.h > best->src.h) best = &a;
  }
  if (!best) return std::nullopt;
  return *best;
}

point eval(const tree_pair& tp, const anchored_interleaving& i, dir d, const point& x) {
  if (x.is_root()) return point::root();
  const partial_up_map& m = i.side(d);
  auto anchor = highest_anchor_at_or_below(tp, m, x);
  if (!anchor) throw std::invalid_argument("eval: point has no anchor descendant");
  if (anchor->tgt.is_root()) return point::root();
  return ancestor_at(tp.tgt(d), anchor->tgt, std::max(x.h, anchor->tgt.h));
}

std::optional<std::string> verify_complete(const tree_pair& tp, const anchored_interleaving& i) {
  if (i.fwd.direction != dir::forward || i.bwd.direction != dir::backward)
    return "wrong map directions";
  if (auto e = validate_up_map(tp, i.fwd)) return "forward anchors: " + *e;
  if (auto e = validate_up_map(tp, i.bwd)) return "backward anchors: " + *e;
  for (node_id v : tp.t1->finite_vertices())
    if (!i.fwd.lookup(tp.t1->vertex_point(v)))
      return "forward anchors miss vertex " + std::to_string(v);
  for (node_id w : tp.t2->finite_vertices())
    if (!i.bwd.lookup(tp.t2->vertex_point(w)))
      return "backward anchors miss vertex " + std::to_string(w);
  if (auto e = check_cross(tp, i.fwd, i.bwd)) return *e;
  for (const auto& a : i.fwd.arrows) {
    point back = eval(tp, i, dir::backward, eval(tp, i, dir::forward, a.src));
    if (!is_descendant(*tp.t1, a.src, back))
      return "round trip fails at a forward anchor source";
  }
  for (const auto& a : i.bwd.arrows) {
    point back = eval(tp, i, dir::forward, eval(tp, i, dir::backward, a.src));
    if (!is_descendant(*tp.t2, a.src, back))
      return "round trip fails at a backward anchor source";
  }
  return std::nullopt;
}

bool is_delta_compatible(const tree_pair& tp, const anchored_interleaving& i,
                         const height& delta) {
  if (delta.is_negative() || delta.is_infinite())
    throw std::invalid_argument("is_delta_compatible: delta must be finite and nonnegative");
  for (dir d : {dir::forward, dir::backward})
    for (const auto& a : i.side(d).arrows)
      if (!(shift(a) == delta)) return false;
  // With uniform anchor shifts, the represented compatible pair moves every point
  // up by exactly delta; the round trip must land at an{.}{f + 2*delta}.
  for (dir d : {dir::forward, dir::backward}) {
    const merge_tree& st = tp.src(d);
    const partial_up_map& back = i.side(opposite(d));
    for (const auto& a : i.side(d).arrows) {
      auto w0 = highest_anchor_at_or_below(tp, back, a.tgt);
      if (!w0) return false;
      point rt = ancestor_at(st, w0->tgt, a.src.h + delta + delta);
      if (!is_descendant(st, a.src, rt)) return false;
    }
  }
  return true;
}

}  // namespace mt
