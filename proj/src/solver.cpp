#include "mt/solver.hpp"

#include <algorithm>

namespace mt {

int leaf_count(const merge_tree& t) {
  int n = 0;
  for (node_id v : t.finite_vertices())
    if (t.children_of(v).empty()) ++n;
  return n;
}

namespace {

// Candidate reduction. Any complete P-extension with P-residual shift <= delta can
// be normalized by the delta-lift so that every arrow has shift >= delta; an arrow
// whose shift then exceeds delta must lie in a fan of P, which pins its target to a
// P-target. Restricted to the critical points this leaves finitely many targets per
// anchor: the points at height f(v) + delta, plus P-targets at height >= f(v) + delta
// reachable through a fan. Conversely the uniform-shift evaluation of any anchor
// assignment that passes the checks below reconstructs the normalized extension
// exactly, so searching assignments over these candidates decides feasibility.
std::vector<point> candidates_for(const tree_pair& tp, const partial_interleaving& p, dir d,
                                  const point& v, const height& delta) {
  const merge_tree& st = tp.src(d);
  const merge_tree& tt = tp.tgt(d);
  std::vector<point> out = points_at_height(tt, v.h + delta);
  const partial_up_map& constraints = d == dir::forward ? p.fwd : p.bwd;
  for (const auto& c : constraints.arrows) {
    if (!is_descendant(st, c.src, v)) continue;
    if (c.tgt.is_root() || c.tgt.h >= v.h + delta) out.push_back(c.tgt);
  }
  std::sort(out.begin(), out.end(),
            [&](const point& a, const point& b) { return point_less(tt, a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// The global deterministic arrow order within one side: source point order.
void sort_by_point_order(const merge_tree& t, std::vector<point>& pts) {
  std::sort(pts.begin(), pts.end(),
            [&](const point& a, const point& b) { return point_less(t, a, b); });
}

// Uniform-shift evaluation of an anchor assignment: the delta-lift of the canonical
// anchored evaluation. Reproduces the normalized extension between anchors.
point uniform_eval(const tree_pair& tp, const partial_up_map& m, const height& delta,
                   const point& x) {
  if (x.is_root()) return point::root();
  auto a = highest_anchor_at_or_below(tp, m, x);
  if (!a) throw internal_error("uniform_eval: no anchor below point");
  if (a->tgt.is_root()) return point::root();
  return ancestor_at(tp.tgt(m.direction), a->tgt, std::max(x.h + delta, a->tgt.h));
}

struct decide_search {
  const tree_pair& tp;
  const partial_interleaving& p;
  height delta;

  std::vector<point> c1, c2;
  std::vector<std::vector<point>> cand1, cand2;
  std::vector<std::optional<point>> need1, need2;  // extends-P lower bounds
  std::vector<point> a_val, b_val;
  // forward round trips grouped by the backward anchor that decides them
  std::vector<std::vector<int>> obligations;

  bool run() {
    auto [cp1, cp2] = critical_points(tp, p);
    c1 = std::move(cp1);
    c2 = std::move(cp2);
    sort_by_point_order(*tp.t1, c1);
    sort_by_point_order(*tp.t2, c2);

    for (const auto& v : c1) {
      cand1.push_back(candidates_for(tp, p, dir::forward, v, delta));
      need1.push_back(p.fwd.lookup(v));
      if (cand1.back().empty()) return false;
    }
    for (const auto& w : c2) {
      cand2.push_back(candidates_for(tp, p, dir::backward, w, delta));
      need2.push_back(p.bwd.lookup(w));
      if (cand2.back().empty()) return false;
    }
    a_val.resize(c1.size());
    b_val.resize(c2.size());
    return assign_fwd(0);
  }

  bool assign_fwd(size_t i) {
    if (i == c1.size()) return start_bwd();
    const merge_tree& t1 = *tp.t1;
    const merge_tree& t2 = *tp.t2;
    for (const auto& c : cand1[i]) {
      if (need1[i] && !is_descendant(t2, *need1[i], c)) continue;
      bool ok = true;
      for (size_t j = 0; j < i && ok; ++j) {
        if (is_descendant(t1, c1[j], c1[i]) && !is_descendant(t2, a_val[j], c)) ok = false;
        if (is_descendant(t1, c1[i], c1[j]) && !is_descendant(t2, c, a_val[j])) ok = false;
      }
      if (!ok) continue;
      a_val[i] = c;
      if (assign_fwd(i + 1)) return true;
    }
    return false;
  }

  bool start_bwd() {
    obligations.assign(c2.size(), {});
    for (size_t i = 0; i < c1.size(); ++i) {
      if (a_val[i].is_root()) continue;  // maps above everything; round trip is free
      int w0 = highest_c2_below(a_val[i]);
      if (w0 < 0) return false;
      obligations[w0].push_back(static_cast<int>(i));
    }
    return assign_bwd(0);
  }

  int highest_c2_below(const point& y) const {
    int best = -1;
    for (size_t j = 0; j < c2.size(); ++j)
      if (is_descendant(*tp.t2, c2[j], y) && (best < 0 || c2[j].h > c2[best].h))
        best = static_cast<int>(j);
    return best;
  }

  int highest_c1_below(const point& x) const {
    int best = -1;
    for (size_t j = 0; j < c1.size(); ++j)
      if (is_descendant(*tp.t1, c1[j], x) && (best < 0 || c1[j].h > c1[best].h))
        best = static_cast<int>(j);
    return best;
  }

  bool assign_bwd(size_t j) {
    if (j == c2.size()) return true;
    const merge_tree& t1 = *tp.t1;
    const merge_tree& t2 = *tp.t2;
    for (const auto& c : cand2[j]) {
      if (need2[j] && !is_descendant(t1, *need2[j], c)) continue;
      bool ok = true;
      for (size_t k = 0; k < j && ok; ++k) {
        if (is_descendant(t2, c2[k], c2[j]) && !is_descendant(t1, b_val[k], c)) ok = false;
        if (is_descendant(t2, c2[j], c2[k]) && !is_descendant(t1, c, b_val[k])) ok = false;
      }
      for (size_t i = 0; i < c1.size() && ok; ++i) {
        if (is_descendant(t2, a_val[i], c2[j]) && !is_descendant(t1, c1[i], c)) ok = false;
        if (is_descendant(t1, c, c1[i]) && !is_descendant(t2, c2[j], a_val[i])) ok = false;
      }
      // backward round trip at this anchor
      if (ok && !c.is_root()) {
        int v0 = highest_c1_below(c);
        if (v0 < 0) {
          ok = false;
        } else if (!a_val[v0].is_root()) {
          point rt = ancestor_at(t2, a_val[v0], std::max(c.h + delta, a_val[v0].h));
          if (!is_descendant(t2, c2[j], rt)) ok = false;
        }
      }
      // forward round trips that pass through this anchor
      for (int i : obligations[j]) {
        if (!ok) break;
        if (c.is_root()) continue;
        point rt = ancestor_at(t1, c, std::max(a_val[i].h + delta, c.h));
        if (!is_descendant(t1, c1[i], rt)) ok = false;
      }
      if (!ok) continue;
      b_val[j] = c;
      if (assign_bwd(j + 1)) return true;
    }
    return false;
  }
};

}  // namespace

anchored_interleaving assemble_witness(const tree_pair& tp, const std::vector<point>& c1,
                                       const std::vector<point>& a_tgts,
                                       const std::vector<point>& c2,
                                       const std::vector<point>& b_tgts, const height& delta) {
  std::vector<arrow> fwd, bwd;
  for (size_t i = 0; i < c1.size(); ++i) fwd.push_back({c1[i], a_tgts[i]});
  for (size_t j = 0; j < c2.size(); ++j) bwd.push_back({c2[j], b_tgts[j]});
  const partial_up_map base_f = make_up_map(tp, dir::forward, fwd);
  const partial_up_map base_b = make_up_map(tp, dir::backward, bwd);

  // Image points become anchors of the opposite side so that the canonical
  // evaluation reproduces the uniform-shift extension at them.
  auto add_extras = [&](const partial_up_map& images, const partial_up_map& base,
                        std::vector<arrow>& into) {
    for (const auto& a : images.arrows) {
      if (a.tgt.is_root() || base.lookup(a.tgt)) continue;
      bool seen = false;
      for (const auto& e : into)
        if (e.src == a.tgt) seen = true;
      if (!seen) into.push_back({a.tgt, uniform_eval(tp, base, delta, a.tgt)});
    }
  };
  add_extras(base_b, base_f, fwd);
  add_extras(base_f, base_b, bwd);
  return anchored_interleaving{make_up_map(tp, dir::forward, fwd),
                               make_up_map(tp, dir::backward, bwd)};
}

decide_result decide(const tree_pair& tp, const partial_interleaving& p, const height& delta) {
  if (auto e = validate_interleaving(tp, p))
    throw std::invalid_argument("decide: invalid constraint interleaving: " + *e);
  if (delta.is_negative() || delta.is_infinite())
    throw std::invalid_argument("decide: delta must be finite and nonnegative");

  decide_search s{tp, p, delta};
  if (!s.run()) return {false, {}};

  anchored_interleaving w = assemble_witness(tp, s.c1, s.a_val, s.c2, s.b_val, delta);
  if (auto e = verify_complete(tp, w))
    throw internal_error("decide: witness fails verification: " + *e);
  if (!anchored_extends(tp, w, p)) throw internal_error("decide: witness does not extend P");
  if (residual_shift(tp, w, p) > delta)
    throw internal_error("decide: witness residual shift exceeds delta");
  return {true, std::move(w)};
}

distance_result residual_distance(const tree_pair& tp, const partial_interleaving& p) {
  const std::vector<height> values = residual_critical_values(tp, p);
  size_t lo = 0, hi = values.size() - 1;
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (decide(tp, p, values[mid]).feasible)
      hi = mid;
    else
      lo = mid + 1;
  }
  auto r = decide(tp, p, values[lo]);
  if (!r.feasible)
    throw internal_error("residual_distance: infeasible at max Delta[P]; contradicts existence");
  return {values[lo], std::move(r.witness)};
}

distance_result interleaving_distance(const merge_tree& t1, const merge_tree& t2) {
  tree_pair tp{&t1, &t2};
  return residual_distance(tp, partial_interleaving{});
}

anchored_interleaving root_extension(const tree_pair& tp, const partial_interleaving& p) {
  if (auto e = validate_interleaving(tp, p))
    throw std::invalid_argument("root_extension: invalid constraints: " + *e);
  auto [c1, c2] = critical_points(tp, p);
  std::vector<arrow> fwd, bwd;
  for (const auto& v : c1) fwd.push_back({v, point::root()});
  for (const auto& w : c2) bwd.push_back({w, point::root()});
  return anchored_interleaving{make_up_map(tp, dir::forward, fwd),
                               make_up_map(tp, dir::backward, bwd)};
}

// ---------------------------------------------------------------------------
// Independent oracle. Enumerates every assignment of candidates to anchors in
// one height-sorted sequence mixing both sides, filtering with the raw
// definitions only (ancestor preservation, extension of P, cross-condition),
// and tests the round-trip conditions on each complete assignment.

namespace {

struct oracle_slot {
  dir d;
  point anchor;
  std::vector<point> cands;
  std::optional<point> need;
};

struct oracle_search {
  const tree_pair& tp;
  height delta;
  std::vector<oracle_slot> slots;
  std::vector<point> chosen;

  bool enumerate(size_t i) {
    if (i == slots.size()) return round_trips_hold();
    const merge_tree& tt = tp.tgt(slots[i].d);
    const merge_tree& st = tp.src(slots[i].d);
    for (const auto& c : slots[i].cands) {
      if (slots[i].need && !is_descendant(tt, *slots[i].need, c)) continue;
      bool ok = true;
      for (size_t j = 0; j < i && ok; ++j) {
        if (slots[j].d == slots[i].d) {
          if (is_descendant(st, slots[j].anchor, slots[i].anchor) &&
              !is_descendant(tt, chosen[j], c))
            ok = false;
          if (is_descendant(st, slots[i].anchor, slots[j].anchor) &&
              !is_descendant(tt, c, chosen[j]))
            ok = false;
        } else {
          // cross-condition between a forward arrow (x -> fx) and backward (y -> by)
          const arrow f = slots[i].d == dir::forward ? arrow{slots[i].anchor, c}
                                                     : arrow{slots[j].anchor, chosen[j]};
          const arrow b = slots[i].d == dir::forward ? arrow{slots[j].anchor, chosen[j]}
                                                     : arrow{slots[i].anchor, c};
          if (is_descendant(*tp.t2, f.tgt, b.src) && !is_descendant(*tp.t1, f.src, b.tgt))
            ok = false;
          if (is_descendant(*tp.t1, b.tgt, f.src) && !is_descendant(*tp.t2, b.src, f.tgt))
            ok = false;
        }
      }
      if (!ok) continue;
      chosen[i] = c;
      if (enumerate(i + 1)) return true;
    }
    return false;
  }

  bool round_trips_hold() const {
    std::vector<arrow> fa, ba;
    for (size_t i = 0; i < slots.size(); ++i)
      (slots[i].d == dir::forward ? fa : ba).push_back({slots[i].anchor, chosen[i]});
    partial_up_map fm = make_up_map(tp, dir::forward, fa);
    partial_up_map bm = make_up_map(tp, dir::backward, ba);
    for (const auto& a : fm.arrows) {
      point rt = uniform_eval(tp, bm, delta, uniform_eval(tp, fm, delta, a.src));
      if (!is_descendant(*tp.t1, a.src, rt)) return false;
    }
    for (const auto& a : bm.arrows) {
      point rt = uniform_eval(tp, fm, delta, uniform_eval(tp, bm, delta, a.src));
      if (!is_descendant(*tp.t2, a.src, rt)) return false;
    }
    return true;
  }
};

}  // namespace

bool oracle_decide(const tree_pair& tp, const partial_interleaving& p, const height& delta) {
  if (leaf_count(*tp.t1) > 6 || leaf_count(*tp.t2) > 6 || p.arrow_count() > 4)
    throw std::invalid_argument("oracle_decide: instance too large");
  if (auto e = validate_interleaving(tp, p))
    throw std::invalid_argument("oracle_decide: invalid constraint interleaving: " + *e);
  if (delta.is_negative() || delta.is_infinite())
    throw std::invalid_argument("oracle_decide: delta must be finite and nonnegative");

  oracle_search s{tp, delta, {}, {}};
  auto [c1, c2] = critical_points(tp, p);
  for (const auto& v : c1)
    s.slots.push_back({dir::forward, v, candidates_for(tp, p, dir::forward, v, delta),
                       p.fwd.lookup(v)});
  for (const auto& w : c2)
    s.slots.push_back({dir::backward, w, candidates_for(tp, p, dir::backward, w, delta),
                       p.bwd.lookup(w)});
  std::sort(s.slots.begin(), s.slots.end(), [&](const oracle_slot& a, const oracle_slot& b) {
    if (a.anchor.h != b.anchor.h) return a.anchor.h < b.anchor.h;
    if (a.d != b.d) return a.d == dir::forward;
    return point_less(tp.src(a.d), a.anchor, b.anchor);
  });
  for (const auto& sl : s.slots)
    if (sl.cands.empty()) return false;
  s.chosen.resize(s.slots.size());
  return s.enumerate(0);
}

}  // namespace mt
