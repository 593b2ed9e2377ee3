#include "mt/locally_correct.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace mt {

bool is_augmentation(const tree_pair& tp, const partial_interleaving& p,
                     const partial_interleaving& q) {
  if (!interleaving_extends(tp, q, p))
    throw std::invalid_argument("is_augmentation: Q does not extend P");
  const height rp = residual_distance(tp, p).value;
  if (residual_shift(tp, q, p) > rp) return false;
  return residual_distance(tp, q).value < rp;
}

namespace {

// Union with per-source dedup keeping the higher target.
partial_up_map merge_keep_higher(const tree_pair& tp, const partial_up_map& base,
                                 const std::vector<arrow>& extra) {
  const merge_tree& tt = tp.tgt(base.direction);
  std::vector<arrow> arrows = base.arrows;
  for (const auto& e : extra) {
    bool found = false;
    for (auto& a : arrows) {
      if (a.src == e.src) {
        found = true;
        if (is_descendant(tt, a.tgt, e.tgt)) a.tgt = e.tgt;
        break;
      }
    }
    if (!found) arrows.push_back(e);
  }
  return make_up_map(tp, base.direction, std::move(arrows));
}

std::vector<arrow> arrows_at_residual(const tree_pair& tp, const partial_up_map& anchors,
                                      const partial_up_map& constraint, const height& value) {
  std::vector<arrow> out;
  for (const auto& a : anchors.arrows)
    if (residual_shift(tp, a, constraint) == value) out.push_back(a);
  return out;
}

}  // namespace

partial_interleaving find_augmentation(const tree_pair& tp, const partial_interleaving& p,
                                       const height& delta_star,
                                       const anchored_interleaving& w) {
  if (delta_star.is_zero() || delta_star.is_negative() || delta_star.is_infinite())
    throw std::invalid_argument("find_augmentation: resdist must be positive");
  partial_interleaving q{
      merge_keep_higher(tp, p.fwd, arrows_at_residual(tp, w.fwd, p.fwd, delta_star)),
      merge_keep_higher(tp, p.bwd, arrows_at_residual(tp, w.bwd, p.bwd, delta_star))};
  if (auto e = validate_interleaving(tp, q))
    throw internal_error("find_augmentation: invalid augmentation: " + *e);
  if (!interleaving_extends(tp, q, p))
    throw internal_error("find_augmentation: result does not extend P");
  return q;
}

namespace {

// Remove one arrow; if its source is constrained by p, fall back to p's arrow so
// the result still extends p.
partial_interleaving drop_arrow(const tree_pair& tp, const partial_interleaving& p,
                                const partial_interleaving& q, dir d, const arrow& victim) {
  partial_interleaving out = q;
  partial_up_map& m = d == dir::forward ? out.fwd : out.bwd;
  const partial_up_map& pm = d == dir::forward ? p.fwd : p.bwd;
  std::vector<arrow> arrows;
  for (const auto& a : m.arrows) {
    if (a == victim) {
      if (auto keep = pm.lookup(a.src)) arrows.push_back({a.src, *keep});
    } else {
      arrows.push_back(a);
    }
  }
  m = make_up_map(tp, d, std::move(arrows));
  return out;
}

bool arrow_in(const partial_up_map& m, const arrow& a) {
  auto t = m.lookup(a.src);
  return t && *t == a.tgt;
}

}  // namespace

partial_interleaving minimize_augmentation(const tree_pair& tp, const partial_interleaving& p,
                                           partial_interleaving q) {
  if (!is_augmentation(tp, p, q))
    throw std::invalid_argument("minimize_augmentation: Q is not a P-augmentation");
  const height rp = residual_distance(tp, p).value;

  bool changed = true;
  while (changed) {
    changed = false;
    for (dir d : {dir::forward, dir::backward}) {
      const partial_up_map& pm = d == dir::forward ? p.fwd : p.bwd;
      bool removed = true;
      while (removed) {
        removed = false;
        const partial_up_map& qm = d == dir::forward ? q.fwd : q.bwd;
        for (const auto& a : qm.arrows) {
          if (arrow_in(pm, a)) continue;
          partial_interleaving cand = drop_arrow(tp, p, q, d, a);
          if (residual_shift(tp, cand, p) <= rp && residual_distance(tp, cand).value < rp) {
            q = std::move(cand);
            removed = true;
            changed = true;
            break;
          }
        }
      }
    }
  }

  // Minimal augmentations provably consist of resdist-shift arrows along realizing
  // critical pairs; a gap between greedy removal-minimality and that
  // characterization must fail loudly rather than silently.
  partial_interleaving diff = relative_difference(tp, q, p);
  for (dir d : {dir::forward, dir::backward})
    for (const auto& a : (d == dir::forward ? diff.fwd : diff.bwd).arrows)
      if (!(shift(a) == rp))
        throw internal_error("minimize_augmentation: bottleneck arrow shift != resdist_P");

  std::vector<critical_pair> used;
  for (const auto& cp : realizing_pairs(tp, p, rp))
    if (pair_is_used(tp, diff, cp)) used.push_back(cp);
  for (dir d : {dir::forward, dir::backward}) {
    for (const auto& a : (d == dir::forward ? diff.fwd : diff.bwd).arrows) {
      bool covered = false;
      for (const auto& cp : used) {
        if (cp.kind == critical_pair::kind_t::arrow) {
          if (cp.d == d && cp.a == a.src && cp.b == a.tgt) covered = true;
        } else {
          const partial_up_map& outm = cp.d == dir::forward ? diff.fwd : diff.bwd;
          auto y = outm.lookup(cp.a);
          if (!y) continue;
          if (cp.d == d && a.src == cp.a && a.tgt == *y) covered = true;
          if (cp.d == opposite(d) && a.src == *y && a.tgt == cp.b) covered = true;
        }
      }
      if (!covered)
        throw internal_error("minimize_augmentation: bottleneck arrow not on a realizing pair");
    }
  }

  if (is_dominant(tp, p) && !interleaving_uses(q, p))
    throw internal_error("minimize_augmentation: Q does not use dominant P");
  return q;
}

bool is_dominant(const tree_pair& tp, const partial_interleaving& p) {
  const height rp = residual_distance(tp, p).value;
  for (dir d : {dir::forward, dir::backward})
    for (const auto& a : (d == dir::forward ? p.fwd : p.bwd).arrows)
      if (!(shift(a) > rp)) return false;
  return true;
}

std::pair<std::vector<point>, std::vector<point>> specified_points(
    const partial_interleaving& p) {
  std::vector<point> s1, s2;
  for (const auto& a : p.fwd.arrows) s1.push_back(a.src);
  for (const auto& a : p.bwd.arrows) s2.push_back(a.src);
  return {std::move(s1), std::move(s2)};
}

namespace {

std::set<node_id> specified_vertices(const merge_tree& t, const partial_up_map& m) {
  std::set<node_id> out;
  for (const auto& a : m.arrows)
    if (t.valid_point(a.src) && a.src.h == t.height_of(a.src.carrier)) out.insert(a.src.carrier);
  return out;
}

}  // namespace

pipeline_result build_locally_correct(const merge_tree& t1, const merge_tree& t2) {
  tree_pair tp{&t1, &t2};
  partial_interleaving p;
  std::vector<pipeline_step> trace;
  const size_t bound = t1.finite_vertices().size() + t2.finite_vertices().size();

  while (true) {
    auto [delta, witness] = residual_distance(tp, p);

    // Per-iteration ledger: dominance and full specification of non-vertex
    // critical points are loop invariants of the construction.
    for (dir d : {dir::forward, dir::backward})
      for (const auto& a : (d == dir::forward ? p.fwd : p.bwd).arrows)
        if (!(shift(a) > delta)) throw internal_error("pipeline: P is not dominant");
    auto [c1, c2] = critical_points(tp, p);
    for (const auto& x : c1)
      if (!(x.h == t1.height_of(x.carrier)) && !p.fwd.lookup(x))
        throw internal_error("pipeline: unspecified non-vertex critical point in T1");
    for (const auto& y : c2)
      if (!(y.h == t2.height_of(y.carrier)) && !p.bwd.lookup(y))
        throw internal_error("pipeline: unspecified non-vertex critical point in T2");
    if (!trace.empty() && !(delta < trace.back().delta))
      throw internal_error("pipeline: residual distance did not strictly decrease");

    if (delta.is_zero()) return {std::move(witness), std::move(trace)};
    if (trace.size() >= bound) throw internal_error("pipeline: iteration bound exceeded");

    partial_interleaving q =
        minimize_augmentation(tp, p, find_augmentation(tp, p, delta, witness));

    auto before = specified_vertices(t1, p.fwd);
    auto before2 = specified_vertices(t2, p.bwd);
    auto after = specified_vertices(t1, q.fwd);
    auto after2 = specified_vertices(t2, q.bwd);
    if (before.size() + before2.size() >= after.size() + after2.size())
      throw internal_error("pipeline: no new vertex was specified");

    trace.push_back({delta, relative_difference(tp, q, p)});
    p = std::move(q);
  }
}

namespace {

partial_interleaving subset_restriction(const tree_pair& tp,
                                        const std::vector<std::pair<dir, arrow>>& all,
                                        const std::vector<char>& take) {
  std::vector<arrow> f, b;
  for (size_t i = 0; i < all.size(); ++i)
    if (take[i]) (all[i].first == dir::forward ? f : b).push_back(all[i].second);
  return partial_interleaving{make_up_map(tp, dir::forward, std::move(f)),
                              make_up_map(tp, dir::backward, std::move(b))};
}

// One decide call: resdist_R < s iff decide is feasible at the largest
// critical value strictly below s.
bool violates(const tree_pair& tp, const anchored_interleaving& i,
              const partial_interleaving& r, height* out_shift) {
  height s = residual_shift(tp, i, r);
  *out_shift = s;
  if (s.is_zero()) return false;
  auto values = residual_critical_values(tp, r);
  height probe(0);
  bool found = false;
  for (const auto& v : values) {
    if (v < s) {
      probe = v;
      found = true;
    }
  }
  if (!found) return false;
  return decide(tp, r, probe).feasible;
}

}  // namespace

std::optional<counterexample> check_locally_correct(const tree_pair& tp,
                                                    const anchored_interleaving& i,
                                                    const check_options& opt) {
  if (auto e = verify_complete(tp, i))
    throw std::invalid_argument("check_locally_correct: not a complete interleaving: " + *e);

  std::vector<std::pair<dir, arrow>> all;
  for (const auto& a : i.fwd.arrows) all.emplace_back(dir::forward, a);
  for (const auto& a : i.bwd.arrows) all.emplace_back(dir::backward, a);
  const size_t n = all.size();

  auto test = [&](const std::vector<char>& take) -> std::optional<counterexample> {
    partial_interleaving r = subset_restriction(tp, all, take);
    height s(0);
    if (violates(tp, i, r, &s)) {
      height exact = residual_distance(tp, r).value;
      return counterexample{std::move(r), exact, s};
    }
    return std::nullopt;
  };

  const bool exhaustive =
      opt.force_exhaustive || n <= static_cast<size_t>(opt.exhaustive_limit);

  // Small deletions first: violations typically show up at near-full restrictions.
  const size_t max_drop = exhaustive ? n : std::min<size_t>(n, 1);
  for (size_t k = 0; k <= max_drop; ++k) {
    std::vector<size_t> comb(k);
    for (size_t j = 0; j < k; ++j) comb[j] = j;
    bool more = true;
    while (more) {
      std::vector<char> take(n, 1);
      for (size_t idx : comb) take[idx] = 0;
      if (auto c = test(take)) return c;
      more = false;
      for (size_t j = k; j-- > 0;) {
        if (comb[j] < n - k + j) {
          ++comb[j];
          for (size_t l = j + 1; l < k; ++l) comb[l] = comb[l - 1] + 1;
          more = true;
          break;
        }
      }
    }
  }

  if (!exhaustive) {
    std::mt19937 rng(opt.seed);
    for (int s = 0; s < opt.budget; ++s) {
      std::vector<char> take(n);
      for (size_t j = 0; j < n; ++j) take[j] = static_cast<char>(rng() & 1u);
      if (auto c = test(take)) return c;
    }
  }
  return std::nullopt;
}

}  // namespace mt
