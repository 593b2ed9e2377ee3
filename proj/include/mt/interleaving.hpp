#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mt/tree.hpp"

namespace mt {

enum class dir { forward, backward };

inline dir opposite(dir d) { return d == dir::forward ? dir::backward : dir::forward; }

struct tree_pair {
  const merge_tree* t1 = nullptr;
  const merge_tree* t2 = nullptr;
  const merge_tree& src(dir d) const { return d == dir::forward ? *t1 : *t2; }
  const merge_tree& tgt(dir d) const { return d == dir::forward ? *t2 : *t1; }
};

struct arrow {
  point src;
  point tgt;
  bool operator==(const arrow&) const = default;
};

height shift(const arrow& a);

// Finite set of same-direction arrows with pairwise distinct sources,
// kept sorted by the source-tree point order.
struct partial_up_map {
  dir direction = dir::forward;
  std::vector<arrow> arrows;

  bool empty() const { return arrows.empty(); }
  std::optional<point> lookup(const point& src) const;
};

struct partial_interleaving {
  partial_up_map fwd{dir::forward, {}};
  partial_up_map bwd{dir::backward, {}};

  bool empty() const { return fwd.empty() && bwd.empty(); }
  int arrow_count() const { return static_cast<int>(fwd.arrows.size() + bwd.arrows.size()); }
};

// Finite representation of a complete interleaving: anchor arrows at (at least)
// all finite vertices per side, evaluated between anchors by eval().
struct anchored_interleaving {
  partial_up_map fwd{dir::forward, {}};
  partial_up_map bwd{dir::backward, {}};

  const partial_up_map& side(dir d) const { return d == dir::forward ? fwd : bwd; }
};

// Construction: sorts arrows; throws std::invalid_argument on duplicate sources.
partial_up_map make_up_map(const tree_pair& tp, dir d, std::vector<arrow> arrows);
partial_interleaving make_interleaving(const tree_pair& tp, partial_up_map fwd, partial_up_map bwd);

// Structural validity: point validity, f(src) <= f(tgt), finite sources,
// pairwise ancestor preservation. Returns a description of the first failure.
std::optional<std::string> validate_up_map(const tree_pair& tp, const partial_up_map& m);
// Up-map validity on both sides plus the cross-condition.
std::optional<std::string> validate_interleaving(const tree_pair& tp, const partial_interleaving& p);

height map_shift(const partial_up_map& m);              // max arrow shift, 0 if empty
height interleaving_shift(const partial_interleaving& p);

partial_up_map lift_map(const tree_pair& tp, const partial_up_map& m, const height& delta);
partial_interleaving lift_interleaving(const tree_pair& tp, const partial_interleaving& p,
                                       const height& delta);
anchored_interleaving lift_anchored(const tree_pair& tp, const anchored_interleaving& i,
                                    const height& delta);

bool arrow_extends(const tree_pair& tp, dir d, const arrow& a, const arrow& b);
bool arrow_uses(const arrow& a, const arrow& b);
bool map_extends(const tree_pair& tp, const partial_up_map& larger, const partial_up_map& smaller);
bool map_uses(const partial_up_map& larger, const partial_up_map& smaller);
bool interleaving_extends(const tree_pair& tp, const partial_interleaving& larger,
                          const partial_interleaving& smaller);
bool interleaving_uses(const partial_interleaving& larger, const partial_interleaving& smaller);
// An anchored interleaving extends P if its evaluation dominates every arrow of P.
bool anchored_extends(const tree_pair& tp, const anchored_interleaving& i,
                      const partial_interleaving& p);

// a lies in the fan F[A_phi]: some arrow (x, y) of phi has tgt(a) = y and src(a) above x.
bool in_fan(const tree_pair& tp, const arrow& a, const partial_up_map& phi);

height residual_shift(const tree_pair& tp, const arrow& a, const partial_up_map& phi);
height residual_shift(const tree_pair& tp, const partial_up_map& m, const partial_up_map& phi);
height residual_shift(const tree_pair& tp, const partial_interleaving& q,
                      const partial_interleaving& p);
// Max over anchor arrows; equals the supremum over the continuum (see eval()).
height residual_shift(const tree_pair& tp, const anchored_interleaving& i,
                      const partial_interleaving& p);

// Keep only arrows whose source lies in the given sets. Sources outside the domain are errors.
partial_interleaving restriction(const tree_pair& tp, const partial_interleaving& p,
                                 const std::vector<point>& s1, const std::vector<point>& s2);

// Arrows of p at sources where q is undefined or disagrees.
partial_interleaving relative_difference(const tree_pair& tp, const partial_interleaving& p,
                                         const partial_interleaving& q);

// Highest domain point of m that is a descendant of x. Exists whenever the domain
// contains all finite vertices; returns nullopt otherwise when x has no domain descendant.
std::optional<arrow> highest_anchor_at_or_below(const tree_pair& tp, const partial_up_map& m,
                                                const point& x);

// Canonical evaluation of an anchored map at any point x of the source tree:
// with v_x the highest anchor descendant of x and w its target,
// eval(x) = an{w}{max(f(x), f(w))}. The root maps to the root.
point eval(const tree_pair& tp, const anchored_interleaving& i, dir d, const point& x);

// Anchor validity, vertex coverage, cross-conditions, and round-trip
// eval(eval(v)) above v at every anchor source.
std::optional<std::string> verify_complete(const tree_pair& tp, const anchored_interleaving& i);

// True iff every anchor arrow has shift exactly delta and the uniform-shift round
// trip lands exactly at an{.}{f + 2*delta} at every anchor source.
bool is_delta_compatible(const tree_pair& tp, const anchored_interleaving& i, const height& delta);

}  // namespace mt
