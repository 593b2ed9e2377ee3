#pragma once

#include <stdexcept>

#include "mt/critical.hpp"
#include "mt/interleaving.hpp"

namespace mt {

// Raised when a provable invariant is contradicted at runtime; always a bug.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct decide_result {
  bool feasible = false;
  anchored_interleaving witness;  // meaningful only when feasible
};

// Decides whether a complete P-extension with P-residual shift <= delta exists.
// Feasible results carry a deterministic witness that extends p, passes
// verify_complete, and has residual shift <= delta.
decide_result decide(const tree_pair& tp, const partial_interleaving& p, const height& delta);

struct distance_result {
  height value;
  anchored_interleaving witness;
};

// Minimum delta in Delta[P] for which decide() is feasible, with its witness.
distance_result residual_distance(const tree_pair& tp, const partial_interleaving& p);

distance_result interleaving_distance(const merge_tree& t1, const merge_tree& t2);

// Independent exhaustive check over all candidate anchor assignments.
// Size-guarded: trees up to 6 leaves, p up to 4 arrows.
bool oracle_decide(const tree_pair& tp, const partial_interleaving& p, const height& delta);

// The trivial complete P-extension sending everything to the root at infinity.
anchored_interleaving root_extension(const tree_pair& tp, const partial_interleaving& p);

// Anchored witness for explicit target assignments at the given anchor points;
// adds the image-point anchors of both sides, valued by the uniform-shift rule.
anchored_interleaving assemble_witness(const tree_pair& tp, const std::vector<point>& c1,
                                       const std::vector<point>& a_tgts,
                                       const std::vector<point>& c2,
                                       const std::vector<point>& b_tgts, const height& delta);

int leaf_count(const merge_tree& t);

}  // namespace mt
