#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mt/solver.hpp"

namespace mt {

// Q is a P-augmentation: it extends P, its P-residual shift is at most resdist_P,
// and its own residual distance is strictly smaller. Two residual_distance calls.
bool is_augmentation(const tree_pair& tp, const partial_interleaving& p,
                     const partial_interleaving& q);

// P plus the witness anchor arrows whose P-residual shift is exactly delta_star,
// deduplicated per source keeping the higher target. Requires delta_star > 0.
partial_interleaving find_augmentation(const tree_pair& tp, const partial_interleaving& p,
                                       const height& delta_star, const anchored_interleaving& w);

// Greedy single-arrow deletion over Q \ P until a full pass removes nothing.
// Asserts the minimal-augmentation lemmas at runtime: surviving arrows have shift
// exactly resdist_P and use only realizing critical pairs; if P is dominant, Q uses P.
partial_interleaving minimize_augmentation(const tree_pair& tp, const partial_interleaving& p,
                                           partial_interleaving q);

bool is_dominant(const tree_pair& tp, const partial_interleaving& p);

std::pair<std::vector<point>, std::vector<point>> specified_points(const partial_interleaving& p);

struct pipeline_step {
  height delta;                // residual distance before this augmentation
  partial_interleaving added;  // the bottleneck Q \ P
};

struct pipeline_result {
  anchored_interleaving interleaving;
  std::vector<pipeline_step> trace;
};

// Iterates minimal augmentations from the empty constraint set until the residual
// distance hits zero; the final optimal extension is locally correct.
pipeline_result build_locally_correct(const merge_tree& t1, const merge_tree& t2);

struct check_options {
  int budget = 256;           // random restrictions when the subset space is too big
  unsigned seed = 0;
  bool force_exhaustive = false;
  int exhaustive_limit = 10;  // exhaustive enumeration when anchor count <= this
};

struct counterexample {
  partial_interleaving restriction;
  height resdist;  // residual distance of the restriction
  height shift;    // restriction-residual shift of the interleaving
};

// Sound refuter for local correctness: enumerates restrictions over subsets of the
// anchor arrows (small deletions first; exhaustive within limits, otherwise seeded
// random) and reports the first restriction R with resdist_R < shift_R(I).
std::optional<counterexample> check_locally_correct(const tree_pair& tp,
                                                    const anchored_interleaving& i,
                                                    const check_options& opt = {});

}  // namespace mt
