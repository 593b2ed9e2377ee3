#pragma once

#include <utility>
#include <vector>

#include "mt/solver.hpp"

namespace fix {

// rows[i] = {height string, parent id}; parent -1 marks the root.
inline mt::merge_tree make_tree(const std::vector<std::pair<std::string, int>>& rows) {
  std::vector<mt::tree_node> nodes;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    nodes.push_back({i, mt::height::parse(rows[i].first),
                     rows[i].second < 0 ? std::nullopt : std::optional<int>(rows[i].second)});
  return mt::merge_tree(std::move(nodes));
}

inline mt::point pt(const mt::merge_tree& t, int carrier, const std::string& h) {
  return t.normalized(carrier, mt::height::parse(h));
}

inline mt::point vx(const mt::merge_tree& t, int v) { return t.vertex_point(v); }

// FIX-A: single leaf at 0 versus single leaf at 4.
inline mt::merge_tree fix_a_t1() { return make_tree({{"0", 1}, {"inf", -1}}); }
inline mt::merge_tree fix_a_t2() { return make_tree({{"4", 1}, {"inf", -1}}); }

// FIX-B: u1@0, u2@0 merging at s@6, versus the single leaf at 0.
inline mt::merge_tree fix_b_t1() {
  return make_tree({{"0", 2}, {"0", 2}, {"6", 3}, {"inf", -1}});
}
inline mt::merge_tree fix_b_t2() { return make_tree({{"0", 1}, {"inf", -1}}); }

// FIX-C: p@0, q@0, s@8 versus p'@0, q'@2, s'@8.
inline mt::merge_tree fix_c_t1() {
  return make_tree({{"0", 2}, {"0", 2}, {"8", 3}, {"inf", -1}});
}
inline mt::merge_tree fix_c_t2() {
  return make_tree({{"0", 2}, {"2", 2}, {"8", 3}, {"inf", -1}});
}

// Uniform-shift-2 optimal interleaving of FIX-C that crosses the branches;
// globally optimal but not locally correct.
inline mt::anchored_interleaving fix_c_loose(const mt::tree_pair& tp) {
  const mt::merge_tree &t1 = *tp.t1, &t2 = *tp.t2;
  return mt::assemble_witness(
      tp, {vx(t1, 0), vx(t1, 1), vx(t1, 2)}, {vx(t2, 1), pt(t2, 0, "2"), pt(t2, 2, "10")},
      {vx(t2, 0), vx(t2, 1), vx(t2, 2)}, {pt(t1, 1, "2"), pt(t1, 0, "4"), pt(t1, 2, "10")},
      mt::height(2));
}

// H1 (arrow critical pair): FIX-C rescaled so the bottleneck is the arrow (q, q') at 4.
inline mt::merge_tree h1_t1() {
  return make_tree({{"0", 2}, {"0", 2}, {"10", 3}, {"inf", -1}});
}
inline mt::merge_tree h1_t2() {
  return make_tree({{"0", 2}, {"4", 2}, {"10", 3}, {"inf", -1}});
}
inline mt::anchored_interleaving h1_loose(const mt::tree_pair& tp) {
  const mt::merge_tree &t1 = *tp.t1, &t2 = *tp.t2;
  return mt::assemble_witness(
      tp, {vx(t1, 0), vx(t1, 1), vx(t1, 2)}, {vx(t2, 1), pt(t2, 0, "4"), pt(t2, 2, "14")},
      {vx(t2, 0), vx(t2, 1), vx(t2, 2)}, {pt(t1, 1, "4"), pt(t1, 0, "8"), pt(t1, 2, "14")},
      mt::height(4));
}

// H2 (zigzag critical pair): a twin pair (a, a') rides along a zigzag bottleneck
// between b1/b2 merging at sb@2 and the single branch lb.
// T1: a=0, b1=1, b2=2, sb=3@2, top=4@4.  T2: a'=0, lb=1, top'=2@4.
inline mt::merge_tree h2_t1() {
  return make_tree({{"0", 4}, {"0", 3}, {"0", 3}, {"2", 4}, {"4", 5}, {"inf", -1}});
}
inline mt::merge_tree h2_t2() {
  return make_tree({{"0", 2}, {"0", 2}, {"4", 3}, {"inf", -1}});
}
// Valid optimal interleaving that wastes shift on the twin pair: a pays 1.
inline mt::anchored_interleaving h2_loose(const mt::tree_pair& tp) {
  const mt::merge_tree &t1 = *tp.t1, &t2 = *tp.t2;
  return mt::assemble_witness(
      tp, {vx(t1, 0), vx(t1, 1), vx(t1, 2), vx(t1, 3), vx(t1, 4)},
      {pt(t2, 0, "1"), pt(t2, 1, "1"), pt(t2, 1, "1"), pt(t2, 1, "3"), pt(t2, 2, "5")},
      {vx(t2, 0), vx(t2, 1), vx(t2, 2)}, {pt(t1, 0, "1"), pt(t1, 1, "1"), pt(t1, 4, "5")},
      mt::height(1));
}

// H3 (mixed): H1 glued to the zigzag pair of H2 plus a free twin, so the pipeline
// needs an arrow-pair bottleneck at 4 and a zigzag bottleneck at 1.
// T1: p=0, q=1, sa=2@10, b1=3, b2=4, sb=5@2, a=6, TOP=7@20.
// T2: p'=0, q'=1@4, sa'=2@10, lb=3, a'=4, TOP'=5@20.
inline mt::merge_tree h3_t1() {
  return make_tree({{"0", 2}, {"0", 2}, {"10", 7}, {"0", 5}, {"0", 5}, {"2", 7}, {"0", 7},
                    {"20", 8}, {"inf", -1}});
}
inline mt::merge_tree h3_t2() {
  return make_tree({{"0", 2}, {"4", 2}, {"10", 5}, {"0", 5}, {"0", 5}, {"20", 6}, {"inf", -1}});
}
// Fully uniform shift-4 interleaving: crosses p/q, wastes shift on a/a' and the zigzag.
inline mt::anchored_interleaving h3_loose(const mt::tree_pair& tp) {
  const mt::merge_tree &t1 = *tp.t1, &t2 = *tp.t2;
  return mt::assemble_witness(
      tp,
      {vx(t1, 0), vx(t1, 1), vx(t1, 2), vx(t1, 3), vx(t1, 4), vx(t1, 5), vx(t1, 6), vx(t1, 7)},
      {vx(t2, 1), pt(t2, 0, "4"), pt(t2, 2, "14"), pt(t2, 3, "4"), pt(t2, 3, "4"),
       pt(t2, 3, "6"), pt(t2, 4, "4"), pt(t2, 5, "24")},
      {vx(t2, 0), vx(t2, 1), vx(t2, 2), vx(t2, 3), vx(t2, 4), vx(t2, 5)},
      {pt(t1, 1, "4"), pt(t1, 0, "8"), pt(t1, 2, "14"), pt(t1, 5, "4"), pt(t1, 6, "4"),
       pt(t1, 7, "24")},
      mt::height(4));
}

}  // namespace fix
