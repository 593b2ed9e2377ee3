#include <doctest.h>

#include <random>

#include "mt/solver.hpp"
#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

using namespace mt;

TEST_CASE("decide on FIX-A") {
  merge_tree t1 = fix::fix_a_t1(), t2 = fix::fix_a_t2();
  tree_pair tp{&t1, &t2};

  auto r4 = decide(tp, {}, height(4));
  REQUIRE(r4.feasible);
  CHECK(*r4.witness.fwd.lookup(t1.vertex_point(0)) == t2.vertex_point(0));

  CHECK_FALSE(decide(tp, {}, height(2)).feasible);
  CHECK_THROWS_AS(decide(tp, {}, height(-1)), std::invalid_argument);
}

TEST_CASE("decide on identical trees at zero") {
  merge_tree t1 = fix::fix_c_t1(), t2 = fix::fix_c_t1();
  tree_pair tp{&t1, &t2};
  auto r = decide(tp, {}, height(0));
  REQUIRE(r.feasible);
  for (const auto& a : r.witness.fwd.arrows) CHECK(shift(a) == height(0));
  for (const auto& a : r.witness.bwd.arrows) CHECK(shift(a) == height(0));
}

TEST_CASE("decide on FIX-C under the q constraint at zero") {
  merge_tree t1 = fix::fix_c_t1(), t2 = fix::fix_c_t2();
  tree_pair tp{&t1, &t2};
  partial_interleaving p{
      make_up_map(tp, dir::forward, {{t1.vertex_point(1), t2.vertex_point(1)}}),
      {dir::backward, {}}};

  auto r = decide(tp, p, height(0));
  REQUIRE(r.feasible);
  CHECK(*r.witness.fwd.lookup(t1.vertex_point(0)) == t2.vertex_point(0));
  CHECK(*r.witness.fwd.lookup(t1.vertex_point(1)) == t2.vertex_point(1));
  CHECK(*r.witness.fwd.lookup(t1.vertex_point(2)) == t2.vertex_point(2));
  CHECK(residual_shift(tp, r.witness, p) == height(0));
}

TEST_CASE("residual and interleaving distances on the fixtures") {
  merge_tree a1 = fix::fix_a_t1(), a2 = fix::fix_a_t2();
  CHECK(interleaving_distance(a1, a2).value == height(4));

  merge_tree b1 = fix::fix_b_t1(), b2 = fix::fix_b_t2();
  CHECK(interleaving_distance(b1, b2).value == height(3));

  merge_tree c1 = fix::fix_c_t1(), c2 = fix::fix_c_t2();
  CHECK(interleaving_distance(c1, c2).value == height(2));

  merge_tree i1 = fix::fix_c_t1(), i2 = fix::fix_c_t1();
  CHECK(interleaving_distance(i1, i2).value == height(0));
}

TEST_CASE("FIX-B witness realizes the distance through the saddle") {
  merge_tree t1 = fix::fix_b_t1(), t2 = fix::fix_b_t2();
  tree_pair tp{&t1, &t2};
  auto r = residual_distance(tp, {});
  CHECK(r.value == height(3));
  // the zigzag return arrow at height 3 must reach the saddle exactly
  point mid = fix::pt(t2, 0, "3");
  auto back = r.witness.bwd.lookup(mid);
  REQUIRE(back);
  CHECK(*back == t1.vertex_point(2));
}

TEST_CASE("root extension") {
  merge_tree t1 = fix::fix_a_t1(), t2 = fix::fix_a_t2();
  tree_pair tp{&t1, &t2};
  partial_interleaving p{
      make_up_map(tp, dir::forward, {{t1.vertex_point(0), t2.vertex_point(0)}}),
      {dir::backward, {}}};

  anchored_interleaving re = root_extension(tp, p);
  for (const auto& a : re.fwd.arrows) CHECK(a.tgt.is_root());
  for (const auto& a : re.bwd.arrows) CHECK(a.tgt.is_root());
  CHECK_FALSE(verify_complete(tp, re));
  CHECK(anchored_extends(tp, re, p));

  anchored_interleaving re0 = root_extension(tp, {});
  CHECK(residual_shift(tp, re0, {}).is_infinite());
}

TEST_CASE("oracle agrees on the fixtures at every critical value") {
  auto run = [](const merge_tree& t1, const merge_tree& t2) {
    tree_pair tp{&t1, &t2};
    for (const auto& v : residual_critical_values(tp, {}))
      CHECK(decide(tp, {}, v).feasible == oracle_decide(tp, {}, v));
    CHECK(oracle_decide(tp, {}, residual_critical_values(tp, {}).back()));
  };
  merge_tree a1 = fix::fix_a_t1(), a2 = fix::fix_a_t2();
  merge_tree b1 = fix::fix_b_t1(), b2 = fix::fix_b_t2();
  merge_tree c1 = fix::fix_c_t1(), c2 = fix::fix_c_t2();
  run(a1, a2);
  run(b1, b2);
  run(c1, c2);

  merge_tree i1 = fix::fix_c_t1(), i2 = fix::fix_c_t1();
  tree_pair tpi{&i1, &i2};
  CHECK(oracle_decide(tpi, {}, height(0)));
}

TEST_CASE("oracle is size-guarded") {
  std::vector<tree_node> nodes;
  for (int i = 0; i < 7; ++i) nodes.push_back({i, height(0), 7});
  nodes.push_back({7, height(5), 8});
  nodes.push_back({8, height::infinity(), std::nullopt});
  merge_tree big(std::move(nodes));
  merge_tree small = fix::fix_a_t1();
  tree_pair tp{&big, &small};
  CHECK_THROWS_AS(oracle_decide(tp, {}, height(0)), std::invalid_argument);
}

TEST_CASE("witness validity, monotonicity, certificates on random instances") {
  std::mt19937 rng(43);
  for (int it = 0; it < 60; ++it) {
    merge_tree t1 = testgen::random_tree(rng, 4);
    merge_tree t2 = testgen::random_tree(rng, 4);
    tree_pair tp{&t1, &t2};
    partial_interleaving p = testgen::random_constraints(rng, tp, 2);

    auto values = residual_critical_values(tp, p);
    bool seen_feasible = false;
    for (const auto& v : values) {
      bool f = decide(tp, p, v).feasible;
      if (seen_feasible) CHECK(f);  // monotone in delta
      seen_feasible = seen_feasible || f;
    }
    CHECK(seen_feasible);

    auto r = residual_distance(tp, p);
    CHECK_FALSE(verify_complete(tp, r.witness));
    CHECK(anchored_extends(tp, r.witness, p));
    CHECK(residual_shift(tp, r.witness, p) <= r.value);

    // optimality certificate: infeasible at the next smaller critical value
    const height* below = nullptr;
    for (const auto& v : values)
      if (v < r.value) below = &v;
    if (below) CHECK_FALSE(decide(tp, p, *below).feasible);

    CHECK(std::find(values.begin(), values.end(), r.value) != values.end());
  }
}

TEST_CASE("optimal witnesses use a realizing critical pair") {
  std::mt19937 rng(47);
  int done = 0;
  while (done < 40) {
    merge_tree t1 = testgen::random_tree(rng, 4);
    merge_tree t2 = testgen::random_tree(rng, 4);
    tree_pair tp{&t1, &t2};
    partial_interleaving p = testgen::random_constraints(rng, tp, 2);
    auto r = residual_distance(tp, p);
    partial_interleaving w{r.witness.fwd, r.witness.bwd};
    partial_interleaving diff = relative_difference(tp, w, p);
    bool used = false;
    for (const auto& cp : realizing_pairs(tp, p, r.value))
      if (pair_is_used(tp, diff, cp)) used = true;
    CHECK(used);
    ++done;
  }
}

TEST_CASE("decide is deterministic") {
  std::mt19937 rng(53);
  for (int it = 0; it < 20; ++it) {
    merge_tree t1 = testgen::random_tree(rng, 4);
    merge_tree t2 = testgen::random_tree(rng, 4);
    tree_pair tp{&t1, &t2};
    partial_interleaving p = testgen::random_constraints(rng, tp, 2);
    auto a = residual_distance(tp, p);
    auto b = residual_distance(tp, p);
    CHECK(a.value == b.value);
    CHECK(a.witness.fwd.arrows == b.witness.fwd.arrows);
    CHECK(a.witness.bwd.arrows == b.witness.bwd.arrows);
  }
}

TEST_CASE("degree-2 chain vertices do not change the realization") {
  merge_tree t1 = fix::make_tree({{"0", 1}, {"inf", -1}});
  merge_tree t2 = fix::make_tree({{"0", 1}, {"1", 2}, {"inf", -1}});
  CHECK(interleaving_distance(t1, t2).value == height(0));
}

TEST_CASE("fractional distances stay exact") {
  // FIX-B shape with an odd saddle: the zigzag pairs (u_i, s) realize 1/2
  merge_tree t1 = fix::make_tree({{"0", 2}, {"0", 2}, {"1", 3}, {"inf", -1}});
  merge_tree t2 = fix::make_tree({{"0", 1}, {"inf", -1}});
  auto r = interleaving_distance(t1, t2);
  CHECK(r.value == height(mpq_class(1, 2)));
  CHECK(r.value.str() == "1/2");
  tree_pair tp{&t1, &t2};
  CHECK(oracle_decide(tp, {}, r.value));
  CHECK_FALSE(oracle_decide(tp, {}, height(0)));
}

TEST_CASE("constraints targeting the root work end to end") {
  merge_tree t1 = fix::fix_a_t1(), t2 = fix::fix_a_t2();
  tree_pair tp{&t1, &t2};
  partial_interleaving p{
      make_up_map(tp, dir::forward, {{t1.vertex_point(0), point::root()}}),
      {dir::backward, {}}};
  REQUIRE_FALSE(validate_interleaving(tp, p));

  auto r = residual_distance(tp, p);
  CHECK(r.value == height(0));  // the constraint's fan absorbs the whole branch
  CHECK(r.witness.fwd.lookup(t1.vertex_point(0))->is_root());
  CHECK(anchored_extends(tp, r.witness, p));
  CHECK(oracle_decide(tp, p, height(0)));
}

TEST_CASE("witness round trips hold at random non-anchor points") {
  std::mt19937 rng(101);
  for (int it = 0; it < 15; ++it) {
    merge_tree t1 = testgen::random_tree(rng, 4);
    merge_tree t2 = testgen::random_tree(rng, 4);
    tree_pair tp{&t1, &t2};
    partial_interleaving p = testgen::random_constraints(rng, tp, 2);
    auto r = residual_distance(tp, p);
    for (int k = 0; k < 100; ++k) {
      point x = testgen::random_point(rng, t1);
      CHECK(is_descendant(
          t1, x, eval(tp, r.witness, dir::backward, eval(tp, r.witness, dir::forward, x))));
      point y = testgen::random_point(rng, t2);
      CHECK(is_descendant(
          t2, y, eval(tp, r.witness, dir::forward, eval(tp, r.witness, dir::backward, y))));
    }
  }
}

TEST_CASE("decide matches the oracle on random instances at every critical value") {
  std::mt19937 rng(59);
  for (int it = 0; it < 60; ++it) {
    merge_tree t1 = testgen::random_tree(rng, 4);
    merge_tree t2 = testgen::random_tree(rng, 4);
    tree_pair tp{&t1, &t2};
    partial_interleaving p = testgen::random_constraints(rng, tp, 2);
    for (const auto& v : residual_critical_values(tp, p))
      CHECK(decide(tp, p, v).feasible == oracle_decide(tp, p, v));
  }
}
