#include <doctest.h>

#include <random>

#include "t5census/constructions.hpp"
#include "t5census/detection.hpp"
#include "t5census/thresholds.hpp"

using namespace t5census;

namespace {
TripleSystem make_t5() { return TripleSystem(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {2, 3, 4}}); }
TripleSystem complete(int n) {
  std::vector<std::array<int, 3>> edges;
  for (std::uint64_t t = 0; t < choose3(static_cast<std::uint64_t>(n)); ++t)
    edges.push_back(triple_unrank(t));
  return TripleSystem(n, edges);
}
}  // namespace

TEST_CASE("T5 detection on canonical instances") {
  TripleSystem t5 = make_t5();
  auto w = contains_t5(t5);
  REQUIRE(w.has_value());
  // witness is a real configuration: edge inside N(u,v)
  CHECK(t5.has(w->edge[0], w->edge[1], w->edge[2]));
  CHECK(w->u != w->v);
  for (int v : w->edge) {
    CHECK(v != w->u);
    CHECK(v != w->v);
    VertexMask nb = neighborhood(t5, w->u, w->v);
    CHECK(((nb >> v) & 1) == 1);
  }
  CHECK_FALSE(has_independent_neighborhoods(t5));
  CHECK(contains_t5_embedding(t5));

  CHECK_FALSE(contains_t5(TripleSystem(5)).has_value());
  CHECK(has_independent_neighborhoods(complete(4)));  // too few vertices for a copy
  CHECK_FALSE(has_independent_neighborhoods(complete(5)));
  CHECK_FALSE(contains_t5(make_t5().without_edge(2, 3, 4)).has_value());
}

TEST_CASE("T5 containment is monotone under adding edges") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    TripleSystem h = random_triple_system(7, 0.35, mix_seed(414, trial));
    std::uint64_t t = rng() % h.triple_count();
    auto e = triple_unrank(t);
    TripleSystem g = h.has_index(t) ? h : h.with_edge(e[0], e[1], e[2]);
    if (contains_t5(h).has_value()) CHECK(contains_t5(g).has_value());
    if (!contains_t5(g).has_value()) CHECK_FALSE(contains_t5(h).has_value());
    // route agreement on every sampled system
    CHECK(contains_t5(h).has_value() == contains_t5_embedding(h));
  }
}

TEST_CASE("t5 copy masks") {
  auto m5 = t5_copy_masks(5);
  CHECK(m5.size() == 10);  // 5! / |Aut(T5)| with |Aut| = 12
  for (auto m : m5) CHECK(std::popcount(m) == 4);
  CHECK(t5_copy_masks(6).size() == 60);
  CHECK(t5_copy_masks(4).empty());
  CHECK_THROWS_AS(t5_copy_masks(9), std::invalid_argument);
  // the canonical labeled copy appears
  TripleSystem t5 = make_t5();
  std::uint64_t mask = 0;
  for (auto t : t5.edge_indices()) mask |= 1ULL << t;
  bool found = false;
  for (auto m : m5) found = found || m == mask;
  CHECK(found);
}

TEST_CASE("semi-bipartite detection and optimal partitions") {
  TripleSystem t5 = make_t5();
  CHECK_FALSE(is_semibipartite(t5).has_value());
  auto [b3sys, b3part] = build_b3(6);
  auto part = is_semibipartite(b3sys);
  REQUIRE(part.has_value());
  CHECK(classify_edges(b3sys, *part).d_p == 0);

  OptimalPartitionResult r = optimal_partitions(t5);
  CHECK(r.d_h == 1);
  CHECK(r.total_witnesses == 9);
  REQUIRE(!r.witnesses.empty());
  CHECK(r.witnesses.front().x_mask == 0b00011);  // ascending mask order
  for (std::size_t i = 1; i < r.witnesses.size(); ++i)
    CHECK(r.witnesses[i - 1].x_mask < r.witnesses[i].x_mask);
  for (const auto& p : r.witnesses) CHECK(classify_edges(t5, p).d_p == 1);

  OptimalPartitionResult capped = optimal_partitions(t5, 2);
  CHECK(capped.d_h == 1);
  CHECK(capped.witnesses.size() == 2);
  CHECK(capped.total_witnesses == 9);

  OptimalPartitionResult k4 = optimal_partitions(complete(4));
  CHECK(k4.d_h == 1);
  CHECK(k4.total_witnesses == 4);

  OptimalPartitionResult empty = optimal_partitions(TripleSystem(4), 64);
  CHECK(empty.d_h == 0);
  CHECK(empty.total_witnesses == 16);

  CHECK_THROWS_AS(is_semibipartite(TripleSystem(25)), resource_limit_error);
  CHECK_THROWS_AS(optimal_partitions(TripleSystem(25)), resource_limit_error);
}

TEST_CASE("semi-bipartite implies independent neighborhoods") {
  int checked = 0;
  for (int n = 6; n <= 16; ++n)
    for (std::uint64_t seed = 0; seed < 910; ++seed) {
      int a = b3(n).a;
      TripleSystem h = random_semibipartite(n, a, 0.5, mix_seed(5150 + n, seed));
      CHECK_FALSE(contains_t5(h).has_value());
      ++checked;
    }
  CHECK(checked == 10010);
}

TEST_CASE("rich edges on a hand instance") {
  TripleSystem h(7, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5}, {0, 1, 6}, {0, 3, 4}});
  OrderedPartition p = make_partition(7, 0b1111001);  // X = {0,3,4,5,6}, Y = {1,2}
  RichEdgeReport r = rich_edges(h, p, 0.5);           // threshold 3.5 < 4 = |L_X(0,1)|
  CHECK(r.alpha == 0.5);
  REQUIRE(r.edges.size() == 1);
  CHECK(r.edges[0].x == 0);
  CHECK(r.edges[0].y == 1);
  CHECK(r.edges[0].z == 2);
  CHECK(r.edges[0].poor == 2);
  CHECK(r.edges[0].link_xy == 4);
  CHECK(r.edges[0].link_xz == 0);
  CHECK(rich_edges(h, p, 0.6).edges.empty());  // threshold 4.2 > 4
}

TEST_CASE("semibipartite core removes shadowed edges") {
  auto [b3sys, p] = build_b3(6);  // X = {0..3}, 12 edges
  TripleSystem noisy = b3sys.with_edge(0, 4, 5);
  TripleSystem core = semibipartite_core(noisy, p);
  CHECK(core.edge_count() == 6);  // drops {0,4,5} and the six {0,b,4}/{0,b,5}
  for (const auto& e : core.edges()) {
    int in_x = (e[0] < 4) + (e[1] < 4) + (e[2] < 4);
    CHECK(in_x == 2);
  }
  CHECK(is_semibipartite(core).has_value());
  // already consistent systems are untouched
  CHECK(semibipartite_core(b3sys, p) == b3sys);
}

TEST_CASE("structural condition classification") {
  Thresholds th = kDefaultThresholds;
  TripleSystem t5 = make_t5();
  ConditionFlags f = classify_conditions(t5, th);
  CHECK_FALSE(f.all());
  CHECK_FALSE(f.c4);  // X = {0,1} is optimal and leaves {2,3,4} with no X point
  CHECK_FALSE(f.c5);  // X = {0,2,3} is optimal and leaves {0,1,4} with one X point
  bool saw_c4 = false;
  for (const auto& w : f.witnesses)
    if (w.condition == 4) {
      saw_c4 = true;
      CHECK(w.partition.x_mask == 0b00011);
      CHECK(w.edge == std::array<int, 3>{2, 3, 4});
    }
  CHECK(saw_c4);

  auto [b3sys, p] = build_b3(6);
  ConditionFlags ok = classify_conditions(b3sys, th);
  CHECK(ok.all());
  CHECK(ok.witnesses.empty());

  ConditionFlags empty = classify_conditions(TripleSystem(5), th);
  CHECK(empty.all());
}
