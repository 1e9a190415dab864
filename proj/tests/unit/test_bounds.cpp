#include <doctest.h>

#include <cmath>
#include <random>

#include "t5census/bounds.hpp"
#include "t5census/constructions.hpp"
#include "t5census/thresholds.hpp"

using namespace t5census;

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(binary_entropy(0.25) == doctest::Approx(0.8112781244591328).epsilon(1e-15));
  CHECK(binary_entropy(0.3) == binary_entropy(0.7));
  CHECK_THROWS_AS(binary_entropy(0.0), std::invalid_argument);
  CHECK_THROWS_AS(binary_entropy(1.0), std::invalid_argument);
  CHECK_THROWS_AS(binary_entropy(-0.1), std::invalid_argument);
}

TEST_CASE("entropy facts, exact and log-domain routes") {
  for (int n : {32, 48, 64})
    for (std::int64_t k = 1; k <= 9; ++k) {
      EntropyFactsResult r = entropy_facts_check(n, Rational{k, 20});
      CHECK(r.exact);
      CHECK(r.single_holds);
      CHECK(r.tail_holds);
      CHECK(r.single_margin_bits > 0);
      CHECK(r.tail_margin_bits > 0);
    }
  // the two routes agree where both apply
  for (std::int64_t k = 1; k <= 9; ++k) {
    EntropyFactsResult exact = entropy_facts_check(64, Rational{k, 20});
    EntropyFactsResult logd = entropy_facts_logdomain(64, static_cast<double>(k) / 20.0);
    CHECK(exact.single_holds == logd.single_holds);
    CHECK(exact.tail_holds == logd.tail_holds);
  }
  EntropyFactsResult big = entropy_facts_logdomain(100000, 0.3);
  CHECK_FALSE(big.exact);
  CHECK(big.single_holds);
  CHECK(big.tail_holds);
  CHECK_THROWS_AS(entropy_facts_check(64, Rational{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(entropy_facts_check(64, Rational{0, 20}), std::invalid_argument);
  CHECK_THROWS_AS(entropy_facts_logdomain(64, 0.6), std::invalid_argument);
}

TEST_CASE("chernoff bound and empirical tail") {
  CHECK(chernoff_bound(200, 0.5, 30) == doctest::Approx(std::exp(-4.5)).epsilon(1e-12));
  CHECK(chernoff_bound(100, 0.2, 10) == doctest::Approx(std::exp(-2.5)).epsilon(1e-12));
  CHECK_THROWS_AS(chernoff_bound(100, 0.0, 10), std::invalid_argument);
  ChernoffEmpirical e1 = chernoff_empirical(200, 0.5, 30, 2000, 77);
  ChernoffEmpirical e2 = chernoff_empirical(200, 0.5, 30, 2000, 77);
  CHECK(e1.hits == e2.hits);  // seed-deterministic
  CHECK(e1.trials == 2000);
  CHECK(e1.observed <= e1.bound);
}

TEST_CASE("greedy matching reaches the pigeonhole size") {
  PairGraph path(6);
  path.add(0, 1);
  path.add(1, 2);
  path.add(2, 3);
  path.add(3, 4);
  path.add(4, 5);
  auto m = greedy_matching(path);
  CHECK(m.size() >= 1);
  std::uint64_t used = 0;
  for (const auto& e : m) {
    CHECK(((used >> e[0]) & 1) == 0);
    CHECK(((used >> e[1]) & 1) == 0);
    used |= (1ULL << e[0]) | (1ULL << e[1]);
  }
  CHECK(greedy_matching(PairGraph(5)).empty());
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + static_cast<int>(rng() % 30);
    PairGraph g(n);
    for (int b = 1; b < n; ++b)
      for (int a = 0; a < b; ++a)
        if (rng() % 3 == 0) g.add(a, b);
    auto mm = greedy_matching(g);  // throws if the bound ever fails
    CHECK(2 * static_cast<std::uint64_t>(n) * mm.size() >= g.edge_count());
  }
}

TEST_CASE("matching-count bound table") {
  MatchCountResult r31 = max_matching_count(3, 1);
  CHECK(r31.exact_count == 4);
  CHECK(r31.bound == 5);
  MatchCountResult r42 = max_matching_count(4, 2);
  CHECK(r42.exact_count == 16);
  CHECK(r42.bound == 64);
  MatchCountResult r63 = max_matching_count(6, 3);
  CHECK(r63.exact_count == 4096);
  CHECK(r63.bound == 32768);
  MatchCountResult r61 = max_matching_count(6, 1);
  CHECK(r61.exact_count == 35);
  CHECK(r61.bound == 36);
  CHECK_THROWS_AS(max_matching_count(5, 3), std::invalid_argument);  // 2m > N
  CHECK_THROWS_AS(max_matching_count(9, 1), resource_limit_error);   // N > 8
}

TEST_CASE("triangle counts against a naive oracle") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    int m = 2 + static_cast<int>(rng() % 3);
    PairGraph g(3 * m);
    for (int b = 1; b < 3 * m; ++b)
      for (int a = 0; a < b; ++a)
        if (a / m != b / m && rng() % 2 == 0) g.add(a, b);
    std::vector<int> parts[3];
    for (int s = 0; s < 3; ++s)
      for (int v = 0; v < m; ++v) parts[s].push_back(s * m + v);
    std::uint64_t naive = 0;
    for (int u : parts[0])
      for (int v : parts[1])
        for (int w : parts[2])
          if (g.has(u, v) && g.has(v, w) && g.has(u, w)) ++naive;
    CHECK(triangle_count_tripartite(parts[0], parts[1], parts[2], g) == naive);
  }
  // complete tripartite: every transversal triple is a triangle
  PairGraph full = random_tripartite_cylinder(4, 1, 1);
  std::vector<int> p0{0, 1, 2, 3}, p1{4, 5, 6, 7}, p2{8, 9, 10, 11};
  CHECK(triangle_count_tripartite(p0, p1, p2, full) == 64);
  std::vector<int> overlap{0, 1, 2, 4};
  CHECK_THROWS_AS(triangle_count_tripartite(p0, overlap, p2, full), std::invalid_argument);
}

TEST_CASE("lower density conditions on the extremal instance") {
  auto [h, p] = build_b3(12);
  LowerDensityReport r = lower_density_check(h, p, 0.05);
  CHECK(r.mu == 0.05);
  CHECK(r.conditions[2].status == ConditionStatus::HoldsExact);  // (iii): C(k,2) > k^2/8
  CHECK(r.conditions[3].status == ConditionStatus::HoldsExact);  // (iv): vacuous at this scale
  CHECK(r.conditions[4].status == ConditionStatus::HoldsExact);  // (v): |Y| = 4 = n/3
  // (i) is refutable at this scale: G1 one matched pair uv, G2 = {u,v} x Y has
  // 8 >= mu n^2 cross pairs, and every counted triple would repeat a vertex,
  // so the left side is 0 <= 8/72. The search is expected to find it.
  CHECK(r.conditions[0].status == ConditionStatus::Violated);
  CHECK(r.conditions[0].lhs == 0);
  CHECK(r.any_violated());
  // (ii) has no such degeneracy (G1 lives in X, G2 in Y): unrefuted on B3
  CHECK(r.conditions[1].status == ConditionStatus::HoldsUnrefuted);

  // (v) fails for a lopsided partition
  LowerDensityReport bad = lower_density_check(h, make_partition(12, 0b1), 0.05);
  CHECK(bad.conditions[4].status == ConditionStatus::Violated);
  CHECK(bad.any_violated());

  CHECK_THROWS_AS(lower_density_check(h, p, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(lower_density_check(h, p, 0.5), std::invalid_argument);
}

TEST_CASE("relabeling X does not change lower-density statuses") {
  auto [h, p] = build_b3(9);  // X = {0..5}
  LowerDensityReport base = lower_density_check(h, p, 0.05);
  // swap labels 0 and 8 in the system and the partition
  auto relabel = [](int v) { return v == 0 ? 8 : v == 8 ? 0 : v; };
  std::vector<std::array<int, 3>> edges;
  for (auto e : h.edges()) {
    std::array<int, 3> f{relabel(e[0]), relabel(e[1]), relabel(e[2])};
    std::sort(f.begin(), f.end());
    edges.push_back(f);
  }
  TripleSystem h2(9, edges);
  OrderedPartition p2 = make_partition(9, 0b100111110);  // X relabeled
  LowerDensityReport moved = lower_density_check(h2, p2, 0.05);
  for (int c = 0; c < 5; ++c) CHECK(base.conditions[c].status == moved.conditions[c].status);
}

TEST_CASE("cube-root growth bound on the semi-bipartite count") {
  SBoundResult r6 = s_bound_check(6, u128(59739), u128(476));
  CHECK(r6.construction_ok);
  REQUIRE(r6.exact_holds.has_value());
  CHECK(*r6.exact_holds);
  REQUIRE(r6.recursion_holds.has_value());
  CHECK(*r6.recursion_holds);
  CHECK(r6.bound_log2 == doctest::Approx((2.0 * 216 - 3 * 36 - 18) / 27.0));

  SBoundResult r5 = s_bound_check(5, u128(476), u128(15));
  CHECK(r5.construction_ok);
  CHECK(*r5.exact_holds);

  SBoundResult r3 = s_bound_check(3, u128(2));  // empty and one-edge systems partition
  CHECK(r3.bound_log2 == doctest::Approx(2.0 / 3.0));
  CHECK(*r3.exact_holds);  // 2^27 >= 2^18

  SBoundResult loose = s_bound_check(20, std::nullopt, std::nullopt);
  CHECK(loose.construction_ok);
  CHECK_FALSE(loose.exact_holds.has_value());
  CHECK_THROWS_AS(s_bound_check(2), std::invalid_argument);
}

TEST_CASE("threshold hierarchy") {
  HierarchyResult ok = threshold_hierarchy_check(kDefaultThresholds);
  CHECK(ok.ok);
  for (bool ineq : ok.inequality) CHECK(ineq);

  Thresholds fat_alpha = kDefaultThresholds;
  fat_alpha.alpha = 0.1;  // H(alpha) rises past 0.01
  HierarchyResult bad = threshold_hierarchy_check(fat_alpha);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.inequality[0]);

  Thresholds fat_eta = kDefaultThresholds;
  fat_eta.eta = 1e-10;  // mu^3 no longer dominates 1000 H(eta)
  CHECK_FALSE(threshold_hierarchy_check(fat_eta).ok);

  Thresholds out_of_range = kDefaultThresholds;
  out_of_range.alpha = 0.5;
  CHECK_THROWS_AS(threshold_hierarchy_check(out_of_range), std::invalid_argument);
}

TEST_CASE("random tripartite cylinder density") {
  PairGraph g = random_tripartite_cylinder(100, 2, 9);
  std::uint64_t cross = 3ULL * 100 * 100;
  CHECK(g.edge_count() > cross / 2 - 1500);
  CHECK(g.edge_count() < cross / 2 + 1500);
  for (const auto& e : g.edges()) CHECK(e[0] / 100 != e[1] / 100);
  CHECK(random_tripartite_cylinder(100, 2, 9).edge_count() == g.edge_count());
  CHECK_THROWS_AS(random_tripartite_cylinder(0, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_tripartite_cylinder(10, 0, 1), std::invalid_argument);
}
