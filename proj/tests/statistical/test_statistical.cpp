#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "t5census/bounds.hpp"
#include "t5census/constructions.hpp"

using namespace t5census;

// Randomized checks with wide margins. Seeds are fixed so the suite is
// reproducible, but the assertions are statistical, not exact.

TEST_CASE("chernoff tail bound dominates the empirical tail") {
  ChernoffEmpirical e = chernoff_empirical(200, 0.5, 30, 100000, 20260814);
  CHECK(e.trials == 100000);
  CHECK(e.bound == doctest::Approx(std::exp(-900.0 / 200.0)));
  // exp(-4.5) ~ 0.0111; at 1e5 trials the observed rate should sit well below.
  CHECK(e.observed < e.bound);
  CHECK(e.observed == static_cast<double>(e.hits) / static_cast<double>(e.trials));
}

TEST_CASE("planted bipartite-like systems concentrate around p * a(a-1)(n-a)/2") {
  const int n = 9, a = 6;
  const double p = 0.5;
  const double mean = p * (a * (a - 1) / 2.0) * (n - a);  // 22.5
  const double sd3 = 3 * std::sqrt(45 * p * (1 - p));     // 3 sigma for Bin(45, 1/2)
  int inside = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    TripleSystem h = random_semibipartite(n, a, p, seed);
    double c = static_cast<double>(h.edge_count());
    if (std::fabs(c - mean) <= sd3) ++inside;
  }
  // 3 sigma keeps ~99.7% of mass; demand 99% to leave slack.
  CHECK(inside >= 990);
}

TEST_CASE("edge density of the uniform model tracks p") {
  const int n = 12;  // 220 candidate triples
  double total = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed)
    total += static_cast<double>(random_triple_system(n, 0.25, 1000 + seed).edge_count());
  double mean = total / 400.0;
  CHECK(mean == doctest::Approx(55.0).epsilon(0.05));
}
