#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "t5census/triple_system.hpp"

namespace t5census {

// b3(n) = max over a of C(a,2)*(n-a); smallest maximizing a.
struct B3Result {
  std::uint64_t value = 0;
  int a = 0;
};

B3Result b3(int n);  // n >= 3

// The extremal semi-bipartite system: X = {0..a-1}, every triple with
// exactly two points in X.
std::pair<TripleSystem, OrderedPartition> build_b3(int n);

// Base data for the non-semi-bipartite T5-free family. X = {0..t-1} where
// t maximizes C(t,2)*(n-t) subject to t >= n-t (ties to smaller t). The
// special 4-set is {0,1,n-2,n-1}; f_edges are its four triples. Every pool
// edge has exactly two points in X and at most one special point; the pool
// keeps the first s-(n-t+4(t-2)+2) qualifying triples in colex order.
struct NsFamilyBase {
  int n = 0;
  int t = 0;
  std::uint64_t s = 0;  // C(t,2)*(n-t)
  OrderedPartition partition;
  std::array<std::array<int, 3>, 4> f_edges{};
  std::vector<std::array<int, 3>> g_edges;
};

NsFamilyBase ns_family_base(int n);  // 9 <= n <= 64

enum class Reverify { Auto, On, Off };  // Auto: on below n = 14

// Family member F ∪ G' for a seed-drawn or explicit subset G' of the pool.
// Reverification asserts the member is T5-free and not semi-bipartite.
TripleSystem ns_sample(const NsFamilyBase& base, std::uint64_t seed,
                       Reverify reverify = Reverify::Auto);
TripleSystem ns_sample_subset(const NsFamilyBase& base, const std::vector<bool>& take,
                              Reverify reverify = Reverify::Auto);

// Each triple with exactly two points in {0..a-1} kept with probability p.
TripleSystem random_semibipartite(int n, int a, double p, std::uint64_t seed);

// Each of the C(n,3) triples kept with probability p.
TripleSystem random_triple_system(int n, double p, std::uint64_t seed);

}  // namespace t5census
