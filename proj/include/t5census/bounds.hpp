#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "t5census/common.hpp"
#include "t5census/thresholds.hpp"
#include "t5census/triple_system.hpp"

namespace t5census {

// H(x) = -x log2 x - (1-x) log2 (1-x) on (0,1).
double binary_entropy(double x);

// Checks C(n, floor(xn)) < 2^{H(x)n} and sum_{i<=floor(xn)} C(n,i) < 2^{H(x)n}
// for x = num/den in (0, 1/2). Exact mode raises both sides to integer powers
// (big-integer comparison); the log-domain path reports margins in bits and
// escalates to exact arithmetic inside a +-1e-9 band when n <= 64.
struct EntropyFactsResult {
  int n = 0;
  Rational x;
  bool single_holds = false;
  bool tail_holds = false;
  double single_margin_bits = 0;  // H(x)n - log2 lhs
  double tail_margin_bits = 0;
  bool exact = false;
};

EntropyFactsResult entropy_facts_check(int n, const Rational& x);
EntropyFactsResult entropy_facts_logdomain(int n, double x);

// exp(-a^2 / (2pm)): tail bound for S ~ Bin(m, p) falling a below its mean.
double chernoff_bound(std::uint64_t m, double p, double a);

struct ChernoffEmpirical {
  double bound = 0;
  double observed = 0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
};

ChernoffEmpirical chernoff_empirical(std::uint64_t m, double p, double a,
                                     std::uint64_t trials, std::uint64_t seed);

// Maximal matching built greedily over pairs in colex order. Throws
// std::logic_error if the size ever falls below ceil(edges/(2n)).
std::vector<std::array<int, 2>> greedy_matching(const PairGraph& g);

// Count of graphs on [N] containing the fixed matching {01, 23, ...} (m
// edges) in which that matching is maximum, against the closed-form bound
// 2^{2m^2-2m} * (N - 2m + 2^{N-2m+1})^m. Maximum matchings are decided by
// exhaustive search over edge subsets that stay matchings. 2m <= N <= 8.
struct MatchCountResult {
  int n_vertices = 0;
  int m = 0;
  std::uint64_t exact_count = 0;
  std::uint64_t bound = 0;
};

MatchCountResult max_matching_count(int n_vertices, int m);

// Triangles with one vertex in each part, counted by bit-parallel
// intersection of adjacency rows. Edges inside a part (or touching a vertex
// outside all parts) are rejected.
std::uint64_t triangle_count_tripartite(const std::vector<int>& part0,
                                        const std::vector<int>& part1,
                                        const std::vector<int>& part2,
                                        const PairGraph& g);

// Three-part graph on parts {0..m-1}, {m..2m-1}, {2m..3m-1}: each cross pair
// kept with probability 1/l, deterministically per seed.
PairGraph random_tripartite_cylinder(int m, int l, std::uint64_t seed);

enum class ConditionStatus { HoldsExact, HoldsUnrefuted, Violated, Skipped };

std::string condition_status_name(ConditionStatus s);

struct DensityConditionReport {
  ConditionStatus status = ConditionStatus::Skipped;
  double lhs = 0;  // worst (minimal) counted value found
  double rhs = 0;  // required strict lower bound at that worst case
  std::string witness;  // serialized sets for violations / worst case
};

struct LowerDensityOptions {
  int exact_side_limit = 20;  // exact subset enumeration up to this side size
  int restarts = 8;           // adversarial search restarts
  int iterations = 200;       // greedy descent steps per restart
  std::uint64_t seed = 1;
};

// mu-lower-density conditions for (h, p):
//   (i)  matchings G1 in X, graphs G2 in X x Y: count > |G1||G2|/72
//   (ii) graphs G1 in X, matchings G2 in Y:     count > |G1||G2|/8
//   (iii) A_X, A_Y with |A_X|,|A_Y| >= mu*n:    count > |A_X|^2|A_Y|/8
//   (iv) Y', {X_y} with |Y'| >= 2mu*n, |X_y| > 200mu*n: count > 10000 mu^3 n^3
//   (v)  ||Y| - n/3| < mu*n
// (iii)-(v) are decided exactly when the sides fit the exact limit; (i)-(ii)
// only ever report HoldsUnrefuted or Violated (adversarial search).
struct LowerDensityReport {
  double mu = 0;
  std::array<DensityConditionReport, 5> conditions{};
  bool any_violated() const;
};

LowerDensityReport lower_density_check(const TripleSystem& h, const OrderedPartition& p,
                                       double mu, const LowerDensityOptions& opts = {});

// log2 S(n) >= (2n^3 - 3n^2 - 3n)/27, compared exactly as
// S(n)^27 >= 2^{2n^3-3n^2-3n} when an exact S(n) is supplied. Also checks
// the construction exponent C(a,2)(n-a) at a = ceil(2n/3) against the same
// formula (pure integer comparison), and records the recursion
// S(n)^9 >= S(n-1)^9 * 2^{2n^2-5n+1} when both counts are supplied.
struct SBoundResult {
  int n = 0;
  double bound_log2 = 0;            // (2n^3-3n^2-3n)/27
  bool construction_ok = false;     // 27*C(a,2)(n-a) >= 2n^3-3n^2-3n
  std::optional<bool> exact_holds;  // set when exact S(n) given
  std::optional<bool> recursion_holds;  // set when S(n-1) also given
};

SBoundResult s_bound_check(int n, std::optional<u128> exact_s = std::nullopt,
                           std::optional<u128> exact_s_prev = std::nullopt);

// Hierarchy a valid tuple must satisfy:
//   0.01 > H(alpha)
//   alpha^2 > 100 (H(beta) + H(2 mu) + mu^2)
//   beta > 100 H(2 mu)
//   mu^3 >= 1000 H(eta)
struct HierarchyResult {
  bool ok = false;
  std::array<bool, 4> inequality{};
  std::array<double, 4> lhs{};
  std::array<double, 4> rhs{};
};

HierarchyResult threshold_hierarchy_check(const Thresholds& t);

}  // namespace t5census
