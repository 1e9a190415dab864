#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "t5census/thresholds.hpp"
#include "t5census/triple_system.hpp"

namespace t5census {

// Partition sweeps enumerate all 2^n ordered partitions; refuse above this
// unless the caller raises the cap explicitly.
inline constexpr int kPartitionSweepCap = 24;
inline constexpr std::size_t kDefaultWitnessCap = 64;

// A concrete T5 copy: pair {u,v} whose neighborhood contains the edge
// {a,b,c}; copy_triples are the colex ranks of its four edges.
struct T5Witness {
  int u = 0;
  int v = 0;
  std::array<int, 3> edge{};
  std::array<std::uint64_t, 4> copy_triples{};
};

// Pair-neighborhood criterion: some pair (u,v) has an edge of h inside
// N(u,v). First witness in scan order (lex pairs, then colex edges).
std::optional<T5Witness> contains_t5(const TripleSystem& h);

// True iff every pair neighborhood is an independent set.
bool has_independent_neighborhoods(const TripleSystem& h);

// Independent containment route: explicit search for an injective T5 image
// (every 5-subset, every choice of the spine pair). Used to cross-check the
// criterion above; intentionally shares no code with it.
bool contains_t5_embedding(const TripleSystem& h);

// All T5 copies on {0..n-1} as uint64 edge masks; requires C(n,3) <= 64,
// i.e. n <= 8. Census and extremal search work on these masks directly.
std::vector<std::uint64_t> t5_copy_masks(int n);

// First ordered partition (ascending x_mask) with zero inconsistent edges.
std::optional<OrderedPartition> is_semibipartite(const TripleSystem& h,
                                                 int sweep_cap = kPartitionSweepCap);

struct OptimalPartitionResult {
  std::uint64_t d_h = 0;                     // min inconsistent count
  std::vector<OrderedPartition> witnesses;   // ascending x_mask, truncated
  std::uint64_t total_witnesses = 0;         // exact count of optima
};

// Exact minimum of d_p over all 2^n ordered partitions, with partial-count
// pruning. Witness list is capped; the total is exact.
OptimalPartitionResult optimal_partitions(const TripleSystem& h,
                                          std::size_t witness_cap = kDefaultWitnessCap,
                                          int sweep_cap = kPartitionSweepCap);

// Edge {x,y,z} with x in X, y,z in Y whose larger restricted link into X
// exceeds alpha*n. The poor vertex is the one with the smaller (or tied)
// link; ties resolve to the smaller label.
struct RichEdge {
  int x = 0;
  int y = 0;  // y < z
  int z = 0;
  int poor = 0;
  std::uint64_t link_xy = 0;  // |L_X(x,y)|
  std::uint64_t link_xz = 0;
};

struct RichEdgeReport {
  double alpha = 0;
  std::vector<RichEdge> edges;  // ascending colex order of {x,y,z}
};

RichEdgeReport rich_edges(const TripleSystem& h, const OrderedPartition& p, double alpha);

// Removes every edge containing a shadow-graph pair. The result has no edge
// with exactly one point in X.
TripleSystem semibipartite_core(const TripleSystem& h, const OrderedPartition& p);

struct ConditionWitness {
  int condition = 0;  // 1..5
  OrderedPartition partition;
  int vertex = -1;                  // conditions 1,2
  std::array<int, 3> edge{-1, -1, -1};  // conditions 3,4,5
};

// Structural conditions evaluated over every optimal partition:
//   (1) each x in X has |L_{Y,Y}(x)| < beta*n^2
//   (2) each y in Y has |L_{Y,Y}(y)| < 2*mu*n^2
//   (3) no alpha-rich edge
//   (4) no inconsistent edge with |e∩X| in {0,3}
//   (5) no inconsistent edge with |e∩X| = 1
struct ConditionFlags {
  bool c1 = true, c2 = true, c3 = true, c4 = true, c5 = true;
  std::vector<ConditionWitness> witnesses;  // first violation per condition

  bool all() const { return c1 && c2 && c3 && c4 && c5; }
};

ConditionFlags classify_conditions(const TripleSystem& h, const Thresholds& t,
                                   int sweep_cap = kPartitionSweepCap);

}  // namespace t5census
