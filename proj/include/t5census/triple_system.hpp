#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "t5census/common.hpp"

namespace t5census {

// Bitmask over {0..n-1}; n never exceeds 64 for triple systems.
using VertexMask = std::uint64_t;

// Colexicographic rank of a sorted triple a < b < c: C(c,3) + C(b,2) + a.
// Independent of the ambient n, so masks stay stable when n grows.
std::uint64_t triple_index(int a, int b, int c);
std::array<int, 3> triple_unrank(std::uint64_t index);

// Colex rank of a sorted pair a < b: C(b,2) + a.
std::uint64_t pair_index(int a, int b);
std::array<int, 2> pair_unrank(std::uint64_t index);

// A 3-uniform hypergraph on {0..n-1}, 3 <= n <= 64, stored as a packed
// bitmask over all C(n,3) triples in colex order. Values are immutable;
// with_edge/without_edge return modified copies.
class TripleSystem {
 public:
  explicit TripleSystem(int n);
  TripleSystem(int n, const std::vector<std::array<int, 3>>& edges);

  int n() const { return n_; }
  std::uint64_t triple_count() const { return choose3(static_cast<std::uint64_t>(n_)); }
  std::size_t edge_count() const;

  bool has(int a, int b, int c) const;
  bool has_index(std::uint64_t t) const;

  TripleSystem with_edge(int a, int b, int c) const;
  TripleSystem without_edge(int a, int b, int c) const;

  // Edges as sorted triples, ascending colex order.
  std::vector<std::array<int, 3>> edges() const;
  std::vector<std::uint64_t> edge_indices() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  // "n=<n>;edges=<hex>" with the edge mask emitted as 16 hex digits per
  // 64-bit word, word 0 first.
  std::string to_hex_string() const;
  // "n=<n>;triples=a-b-c,..." in colex order.
  std::string to_triples_string() const;
  // Accepts either serialized form.
  static TripleSystem from_string(const std::string& text);

  bool operator==(const TripleSystem& other) const = default;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
  void check_vertex(int v) const;
};

// Ordered partition (X, Y) of {0..n-1}: Y is the complement of X.
struct OrderedPartition {
  int n = 0;
  VertexMask x_mask = 0;

  bool in_x(int v) const { return (x_mask >> v) & 1u; }
  VertexMask y_mask() const;
  int x_size() const;
  int y_size() const { return n - x_size(); }
  std::vector<int> x_vertices() const;
  std::vector<int> y_vertices() const;
  bool operator==(const OrderedPartition&) const = default;
};

OrderedPartition make_partition(int n, VertexMask x_mask);
OrderedPartition partition_from_prefix(int n, int a);  // X = {0..a-1}

// Graph on {0..n-1} stored as a colex pair bitmask. Unlike TripleSystem this
// allows large n (bounds-module work uses tripartite graphs with hundreds of
// vertices per part).
class PairGraph {
 public:
  static constexpr int kMaxN = 4096;

  explicit PairGraph(int n);
  PairGraph(int n, const std::vector<std::array<int, 2>>& edges);

  int n() const { return n_; }
  std::size_t edge_count() const;
  bool has(int a, int b) const;
  void add(int a, int b);  // builder use; treat finished graphs as immutable
  std::vector<std::array<int, 2>> edges() const;  // ascending colex
  const std::vector<std::uint64_t>& words() const { return words_; }
  bool operator==(const PairGraph&) const = default;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

// Edges split by |e ∩ X| == 2 under an ordered partition; d_p counts the
// inconsistent ones. Indices are colex triple ranks, ascending.
struct EdgeClassification {
  std::vector<std::uint64_t> consistent;
  std::vector<std::uint64_t> inconsistent;
  std::uint64_t d_p = 0;
};

EdgeClassification classify_edges(const TripleSystem& h, const OrderedPartition& p);

// N(u,v) = { w : {u,v,w} in h }.
VertexMask neighborhood(const TripleSystem& h, int u, int v);

enum class LinkSides { XX, XY, YY };

// Pairs {u,v} with {x,u,v} in h and u,v located in the requested sides of p.
PairGraph link(const TripleSystem& h, int x, const OrderedPartition& p, LinkSides sides);

// L_W(x,y) = { w in W : {x,y,w} in h } for a vertex subset W.
VertexMask pair_link_restricted(const TripleSystem& h, int x, int y, VertexMask within);

// Union over y in Y of L_{X,Y}(y): every pair has one endpoint in X and one
// in Y and arises from an edge with exactly one point in X.
PairGraph shadow_graph(const TripleSystem& h, const OrderedPartition& p);

int popcount_mask(VertexMask m);
std::vector<int> mask_vertices(VertexMask m, int n);

}  // namespace t5census
