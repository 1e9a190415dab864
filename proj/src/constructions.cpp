#include "t5census/constructions.hpp"

#include <random>

#include "t5census/detection.hpp"

namespace t5census {

namespace {

// include with probability p via one 64-bit draw; exact at p = 0 and 1
class BernoulliDraw {
 public:
  BernoulliDraw(double p, std::uint64_t seed) : rng_(seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must be in [0,1]");
    if (p >= 1.0) always_ = true;
    else threshold_ = static_cast<std::uint64_t>(p * 18446744073709551616.0);
  }
  bool operator()() {
    std::uint64_t u = rng_();
    return always_ || u < threshold_;
  }

 private:
  std::mt19937_64 rng_;
  std::uint64_t threshold_ = 0;
  bool always_ = false;
};

}  // namespace

B3Result b3(int n) {
  if (n < 3) throw std::invalid_argument("b3 needs n >= 3");
  B3Result best{0, 0};
  for (int a = 0; a <= n; ++a) {
    std::uint64_t v = choose2(static_cast<std::uint64_t>(a)) * static_cast<std::uint64_t>(n - a);
    if (v > best.value) best = {v, a};
  }
  return best;
}

std::pair<TripleSystem, OrderedPartition> build_b3(int n) {
  if (n > kMaxVertices) throw std::invalid_argument("build_b3 needs n <= 64");
  B3Result r = b3(n);
  OrderedPartition p = partition_from_prefix(n, r.a);
  std::vector<std::array<int, 3>> edges;
  for (int x1 = 0; x1 < r.a; ++x1)
    for (int x2 = x1 + 1; x2 < r.a; ++x2)
      for (int y = r.a; y < n; ++y) edges.push_back({x1, x2, y});
  TripleSystem h(n, edges);
  if (h.edge_count() != r.value) throw std::logic_error("b3 edge count mismatch");
  return {h, p};
}

NsFamilyBase ns_family_base(int n) {
  if (n < 9 || n > kMaxVertices) throw std::invalid_argument("family base needs 9 <= n <= 64");
  NsFamilyBase out;
  out.n = n;
  std::uint64_t best = 0;
  int bt = -1;
  for (int t = (n + 1) / 2; t <= n; ++t) {
    std::uint64_t v = choose2(static_cast<std::uint64_t>(t)) * static_cast<std::uint64_t>(n - t);
    if (v > best) { best = v; bt = t; }
  }
  out.t = bt;
  out.s = best;
  out.partition = partition_from_prefix(n, bt);
  // t < 2n/3 + 2 keeps the special 4-set split two-and-two
  if (!(3 * bt < 2 * n + 6) || bt < 2 || bt > n - 2)
    throw std::logic_error("family class size out of range");

  int hi1 = n - 2, hi2 = n - 1;
  out.f_edges = {{{0, 1, hi1}, {0, 1, hi2}, {0, hi1, hi2}, {1, hi1, hi2}}};

  VertexMask special = (1ULL << 0) | (1ULL << 1) | (1ULL << hi1) | (1ULL << hi2);
  VertexMask xm = out.partition.x_mask;
  std::uint64_t pool_size =
      out.s - (static_cast<std::uint64_t>(n - bt) + 4ULL * static_cast<std::uint64_t>(bt - 2) + 2);
  for (int c = 2; c < n && out.g_edges.size() < pool_size; ++c)
    for (int b = 1; b < c && out.g_edges.size() < pool_size; ++b)
      for (int a = 0; a < b && out.g_edges.size() < pool_size; ++a) {
        VertexMask vm = (1ULL << a) | (1ULL << b) | (1ULL << c);
        if (popcount_mask(vm & xm) != 2) continue;
        if (popcount_mask(vm & special) > 1) continue;
        out.g_edges.push_back({a, b, c});
      }
  if (out.g_edges.size() != pool_size) throw std::logic_error("family pool size mismatch");
  return out;
}

static TripleSystem assemble_ns(const NsFamilyBase& base, const std::vector<bool>& take,
                                Reverify reverify) {
  if (take.size() != base.g_edges.size())
    throw std::invalid_argument("subset size differs from pool");
  std::vector<std::array<int, 3>> edges(base.f_edges.begin(), base.f_edges.end());
  for (std::size_t i = 0; i < take.size(); ++i)
    if (take[i]) edges.push_back(base.g_edges[i]);
  TripleSystem h(base.n, edges);
  bool verify = reverify == Reverify::On || (reverify == Reverify::Auto && base.n < 14);
  if (verify) {
    if (contains_t5(h))
      throw std::logic_error("family member contains a T5 copy");
    if (base.n <= kPartitionSweepCap && is_semibipartite(h))
      throw std::logic_error("family member is semi-bipartite");
  }
  return h;
}

TripleSystem ns_sample(const NsFamilyBase& base, std::uint64_t seed, Reverify reverify) {
  std::mt19937_64 rng(seed);
  std::vector<bool> take(base.g_edges.size());
  for (std::size_t i = 0; i < take.size(); ++i) take[i] = rng() & 1u;
  return assemble_ns(base, take, reverify);
}

TripleSystem ns_sample_subset(const NsFamilyBase& base, const std::vector<bool>& take,
                              Reverify reverify) {
  return assemble_ns(base, take, reverify);
}

TripleSystem random_semibipartite(int n, int a, double p, std::uint64_t seed) {
  if (n < 3 || n > kMaxVertices) throw std::invalid_argument("n out of range");
  if (a < 0 || a > n) throw std::invalid_argument("class size out of range");
  BernoulliDraw draw(p, seed);
  std::vector<std::array<int, 3>> edges;
  for (int c = 2; c < n; ++c)
    for (int b = 1; b < c; ++b)
      for (int aa = 0; aa < b; ++aa) {
        int in_x = (aa < a) + (b < a) + (c < a);
        if (in_x != 2) continue;
        if (draw()) edges.push_back({aa, b, c});
      }
  return TripleSystem(n, edges);
}

TripleSystem random_triple_system(int n, double p, std::uint64_t seed) {
  if (n < 3 || n > kMaxVertices) throw std::invalid_argument("n out of range");
  BernoulliDraw draw(p, seed);
  std::vector<std::array<int, 3>> edges;
  for (int c = 2; c < n; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a)
        if (draw()) edges.push_back({a, b, c});
  return TripleSystem(n, edges);
}

}  // namespace t5census
