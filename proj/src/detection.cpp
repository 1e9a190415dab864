#include "t5census/detection.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace t5census {

namespace {

void check_sweep_cap(int n, int cap) {
  if (cap < 1 || cap > kMaxVertices) throw std::invalid_argument("bad sweep cap");
  if (n > cap)
    throw resource_limit_error("partition sweep over 2^" + std::to_string(n) +
                               " exceeds cap n <= " + std::to_string(cap));
}

std::array<int, 3> sort3(int a, int b, int c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return {a, b, c};
}

// Inconsistency count for one partition, early-exiting past `limit`.
std::uint64_t partition_cost(const std::vector<VertexMask>& edge_masks, VertexMask x,
                             std::uint64_t limit) {
  std::uint64_t d = 0;
  for (VertexMask em : edge_masks) {
    if (std::popcount(em & x) != 2) {
      if (++d > limit) return d;
    }
  }
  return d;
}

std::vector<VertexMask> edge_vertex_masks(const TripleSystem& h) {
  std::vector<VertexMask> out;
  out.reserve(h.edge_count());
  for (const auto& e : h.edges())
    out.push_back((1ULL << e[0]) | (1ULL << e[1]) | (1ULL << e[2]));
  return out;
}

}  // namespace

std::optional<T5Witness> contains_t5(const TripleSystem& h) {
  auto edges = h.edges();
  for (int u = 0; u < h.n(); ++u) {
    for (int v = u + 1; v < h.n(); ++v) {
      VertexMask nb = neighborhood(h, u, v);
      if (std::popcount(nb) < 3) continue;
      for (const auto& e : edges) {
        VertexMask em = (1ULL << e[0]) | (1ULL << e[1]) | (1ULL << e[2]);
        if ((em & nb) != em) continue;
        T5Witness w;
        w.u = u;
        w.v = v;
        w.edge = e;
        for (int k = 0; k < 3; ++k) {
          auto t = sort3(u, v, e[k]);
          w.copy_triples[k] = triple_index(t[0], t[1], t[2]);
        }
        w.copy_triples[3] = triple_index(e[0], e[1], e[2]);
        return w;
      }
    }
  }
  return std::nullopt;
}

bool has_independent_neighborhoods(const TripleSystem& h) {
  return !contains_t5(h).has_value();
}

bool contains_t5_embedding(const TripleSystem& h) {
  int n = h.n();
  if (n < 5) return false;
  std::array<int, 5> sub{};
  // iterate 5-subsets v0<...<v4, then the spine pair {p,q} among them
  for (sub[0] = 0; sub[0] < n - 4; ++sub[0])
    for (sub[1] = sub[0] + 1; sub[1] < n - 3; ++sub[1])
      for (sub[2] = sub[1] + 1; sub[2] < n - 2; ++sub[2])
        for (sub[3] = sub[2] + 1; sub[3] < n - 1; ++sub[3])
          for (sub[4] = sub[3] + 1; sub[4] < n; ++sub[4])
            for (int i = 0; i < 5; ++i)
              for (int j = i + 1; j < 5; ++j) {
                int p = sub[i], q = sub[j];
                int rest[3], r = 0;
                for (int k = 0; k < 5; ++k)
                  if (k != i && k != j) rest[r++] = sub[k];
                bool all = h.has(rest[0], rest[1], rest[2]);
                for (int k = 0; all && k < 3; ++k) {
                  auto t = sort3(p, q, rest[k]);
                  all = h.has(t[0], t[1], t[2]);
                }
                if (all) return true;
              }
  return false;
}

std::vector<std::uint64_t> t5_copy_masks(int n) {
  if (n < 3 || choose3(static_cast<std::uint64_t>(n)) > 64)
    throw std::invalid_argument("copy masks need C(n,3) <= 64");
  std::vector<std::uint64_t> out;
  if (n < 5) return out;
  std::array<int, 5> sub{};
  for (sub[0] = 0; sub[0] < n - 4; ++sub[0])
    for (sub[1] = sub[0] + 1; sub[1] < n - 3; ++sub[1])
      for (sub[2] = sub[1] + 1; sub[2] < n - 2; ++sub[2])
        for (sub[3] = sub[2] + 1; sub[3] < n - 1; ++sub[3])
          for (sub[4] = sub[3] + 1; sub[4] < n; ++sub[4])
            for (int i = 0; i < 5; ++i)
              for (int j = i + 1; j < 5; ++j) {
                int rest[3], r = 0;
                for (int k = 0; k < 5; ++k)
                  if (k != i && k != j) rest[r++] = sub[k];
                std::uint64_t m = 1ULL << triple_index(rest[0], rest[1], rest[2]);
                for (int k = 0; k < 3; ++k) {
                  auto t = sort3(sub[i], sub[j], rest[k]);
                  m |= 1ULL << triple_index(t[0], t[1], t[2]);
                }
                out.push_back(m);
              }
  return out;
}

std::optional<OrderedPartition> is_semibipartite(const TripleSystem& h, int sweep_cap) {
  check_sweep_cap(h.n(), sweep_cap);
  auto edge_masks = edge_vertex_masks(h);
  std::uint64_t limit = (h.n() == 64) ? ~0ULL : (1ULL << h.n());
  for (std::uint64_t x = 0; x < limit; ++x) {
    if (partition_cost(edge_masks, x, 0) == 0)
      return OrderedPartition{h.n(), x};
  }
  return std::nullopt;
}

OptimalPartitionResult optimal_partitions(const TripleSystem& h, std::size_t witness_cap,
                                          int sweep_cap) {
  check_sweep_cap(h.n(), sweep_cap);
  auto edge_masks = edge_vertex_masks(h);
  OptimalPartitionResult out;
  out.d_h = edge_masks.size() + 1;
  std::uint64_t limit = (h.n() == 64) ? ~0ULL : (1ULL << h.n());
  for (std::uint64_t x = 0; x < limit; ++x) {
    std::uint64_t d = partition_cost(edge_masks, x, out.d_h);
    if (d < out.d_h) {
      out.d_h = d;
      out.total_witnesses = 1;
      out.witnesses.clear();
      out.witnesses.push_back(OrderedPartition{h.n(), x});
    } else if (d == out.d_h) {
      ++out.total_witnesses;
      if (out.witnesses.size() < witness_cap)
        out.witnesses.push_back(OrderedPartition{h.n(), x});
    }
  }
  return out;
}

RichEdgeReport rich_edges(const TripleSystem& h, const OrderedPartition& p, double alpha) {
  if (p.n != h.n()) throw std::invalid_argument("partition size differs from system");
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  RichEdgeReport out;
  out.alpha = alpha;
  double threshold = alpha * h.n();
  for (const auto& e : h.edges()) {
    int xs = 0, xv = -1;
    for (int k = 0; k < 3; ++k)
      if (p.in_x(e[k])) { ++xs; xv = e[k]; }
    if (xs != 1) continue;
    int y = -1, z = -1;
    for (int k = 0; k < 3; ++k)
      if (e[k] != xv) (y < 0 ? y : z) = e[k];
    std::uint64_t ly = static_cast<std::uint64_t>(
        std::popcount(pair_link_restricted(h, xv, y, p.x_mask)));
    std::uint64_t lz = static_cast<std::uint64_t>(
        std::popcount(pair_link_restricted(h, xv, z, p.x_mask)));
    if (static_cast<double>(std::max(ly, lz)) <= threshold) continue;
    RichEdge re;
    re.x = xv;
    re.y = y;
    re.z = z;
    re.link_xy = ly;
    re.link_xz = lz;
    if (ly < lz) re.poor = y;
    else if (lz < ly) re.poor = z;
    else re.poor = std::min(y, z);
    out.edges.push_back(re);
  }
  return out;
}

TripleSystem semibipartite_core(const TripleSystem& h, const OrderedPartition& p) {
  PairGraph shadow = shadow_graph(h, p);
  std::vector<std::array<int, 3>> kept;
  for (const auto& e : h.edges()) {
    bool hit = shadow.has(e[0], e[1]) || shadow.has(e[0], e[2]) || shadow.has(e[1], e[2]);
    if (!hit) kept.push_back(e);
  }
  return TripleSystem(h.n(), kept);
}

ConditionFlags classify_conditions(const TripleSystem& h, const Thresholds& t, int sweep_cap) {
  check_sweep_cap(h.n(), sweep_cap);
  int n = h.n();
  auto edge_masks = edge_vertex_masks(h);
  auto edges = h.edges();

  std::uint64_t d_h = edge_masks.size() + 1;
  std::uint64_t limit = (n == 64) ? ~0ULL : (1ULL << n);
  for (std::uint64_t x = 0; x < limit; ++x)
    d_h = std::min(d_h, partition_cost(edge_masks, x, d_h));

  ConditionFlags out;
  double beta_cap = t.beta * n * n;
  double mu_cap = 2.0 * t.mu * n * n;

  auto note = [&out](int cond, const OrderedPartition& p, int vertex,
                     const std::array<int, 3>& edge) {
    bool* flags[5] = {&out.c1, &out.c2, &out.c3, &out.c4, &out.c5};
    if (!*flags[cond - 1]) return;
    *flags[cond - 1] = false;
    ConditionWitness w;
    w.condition = cond;
    w.partition = p;
    w.vertex = vertex;
    w.edge = edge;
    out.witnesses.push_back(w);
  };

  for (std::uint64_t x = 0; x < limit; ++x) {
    if (partition_cost(edge_masks, x, d_h) != d_h) continue;
    OrderedPartition p{n, x};

    std::vector<int> lyy(n, 0);  // pairs inside Y completing each vertex
    for (std::size_t i = 0; i < edges.size(); ++i) {
      int in_x = std::popcount(edge_masks[i] & x);
      const auto& e = edges[i];
      if (in_x == 1) {
        for (int k = 0; k < 3; ++k)
          if (p.in_x(e[k])) ++lyy[e[k]];
        note(5, p, -1, e);
      } else if (in_x == 0) {
        for (int k = 0; k < 3; ++k) ++lyy[e[k]];
        note(4, p, -1, e);
      } else if (in_x == 3) {
        note(4, p, -1, e);
      }
    }
    for (int v = 0; v < n; ++v) {
      if (p.in_x(v)) {
        if (!(lyy[v] < beta_cap)) note(1, p, v, {-1, -1, -1});
      } else {
        if (!(lyy[v] < mu_cap)) note(2, p, v, {-1, -1, -1});
      }
    }
    if (out.c3) {
      auto rich = rich_edges(h, p, t.alpha);
      if (!rich.edges.empty()) {
        const auto& re = rich.edges.front();
        auto e = sort3(re.x, re.y, re.z);
        note(3, p, -1, e);
      }
    }
    if (!out.c1 && !out.c2 && !out.c3 && !out.c4 && !out.c5) break;
  }
  std::sort(out.witnesses.begin(), out.witnesses.end(),
            [](const ConditionWitness& a, const ConditionWitness& b) {
              return a.condition < b.condition;
            });
  return out;
}

}  // namespace t5census
