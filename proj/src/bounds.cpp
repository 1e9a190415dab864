#include "t5census/bounds.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace t5census {

namespace {

using boost::multiprecision::cpp_int;

cpp_int big_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  cpp_int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

cpp_int big_pow(cpp_int base, std::uint64_t exp) {
  cpp_int r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

double log2_binomial(int n, int k) {
  return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::log(2.0);
}

// smallest integer >= x / strictly greater than x
int least_ge(double x) {
  int k = static_cast<int>(std::ceil(x));
  while (k < x) ++k;
  while (k - 1 >= x) --k;
  return k;
}
int least_gt(double x) {
  int k = static_cast<int>(std::floor(x)) + 1;
  while (k <= x) ++k;
  while (k - 1 > x) --k;
  return k;
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  return os.str();
}

class SubsetDraw {
 public:
  explicit SubsetDraw(std::uint64_t seed) : rng_(seed) {}
  std::mt19937_64& rng() { return rng_; }
  // k distinct values from [0, n)
  std::vector<int> sample(int n, int k) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < k; ++i) {
      int j = i + static_cast<int>(rng_() % static_cast<std::uint64_t>(n - i));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

double binary_entropy(double x) {
  if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("entropy domain is (0,1)");
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

static EntropyFactsResult entropy_exact(int n, std::int64_t p, std::int64_t q) {
  EntropyFactsResult out;
  out.n = n;
  out.x = Rational{p, q};
  out.exact = true;
  int k = static_cast<int>((p * n) / q);
  cpp_int base = big_pow(big_pow(cpp_int(p), p) * big_pow(cpp_int(q - p), q - p),
                         static_cast<std::uint64_t>(n));
  cpp_int rhs = big_pow(cpp_int(q), static_cast<std::uint64_t>(q) * n);
  cpp_int single = big_binomial(n, k);
  cpp_int tail = 0;
  for (int i = 0; i <= k; ++i) tail += big_binomial(n, i);
  out.single_holds = big_pow(single, q) * base < rhs;
  out.tail_holds = big_pow(tail, q) * base < rhs;
  double hn = binary_entropy(static_cast<double>(p) / q) * n;
  out.single_margin_bits = hn - log2_binomial(n, k);
  double tl = 0;
  for (int i = 0; i <= k; ++i) tl += std::exp2(log2_binomial(n, i) - log2_binomial(n, k));
  out.tail_margin_bits = hn - (log2_binomial(n, k) + std::log2(tl));
  return out;
}

EntropyFactsResult entropy_facts_check(int n, const Rational& x) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (x.den <= 0 || x.num <= 0 || 2 * x.num >= x.den)
    throw std::invalid_argument("x must satisfy 0 < x < 1/2");
  if (n <= 64 && x.den <= 1000) return entropy_exact(n, x.num, x.den);
  return entropy_facts_logdomain(n, rational_value(x));
}

EntropyFactsResult entropy_facts_logdomain(int n, double x) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (!(x > 0.0 && x < 0.5)) throw std::invalid_argument("x must satisfy 0 < x < 1/2");
  EntropyFactsResult out;
  out.n = n;
  out.exact = false;
  for (std::int64_t q = 1; q <= 1000 && out.x.num == 0; ++q) {
    std::int64_t p = std::llround(x * static_cast<double>(q));
    if (p > 0 && std::fabs(static_cast<double>(p) / static_cast<double>(q) - x) < 1e-12)
      out.x = {p, q};
  }
  if (out.x.num == 0) {
    std::int64_t den = 1000000000, num = std::llround(x * static_cast<double>(den));
    std::int64_t g = std::gcd(num, den);
    out.x = {num / g, den / g};
  }
  int k = static_cast<int>(std::floor(x * n));
  double hn = binary_entropy(x) * n;
  double lb = (k == 0) ? 0.0 : log2_binomial(n, k);
  out.single_margin_bits = hn - lb;
  double tl = 0;
  for (int i = 0; i <= k; ++i) tl += std::exp2(log2_binomial(n, i) - lb);
  out.tail_margin_bits = hn - (lb + std::log2(tl));
  out.single_holds = out.single_margin_bits > 0;
  out.tail_holds = out.tail_margin_bits > 0;

  // inside the slack band, escalate to exact arithmetic when x is a small rational
  constexpr double kBand = 1e-9;
  if (n <= 64 &&
      (std::fabs(out.single_margin_bits) < kBand || std::fabs(out.tail_margin_bits) < kBand)) {
    for (std::int64_t q = 2; q <= 1000; ++q) {
      std::int64_t p = static_cast<std::int64_t>(std::llround(x * static_cast<double>(q)));
      if (p <= 0 || 2 * p >= q) continue;
      if (std::fabs(static_cast<double>(p) / static_cast<double>(q) - x) < 1e-15)
        return entropy_exact(n, p, q);
    }
  }
  return out;
}

double chernoff_bound(std::uint64_t m, double p, double a) {
  if (m == 0 || !(p > 0.0 && p <= 1.0) || !(a > 0.0))
    throw std::invalid_argument("need m >= 1, p in (0,1], a > 0");
  return std::exp(-(a * a) / (2.0 * p * static_cast<double>(m)));
}

ChernoffEmpirical chernoff_empirical(std::uint64_t m, double p, double a, std::uint64_t trials,
                                     std::uint64_t seed) {
  ChernoffEmpirical out;
  out.bound = chernoff_bound(m, p, a);
  out.trials = trials;
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  std::uint64_t threshold = p >= 1.0 ? UINT64_MAX : static_cast<std::uint64_t>(p * 18446744073709551616.0);
  double cutoff = p * static_cast<double>(m) - a;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(mix_seed(seed, t));
    std::uint64_t s = 0;
    for (std::uint64_t i = 0; i < m; ++i)
      if (p >= 1.0 || rng() < threshold) ++s;
    if (static_cast<double>(s) < cutoff) ++out.hits;
  }
  out.observed = static_cast<double>(out.hits) / static_cast<double>(trials);
  return out;
}

std::vector<std::array<int, 2>> greedy_matching(const PairGraph& g) {
  std::vector<std::array<int, 2>> matching;
  std::vector<char> used(g.n(), 0);
  for (const auto& e : g.edges()) {
    if (used[e[0]] || used[e[1]]) continue;
    used[e[0]] = used[e[1]] = 1;
    matching.push_back(e);
  }
  std::uint64_t lhs = 2ULL * static_cast<std::uint64_t>(g.n()) * matching.size();
  if (lhs < g.edge_count())
    throw std::logic_error("greedy matching fell below edges/(2n)");
  return matching;
}

MatchCountResult max_matching_count(int n_vertices, int m) {
  if (m < 0 || 2 * m > n_vertices) throw std::invalid_argument("need 2m <= N");
  if (n_vertices < 2 || n_vertices > 8)
    throw resource_limit_error("exhaustive matching census limited to 2 <= N <= 8");
  MatchCountResult out;
  out.n_vertices = n_vertices;
  out.m = m;

  std::vector<std::array<int, 2>> pairs;
  for (int b = 1; b < n_vertices; ++b)
    for (int a = 0; a < b; ++a) pairs.push_back({a, b});
  int np = static_cast<int>(pairs.size());

  std::uint32_t forced = 0;
  for (int i = 0; i < m; ++i)
    forced |= 1u << pair_index(2 * i, 2 * i + 1);
  std::vector<int> free_bits;
  for (int i = 0; i < np; ++i)
    if (!((forced >> i) & 1u)) free_bits.push_back(i);

  // true iff some matching of size `need` exists among the listed edges
  auto has_matching = [&](const std::vector<int>& edge_idx, int need) {
    auto rec = [&](auto&& self, std::size_t start, unsigned used, int left) -> bool {
      if (left == 0) return true;
      if (edge_idx.size() - start < static_cast<std::size_t>(left)) return false;
      for (std::size_t i = start; i < edge_idx.size(); ++i) {
        const auto& e = pairs[edge_idx[i]];
        unsigned em = (1u << e[0]) | (1u << e[1]);
        if (used & em) continue;
        if (self(self, i + 1, used | em, left - 1)) return true;
      }
      return false;
    };
    return rec(rec, 0, 0u, need);
  };

  std::uint64_t count = 0;
  std::vector<int> edge_idx;
  for (std::uint64_t sub = 0; sub < (1ULL << free_bits.size()); ++sub) {
    std::uint32_t g = forced;
    std::uint64_t s = sub;
    int k = 0;
    while (s) {
      if (s & 1) g |= 1u << free_bits[k];
      s >>= 1;
      ++k;
    }
    edge_idx.clear();
    for (int i = 0; i < np; ++i)
      if ((g >> i) & 1u) edge_idx.push_back(i);
    if (!has_matching(edge_idx, m + 1)) ++count;
  }
  out.exact_count = count;

  int d = n_vertices - 2 * m;
  std::uint64_t inner = static_cast<std::uint64_t>(d) + (1ULL << (d + 1));
  std::uint64_t bound = 1ULL << (2 * m * m - 2 * m);
  for (int i = 0; i < m; ++i) bound *= inner;
  out.bound = bound;
  return out;
}

std::uint64_t triangle_count_tripartite(const std::vector<int>& part0,
                                        const std::vector<int>& part1,
                                        const std::vector<int>& part2, const PairGraph& g) {
  int n = g.n();
  std::vector<int> side(n, -1);
  const std::vector<int>* parts[3] = {&part0, &part1, &part2};
  std::size_t m = part0.size();
  if (part1.size() != m || part2.size() != m || m == 0)
    throw std::invalid_argument("parts must be nonempty and equal-sized");
  for (int s = 0; s < 3; ++s)
    for (int v : *parts[s]) {
      if (v < 0 || v >= n || side[v] != -1)
        throw std::invalid_argument("parts must be disjoint vertex sets");
      side[v] = s;
    }

  std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n) * words, 0);
  for (const auto& e : g.edges()) {
    if (side[e[0]] < 0 || side[e[1]] < 0 || side[e[0]] == side[e[1]])
      throw std::invalid_argument("graph is not tripartite over the given parts");
    adj[static_cast<std::size_t>(e[0]) * words + (e[1] >> 6)] |= 1ULL << (e[1] & 63);
    adj[static_cast<std::size_t>(e[1]) * words + (e[0] >> 6)] |= 1ULL << (e[0] & 63);
  }
  std::vector<std::uint64_t> mask1(words, 0);
  for (int v : part1) mask1[v >> 6] |= 1ULL << (v & 63);

  std::uint64_t triangles = 0;
  for (int u : part0) {
    const std::uint64_t* row_u = &adj[static_cast<std::size_t>(u) * words];
    for (int w : part2) {
      if (!((row_u[w >> 6] >> (w & 63)) & 1u)) continue;
      const std::uint64_t* row_w = &adj[static_cast<std::size_t>(w) * words];
      for (std::size_t k = 0; k < words; ++k)
        triangles += static_cast<std::uint64_t>(std::popcount(row_u[k] & row_w[k] & mask1[k]));
    }
  }
  return triangles;
}

PairGraph random_tripartite_cylinder(int m, int l, std::uint64_t seed) {
  if (m < 1 || 3 * m > PairGraph::kMaxN) throw std::invalid_argument("part size out of range");
  if (l < 1) throw std::invalid_argument("edge density denominator must be >= 1");
  PairGraph g(3 * m);
  std::mt19937_64 rng(seed);
  std::uint64_t threshold =
      (l == 1) ? UINT64_MAX : static_cast<std::uint64_t>(18446744073709551616.0 / l);
  for (int b = 1; b < 3 * m; ++b)
    for (int a = 0; a < b; ++a) {
      if (a / m == b / m) continue;
      if (l == 1 || rng() < threshold) g.add(a, b);
    }
  return g;
}

std::string condition_status_name(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::HoldsExact: return "HOLDS-EXACT";
    case ConditionStatus::HoldsUnrefuted: return "HOLDS-UNREFUTED";
    case ConditionStatus::Violated: return "VIOLATED";
    case ConditionStatus::Skipped: return "SKIPPED";
  }
  return "UNKNOWN";
}

bool LowerDensityReport::any_violated() const {
  for (const auto& c : conditions)
    if (c.status == ConditionStatus::Violated) return true;
  return false;
}

namespace {

struct DensityContext {
  const TripleSystem& h;
  std::vector<int> xs, ys;
  int n;
  double mu;
  const LowerDensityOptions& opts;
};

// condition (iii): edges with two points in A_X, one in A_Y
void check_iii(const DensityContext& c, DensityConditionReport& rep) {
  int nx = static_cast<int>(c.xs.size());
  int ny = static_cast<int>(c.ys.size());
  int min_ax = std::max(2, least_ge(c.mu * c.n));
  int min_ay = std::max(1, least_ge(c.mu * c.n));
  if (min_ax > nx || min_ay > ny) {
    rep.status = ConditionStatus::HoldsExact;
    rep.witness = "vacuous: no qualifying subsets";
    return;
  }
  if (nx > c.opts.exact_side_limit || ny > c.opts.exact_side_limit) {
    rep.status = ConditionStatus::Skipped;
    rep.witness = "sides exceed exact enumeration limit";
    return;
  }
  // per y, pairs of X-indices completing it
  std::vector<std::vector<std::uint64_t>> pair_masks(ny);
  for (int yi = 0; yi < ny; ++yi)
    for (int j = 1; j < nx; ++j)
      for (int i = 0; i < j; ++i) {
        int a = c.xs[i], b = c.xs[j], y = c.ys[yi];
        int t[3] = {a, b, y};
        std::sort(t, t + 3);
        if (c.h.has(t[0], t[1], t[2]))
          pair_masks[yi].push_back((1ULL << i) | (1ULL << j));
      }

  double worst = 1e300;
  rep.status = ConditionStatus::HoldsExact;
  std::vector<int> cy(ny), order(ny);
  for (std::uint64_t A = 0; A < (1ULL << nx); ++A) {
    int sa = std::popcount(A);
    if (sa < min_ax) continue;
    for (int yi = 0; yi < ny; ++yi) {
      int cnt = 0;
      for (std::uint64_t pm : pair_masks[yi])
        if ((pm & ~A) == 0) ++cnt;
      cy[yi] = cnt;
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return cy[a] < cy[b]; });
    long long prefix = 0;
    for (int k = 1; k <= ny; ++k) {
      prefix += cy[order[k - 1]];
      if (k < min_ay) continue;
      double rhs = static_cast<double>(sa) * sa * k / 8.0;
      double slack = static_cast<double>(prefix) - rhs;
      if (slack < worst) {
        worst = slack;
        rep.lhs = static_cast<double>(prefix);
        rep.rhs = rhs;
        std::vector<int> ax = mask_vertices(A, nx), ay;
        for (int& v : ax) v = c.xs[v];
        for (int i = 0; i < k; ++i) ay.push_back(c.ys[order[i]]);
        std::sort(ay.begin(), ay.end());
        rep.witness = "A_X=[" + join_ints(ax) + "] A_Y=[" + join_ints(ay) + "]";
      }
      if (!(static_cast<double>(prefix) > rhs)) rep.status = ConditionStatus::Violated;
    }
  }
}

// condition (iv): per-y subsets X_y, adversary minimizes the edge count
void check_iv(const DensityContext& c, DensityConditionReport& rep) {
  int nx = static_cast<int>(c.xs.size());
  int ny = static_cast<int>(c.ys.size());
  int txy = std::max(2, least_gt(200.0 * c.mu * c.n));  // |X_y| > 200 mu n
  int sy = std::max(1, least_ge(2.0 * c.mu * c.n));     // |Y'| >= 2 mu n
  if (txy > nx || sy > ny) {
    rep.status = ConditionStatus::HoldsExact;
    rep.witness = "vacuous: no qualifying subsets";
    return;
  }
  if (nx > c.opts.exact_side_limit || ny > c.opts.exact_side_limit) {
    rep.status = ConditionStatus::Skipped;
    rep.witness = "sides exceed exact enumeration limit";
    return;
  }
  std::vector<std::vector<std::uint64_t>> pair_masks(ny);
  for (int yi = 0; yi < ny; ++yi)
    for (int j = 1; j < nx; ++j)
      for (int i = 0; i < j; ++i) {
        int a = c.xs[i], b = c.xs[j], y = c.ys[yi];
        int t[3] = {a, b, y};
        std::sort(t, t + 3);
        if (c.h.has(t[0], t[1], t[2]))
          pair_masks[yi].push_back((1ULL << i) | (1ULL << j));
      }
  // adding vertices to X_y never removes counted pairs, so the per-y minimum
  // is attained at size exactly txy (Gosper iteration over combinations)
  std::vector<long long> best(ny);
  std::vector<std::uint64_t> best_mask(ny);
  for (int yi = 0; yi < ny; ++yi) {
    long long mn = LLONG_MAX;
    std::uint64_t keep = 0;
    std::uint64_t sub = (1ULL << txy) - 1;
    std::uint64_t top = 1ULL << nx;
    while (sub < top) {
      long long cnt = 0;
      for (std::uint64_t pm : pair_masks[yi])
        if ((pm & ~sub) == 0) ++cnt;
      if (cnt < mn) { mn = cnt; keep = sub; }
      std::uint64_t lo = sub & (~sub + 1);
      std::uint64_t left = sub + lo;
      std::uint64_t changed = sub ^ left;
      sub = left | ((changed / lo) >> 2);
      if (left == 0) break;
    }
    best[yi] = mn;
    best_mask[yi] = keep;
  }
  std::vector<int> order(ny);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return best[a] < best[b]; });
  long long lhs = 0;
  std::vector<int> chosen;
  for (int i = 0; i < sy; ++i) {
    lhs += best[order[i]];
    chosen.push_back(c.ys[order[i]]);
  }
  std::sort(chosen.begin(), chosen.end());
  double rhs = 10000.0 * c.mu * c.mu * c.mu * c.n * c.n * c.n;
  rep.lhs = static_cast<double>(lhs);
  rep.rhs = rhs;
  rep.witness = "Y'=[" + join_ints(chosen) + "]";
  rep.status = (static_cast<double>(lhs) > rhs) ? ConditionStatus::HoldsExact
                                                : ConditionStatus::Violated;
}

// condition (i): matching G1 in X, cross graph G2 in X x Y, threshold /72
void check_i(const DensityContext& c, DensityConditionReport& rep) {
  int nx = static_cast<int>(c.xs.size());
  int ny = static_cast<int>(c.ys.size());
  int s1 = least_gt(c.mu * c.n);
  int s2 = least_gt(c.mu * c.n * c.n);
  if (2 * s1 > nx || s2 > nx * ny) {
    rep.status = ConditionStatus::HoldsUnrefuted;
    rep.witness = "vacuous: no qualifying G1/G2";
    return;
  }
  std::vector<std::vector<std::uint64_t>> cross_link(
      static_cast<std::size_t>(nx), std::vector<std::uint64_t>(static_cast<std::size_t>(ny), 0));
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b) {
      std::uint64_t mask = 0;
      for (int w = 0; w < nx; ++w) {
        if (w == a) continue;
        int t[3] = {c.xs[a], c.xs[w], c.ys[b]};
        std::sort(t, t + 3);
        if (c.h.has(t[0], t[1], t[2])) mask |= 1ULL << w;
      }
      cross_link[a][b] = mask;
    }

  double rhs = static_cast<double>(s1) * s2 / 72.0;
  rep.rhs = rhs;
  auto count = [&](const std::vector<std::array<int, 2>>& g1,
                   const std::vector<std::array<int, 2>>& g2) {
    long long total = 0;
    for (const auto& ab : g2) {
      std::uint64_t link = cross_link[ab[0]][ab[1]];
      for (const auto& uv : g1)
        if (((link >> uv[0]) & 1u) && ((link >> uv[1]) & 1u)) ++total;
    }
    return total;
  };

  long long best = LLONG_MAX;
  std::vector<std::array<int, 2>> best_g1, best_g2;
  for (int r = 0; r < c.opts.restarts; ++r) {
    SubsetDraw draw(mix_seed(c.opts.seed, 100 + r));
    auto verts = draw.sample(nx, 2 * s1);
    std::vector<std::array<int, 2>> g1;
    for (int i = 0; i < s1; ++i) g1.push_back({verts[2 * i], verts[2 * i + 1]});
    auto flat = draw.sample(nx * ny, s2);
    std::vector<std::array<int, 2>> g2;
    for (int f : flat) g2.push_back({f / ny, f % ny});

    long long cur = count(g1, g2);
    for (int it = 0; it < c.opts.iterations && cur > 0; ++it) {
      std::uint64_t roll = draw.rng()();
      if (roll & 1) {
        int slot = static_cast<int>((roll >> 1) % g2.size());
        std::array<int, 2> cand{static_cast<int>((roll >> 17) % nx),
                                static_cast<int>((roll >> 41) % ny)};
        if (std::find(g2.begin(), g2.end(), cand) != g2.end()) continue;
        auto old = g2[slot];
        g2[slot] = cand;
        long long next = count(g1, g2);
        if (next <= cur) cur = next;
        else g2[slot] = old;
      } else {
        int slot = static_cast<int>((roll >> 1) % g1.size());
        std::vector<char> used(nx, 0);
        for (int i = 0; i < s1; ++i)
          if (i != slot) used[g1[i][0]] = used[g1[i][1]] = 1;
        int u = static_cast<int>((roll >> 17) % nx);
        int v = static_cast<int>((roll >> 41) % nx);
        if (u == v || used[u] || used[v]) continue;
        auto old = g1[slot];
        g1[slot] = {u, v};
        long long next = count(g1, g2);
        if (next <= cur) cur = next;
        else g1[slot] = old;
      }
    }
    if (cur < best) { best = cur; best_g1 = g1; best_g2 = g2; }
    if (static_cast<double>(best) <= rhs) break;
  }
  rep.lhs = static_cast<double>(best);
  std::ostringstream w;
  w << "G1=";
  for (const auto& uv : best_g1) w << '(' << c.xs[uv[0]] << ',' << c.xs[uv[1]] << ')';
  w << " G2=";
  for (const auto& ab : best_g2) w << '(' << c.xs[ab[0]] << ',' << c.ys[ab[1]] << ')';
  rep.witness = w.str();
  rep.status = (static_cast<double>(best) > rhs) ? ConditionStatus::HoldsUnrefuted
                                                 : ConditionStatus::Violated;
}

// condition (ii): graph G1 in X, matching G2 in Y, threshold /8
void check_ii(const DensityContext& c, DensityConditionReport& rep) {
  int nx = static_cast<int>(c.xs.size());
  int ny = static_cast<int>(c.ys.size());
  int s1 = least_gt(c.mu * c.n * c.n);
  int s2 = least_gt(c.mu * c.n);
  std::uint64_t px = choose2(static_cast<std::uint64_t>(nx));
  if (static_cast<std::uint64_t>(s1) > px || 2 * s2 > ny) {
    rep.status = ConditionStatus::HoldsUnrefuted;
    rep.witness = "vacuous: no qualifying G1/G2";
    return;
  }
  std::vector<std::array<int, 2>> xpairs;
  for (int j = 1; j < nx; ++j)
    for (int i = 0; i < j; ++i) xpairs.push_back({i, j});
  int np = static_cast<int>(xpairs.size());
  // per y, bitset over X-pairs completed by it
  std::size_t words = (static_cast<std::size_t>(np) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> ybits(ny, std::vector<std::uint64_t>(words, 0));
  for (int yi = 0; yi < ny; ++yi)
    for (int pi = 0; pi < np; ++pi) {
      int t[3] = {c.xs[xpairs[pi][0]], c.xs[xpairs[pi][1]], c.ys[yi]};
      std::sort(t, t + 3);
      if (c.h.has(t[0], t[1], t[2])) ybits[yi][pi >> 6] |= 1ULL << (pi & 63);
    }

  double rhs = static_cast<double>(s1) * s2 / 8.0;
  rep.rhs = rhs;
  auto count = [&](const std::vector<std::uint64_t>& g1,
                   const std::vector<std::array<int, 2>>& g2) {
    long long total = 0;
    for (const auto& ab : g2)
      for (std::size_t k = 0; k < words; ++k)
        total += std::popcount(g1[k] & ybits[ab[0]][k] & ybits[ab[1]][k]);
    return total;
  };

  long long best = LLONG_MAX;
  std::vector<std::uint64_t> best_g1;
  std::vector<std::array<int, 2>> best_g2;
  for (int r = 0; r < c.opts.restarts; ++r) {
    SubsetDraw draw(mix_seed(c.opts.seed, 200 + r));
    auto chosen = draw.sample(np, s1);
    std::vector<std::uint64_t> g1(words, 0);
    for (int pi : chosen) g1[pi >> 6] |= 1ULL << (pi & 63);
    auto verts = draw.sample(ny, 2 * s2);
    std::vector<std::array<int, 2>> g2;
    for (int i = 0; i < s2; ++i) g2.push_back({verts[2 * i], verts[2 * i + 1]});

    long long cur = count(g1, g2);
    for (int it = 0; it < c.opts.iterations && cur > 0; ++it) {
      std::uint64_t roll = draw.rng()();
      int out_pi = static_cast<int>((roll >> 1) % np);
      int in_pi = static_cast<int>((roll >> 33) % np);
      if (!((g1[out_pi >> 6] >> (out_pi & 63)) & 1u)) continue;
      if ((g1[in_pi >> 6] >> (in_pi & 63)) & 1u) continue;
      g1[out_pi >> 6] ^= 1ULL << (out_pi & 63);
      g1[in_pi >> 6] ^= 1ULL << (in_pi & 63);
      long long next = count(g1, g2);
      if (next <= cur) cur = next;
      else {
        g1[out_pi >> 6] ^= 1ULL << (out_pi & 63);
        g1[in_pi >> 6] ^= 1ULL << (in_pi & 63);
      }
    }
    if (cur < best) { best = cur; best_g1 = g1; best_g2 = g2; }
    if (static_cast<double>(best) <= rhs) break;
  }
  rep.lhs = static_cast<double>(best);
  std::ostringstream w;
  w << "G1=";
  for (int pi = 0; pi < np; ++pi)
    if ((best_g1[pi >> 6] >> (pi & 63)) & 1u)
      w << '(' << c.xs[xpairs[pi][0]] << ',' << c.xs[xpairs[pi][1]] << ')';
  w << " G2=";
  for (const auto& ab : best_g2) w << '(' << c.ys[ab[0]] << ',' << c.ys[ab[1]] << ')';
  rep.witness = w.str();
  rep.status = (static_cast<double>(best) > rhs) ? ConditionStatus::HoldsUnrefuted
                                                 : ConditionStatus::Violated;
}

}  // namespace

LowerDensityReport lower_density_check(const TripleSystem& h, const OrderedPartition& p,
                                       double mu, const LowerDensityOptions& opts) {
  if (p.n != h.n()) throw std::invalid_argument("partition size differs from system");
  if (!(mu > 0.0 && mu < 0.5)) throw std::invalid_argument("mu must be in (0, 1/2)");
  LowerDensityReport out;
  out.mu = mu;
  DensityContext ctx{h, p.x_vertices(), p.y_vertices(), h.n(), mu, opts};

  check_i(ctx, out.conditions[0]);
  check_ii(ctx, out.conditions[1]);
  check_iii(ctx, out.conditions[2]);
  check_iv(ctx, out.conditions[3]);

  auto& v = out.conditions[4];
  v.lhs = std::fabs(static_cast<double>(p.y_size()) - static_cast<double>(h.n()) / 3.0);
  v.rhs = mu * h.n();
  v.status = (v.lhs < v.rhs) ? ConditionStatus::HoldsExact : ConditionStatus::Violated;
  v.witness = "|Y|=" + std::to_string(p.y_size());
  return out;
}

SBoundResult s_bound_check(int n, std::optional<u128> exact_s, std::optional<u128> exact_s_prev) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  SBoundResult out;
  out.n = n;
  std::int64_t e = 2LL * n * n * n - 3LL * n * n - 3LL * n;
  out.bound_log2 = static_cast<double>(e) / 27.0;
  int a = (2 * n + 2) / 3;
  std::int64_t cons = 27LL * static_cast<std::int64_t>(choose2(static_cast<std::uint64_t>(a))) *
                      (n - a);
  out.construction_ok = cons >= e;
  if (exact_s) {
    cpp_int s = 0;
    u128 v = *exact_s;
    cpp_int shift = 1;
    while (v > 0) {
      s += cpp_int(static_cast<std::uint64_t>(v & 0xFFFFFFFFFFFFFFFFULL)) * shift;
      v >>= 64;
      shift <<= 64;
    }
    out.exact_holds = big_pow(s, 27) >= big_pow(cpp_int(2), static_cast<std::uint64_t>(e));
    if (exact_s_prev) {
      cpp_int sp = cpp_int(static_cast<std::uint64_t>(*exact_s_prev));
      std::int64_t er = 2LL * n * n - 5LL * n + 1;
      out.recursion_holds =
          big_pow(s, 9) >= big_pow(sp, 9) * big_pow(cpp_int(2), static_cast<std::uint64_t>(er));
    }
  }
  return out;
}

HierarchyResult threshold_hierarchy_check(const Thresholds& t) {
  for (double v : {t.eta, t.mu, t.alpha, t.beta})
    if (!(v > 0.0 && v < 0.5)) throw std::invalid_argument("thresholds must lie in (0, 1/2)");
  HierarchyResult out;
  out.lhs[0] = 0.01;
  out.rhs[0] = binary_entropy(t.alpha);
  out.lhs[1] = t.alpha * t.alpha;
  out.rhs[1] = 100.0 * (binary_entropy(t.beta) + binary_entropy(2.0 * t.mu) + t.mu * t.mu);
  out.lhs[2] = t.beta;
  out.rhs[2] = 100.0 * binary_entropy(2.0 * t.mu);
  out.lhs[3] = t.mu * t.mu * t.mu;
  out.rhs[3] = 1000.0 * binary_entropy(t.eta);
  out.inequality[0] = out.lhs[0] > out.rhs[0];
  out.inequality[1] = out.lhs[1] > out.rhs[1];
  out.inequality[2] = out.lhs[2] > out.rhs[2];
  out.inequality[3] = out.lhs[3] >= out.rhs[3];
  out.ok = out.inequality[0] && out.inequality[1] && out.inequality[2] && out.inequality[3];
  return out;
}

}  // namespace t5census
