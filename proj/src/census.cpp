#include "t5census/census.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "t5census/constructions.hpp"
#include "t5census/detection.hpp"

namespace t5census {

namespace {

using json = nlohmann::json;

// Precomputed per-n structures for mask sweeps; valid while C(n,3) <= 64.
struct SmallTables {
  int n = 0;
  int t = 0;  // C(n,3)
  std::vector<std::array<int, 3>> triples;
  std::vector<std::uint64_t> consistent;        // per x_mask: mask of |e∩X|=2 triples
  std::vector<std::uint64_t> inside;            // per vertex subset: triples fully inside
  std::vector<std::uint64_t> copies;            // all T5 copies as edge masks
  std::vector<std::vector<std::uint64_t>> copies_with;  // copies containing each triple
  std::vector<std::array<std::uint64_t, 64>> pair_w;    // triple index of {u,v,w} per pair
  std::vector<std::array<int, 2>> pairs;
};

SmallTables make_tables(int n) {
  SmallTables tb;
  tb.n = n;
  tb.t = static_cast<int>(choose3(static_cast<std::uint64_t>(n)));
  for (int c = 2; c < n; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a) tb.triples.push_back({a, b, c});

  tb.consistent.assign(1ULL << n, 0);
  for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
    std::uint64_t m = 0;
    for (int i = 0; i < tb.t; ++i) {
      const auto& e = tb.triples[i];
      int k = ((x >> e[0]) & 1) + ((x >> e[1]) & 1) + ((x >> e[2]) & 1);
      if (k == 2) m |= 1ULL << i;
    }
    tb.consistent[x] = m;
  }
  tb.inside.assign(1ULL << n, 0);
  for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
    std::uint64_t m = 0;
    for (int i = 0; i < tb.t; ++i) {
      const auto& e = tb.triples[i];
      std::uint64_t vm = (1ULL << e[0]) | (1ULL << e[1]) | (1ULL << e[2]);
      if ((vm & s) == vm) m |= 1ULL << i;
    }
    tb.inside[s] = m;
  }
  tb.copies = t5_copy_masks(n);
  tb.copies_with.assign(tb.t, {});
  for (std::uint64_t cm : tb.copies)
    for (int i = 0; i < tb.t; ++i)
      if ((cm >> i) & 1u) tb.copies_with[i].push_back(cm);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::array<std::uint64_t, 64> row{};
      for (int w = 0; w < n; ++w) {
        if (w == u || w == v) { row[w] = UINT64_MAX; continue; }
        int a = u, b = v, c = w;
        if (c < a) std::swap(a, c);
        if (c < b) std::swap(b, c);
        if (a > b) std::swap(a, b);
        row[w] = triple_index(a, b, c);
      }
      tb.pair_w.push_back(row);
      tb.pairs.push_back({u, v});
    }
  return tb;
}

bool mask_contains_copy(std::uint64_t mask, const std::vector<std::uint64_t>& copies) {
  for (std::uint64_t cm : copies)
    if ((mask & cm) == cm) return true;
  return false;
}

// pair-neighborhood criterion on a raw mask
bool mask_independent(std::uint64_t mask, const SmallTables& tb) {
  for (std::size_t pi = 0; pi < tb.pairs.size(); ++pi) {
    std::uint64_t nb = 0;
    const auto& row = tb.pair_w[pi];
    for (int w = 0; w < tb.n; ++w) {
      if (row[w] == UINT64_MAX) continue;
      if ((mask >> row[w]) & 1u) nb |= 1ULL << w;
    }
    if ((mask & tb.inside[nb]) != 0) return false;
  }
  return true;
}

bool mask_semibipartite(std::uint64_t mask, const SmallTables& tb) {
  for (std::uint64_t x = 0; x < tb.consistent.size(); ++x)
    if ((mask & ~tb.consistent[x]) == 0) return true;
  return false;
}

struct SweepPartial {
  u128 i_n = 0, s_n = 0, t5_free = 0, count = 0;
  std::uint64_t max_t5free_edges = 0;
};

SweepPartial sweep_range(const SmallTables& tb, std::uint64_t lo, std::uint64_t hi) {
  SweepPartial out;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    bool indep = mask_independent(mask, tb);
    bool copy = mask_contains_copy(mask, tb.copies);
    if (indep == copy)
      throw std::logic_error("criterion/copy routes disagree on mask " + std::to_string(mask));
    bool sb = mask_semibipartite(mask, tb);
    if (sb && !indep)
      throw std::logic_error("semi-bipartite mask fails independence: " + std::to_string(mask));
    if (indep) {
      ++out.i_n;
      ++out.t5_free;
      out.max_t5free_edges = std::max(
          out.max_t5free_edges, static_cast<std::uint64_t>(std::popcount(mask)));
    }
    if (sb) ++out.s_n;
    ++out.count;
  }
  return out;
}

SweepPartial sweep_parallel(const SmallTables& tb, std::uint64_t lo, std::uint64_t hi,
                            int workers) {
  if (workers < 1) throw std::invalid_argument("worker count must be positive");
  std::uint64_t span = hi - lo;
  if (workers == 1 || span < 1024) return sweep_range(tb, lo, hi);
  std::vector<SweepPartial> parts(workers);
  std::vector<std::thread> threads;
  std::uint64_t chunk = span / workers;
  std::exception_ptr error;
  std::mutex error_mu;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t b = lo + chunk * w;
    std::uint64_t e = (w == workers - 1) ? hi : b + chunk;
    threads.emplace_back([&, w, b, e] {
      try {
        parts[w] = sweep_range(tb, b, e);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  SweepPartial total;
  for (const auto& p : parts) {  // fixed reduction order
    total.i_n += p.i_n;
    total.s_n += p.s_n;
    total.t5_free += p.t5_free;
    total.count += p.count;
    total.max_t5free_edges = std::max(total.max_t5free_edges, p.max_t5free_edges);
  }
  return total;
}

void check_census_n(int n, bool deep) {
  if (n < 3) throw std::invalid_argument("census needs n >= 3");
  if (n > 7) throw resource_limit_error("census beyond n = 7 is out of range");
  if (n == 7 && !deep)
    throw resource_limit_error("census at n = 7 sweeps 2^35 masks; pass the deep flag");
}

CensusReport finish_report(int n, const SweepPartial& total, double elapsed, int workers) {
  CensusReport r;
  r.n = n;
  r.total = u128(1) << choose3(static_cast<std::uint64_t>(n));
  if (total.count != r.total) throw std::logic_error("census did not cover all masks");
  r.i_n = total.i_n;
  r.s_n = total.s_n;
  r.t5_free = total.t5_free;
  if (r.i_n != r.t5_free) throw std::logic_error("independent count differs from T5-free count");
  if (r.s_n > r.i_n) throw std::logic_error("semi-bipartite count exceeds independent count");
  r.extra = r.i_n - r.s_n;
  r.max_t5free_edges = total.max_t5free_edges;
  r.elapsed_seconds = elapsed;
  r.workers = workers;
  return r;
}

std::string canonical_counts(const CensusReport& r) {
  return std::to_string(r.n) + "|" + u128_to_string(r.total) + "|" + u128_to_string(r.i_n) + "|" +
         u128_to_string(r.s_n) + "|" + u128_to_string(r.t5_free) + "|" + u128_to_string(r.extra) +
         "|" + std::to_string(r.max_t5free_edges) + "|" + r.version;
}

json report_to_json(const CensusReport& r) {
  json j;
  j["n"] = r.n;
  j["total"] = u128_to_string(r.total);
  j["i_n"] = u128_to_string(r.i_n);
  j["s_n"] = u128_to_string(r.s_n);
  j["t5_free"] = u128_to_string(r.t5_free);
  j["extra"] = u128_to_string(r.extra);
  j["max_t5free_edges"] = r.max_t5free_edges;
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["workers"] = r.workers;
  j["version"] = r.version;
  j["checksum"] = census_checksum(r);
  return j;
}

CensusReport report_from_json(const json& j) {
  CensusReport r;
  r.n = j.at("n").get<int>();
  r.total = u128_from_string(j.at("total").get<std::string>());
  r.i_n = u128_from_string(j.at("i_n").get<std::string>());
  r.s_n = u128_from_string(j.at("s_n").get<std::string>());
  r.t5_free = u128_from_string(j.at("t5_free").get<std::string>());
  r.extra = u128_from_string(j.at("extra").get<std::string>());
  r.max_t5free_edges = j.at("max_t5free_edges").get<std::uint64_t>();
  r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  r.workers = j.at("workers").get<int>();
  r.version = j.at("version").get<std::string>();
  if (j.at("checksum").get<std::uint64_t>() != census_checksum(r))
    throw cache_error("census cache checksum mismatch");
  return r;
}

void write_json_atomic(const json& j, const std::string& path) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write " + tmp);
    os << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

CensusReport full_census(int n, const CensusOptions& opts) {
  check_census_n(n, opts.deep);
  auto t0 = std::chrono::steady_clock::now();
  SmallTables tb = make_tables(n);
  std::uint64_t total = 1ULL << tb.t;
  SweepPartial sum = sweep_parallel(tb, 0, total, opts.workers);
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finish_report(n, sum, elapsed, opts.workers);
}

CensusReport full_census_resumable(int n, const CensusOptions& opts,
                                   const std::string& checkpoint_path, u128 checkpoint_every) {
  check_census_n(n, opts.deep);
  if (checkpoint_every == 0) throw std::invalid_argument("checkpoint interval must be positive");
  auto t0 = std::chrono::steady_clock::now();
  SmallTables tb = make_tables(n);
  std::uint64_t total = 1ULL << tb.t;

  SweepPartial acc;
  std::uint64_t cursor = 0;
  if (std::filesystem::exists(checkpoint_path)) {
    std::ifstream is(checkpoint_path);
    json j;
    try {
      is >> j;
    } catch (const std::exception& e) {
      throw cache_error(std::string("unreadable checkpoint: ") + e.what());
    }
    if (j.at("n").get<int>() != n || j.at("version").get<std::string>() != kVersion)
      throw cache_error("checkpoint n/version mismatch");
    acc.i_n = u128_from_string(j.at("i_n").get<std::string>());
    acc.s_n = u128_from_string(j.at("s_n").get<std::string>());
    acc.t5_free = u128_from_string(j.at("t5_free").get<std::string>());
    acc.count = u128_from_string(j.at("masks_done").get<std::string>());
    acc.max_t5free_edges = j.at("max_t5free_edges").get<std::uint64_t>();
    cursor = static_cast<std::uint64_t>(u128_from_string(j.at("next_mask").get<std::string>()));
    std::string canon = std::to_string(n) + "|" + u128_to_string(acc.i_n) + "|" +
                        u128_to_string(acc.s_n) + "|" + u128_to_string(acc.t5_free) + "|" +
                        u128_to_string(acc.count) + "|" + std::to_string(cursor);
    if (j.at("checksum").get<std::uint64_t>() != fnv1a64(canon))
      throw cache_error("checkpoint checksum mismatch");
    if ((acc.count != cursor) || cursor > total) throw cache_error("checkpoint cursor invalid");
  }

  while (cursor < total) {
    std::uint64_t band_end = cursor + std::min<u128>(checkpoint_every, total - cursor);
    SweepPartial band = sweep_parallel(tb, cursor, band_end, opts.workers);
    acc.i_n += band.i_n;
    acc.s_n += band.s_n;
    acc.t5_free += band.t5_free;
    acc.count += band.count;
    acc.max_t5free_edges = std::max(acc.max_t5free_edges, band.max_t5free_edges);
    cursor = band_end;

    json j;
    j["n"] = n;
    j["version"] = kVersion;
    j["next_mask"] = u128_to_string(cursor);
    j["masks_done"] = u128_to_string(acc.count);
    j["i_n"] = u128_to_string(acc.i_n);
    j["s_n"] = u128_to_string(acc.s_n);
    j["t5_free"] = u128_to_string(acc.t5_free);
    j["max_t5free_edges"] = acc.max_t5free_edges;
    std::string canon = std::to_string(n) + "|" + u128_to_string(acc.i_n) + "|" +
                        u128_to_string(acc.s_n) + "|" + u128_to_string(acc.t5_free) + "|" +
                        u128_to_string(acc.count) + "|" + std::to_string(cursor);
    j["checksum"] = fnv1a64(canon);
    write_json_atomic(j, checkpoint_path);
  }

  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finish_report(n, acc, elapsed, opts.workers);
}

std::uint64_t census_checksum(const CensusReport& r) { return fnv1a64(canonical_counts(r)); }

std::string census_cache_path(const std::string& dir, int n) {
  return dir + "/census_n" + std::to_string(n) + ".json";
}

void save_census_cache(const CensusReport& r, const std::string& dir) {
  std::filesystem::create_directories(dir);
  write_json_atomic(report_to_json(r), census_cache_path(dir, r.n));
}

std::optional<CensusReport> load_census_cache(int n, const std::string& dir) {
  std::string path = census_cache_path(dir, n);
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream is(path);
  json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    throw cache_error(std::string("unreadable census cache: ") + e.what());
  }
  CensusReport r = report_from_json(j);
  if (r.n != n) throw cache_error("census cache n mismatch");
  if (r.version != kVersion) return std::nullopt;  // stale entry, recompute
  return r;
}

Theorem1Result verify_theorem1_lower(const CensusReport& r) {
  Theorem1Result out;
  out.n = r.n;
  i128 diff = static_cast<i128>(r.i_n) - static_cast<i128>(r.s_n);
  out.margin = (i128(1) << (4 * r.n)) * diff - static_cast<i128>(r.s_n);
  out.holds = out.margin > 0;
  return out;
}

ExtremalResult extremal_search(int n, const ExtremalOptions& opts) {
  if (n < 3) throw std::invalid_argument("extremal search needs n >= 3");
  if (n > 7) throw resource_limit_error("extremal search beyond n = 7 is out of range");
  auto t0 = std::chrono::steady_clock::now();
  auto deadline = t0 + std::chrono::milliseconds(opts.time_limit_ms);
  SmallTables tb = make_tables(n);
  int t = tb.t;

  // seed best with the semi-bipartite extremal construction
  auto [seed_h, seed_p] = build_b3(n);
  std::uint64_t seed_mask = 0;
  for (std::uint64_t idx : seed_h.edge_indices()) seed_mask |= 1ULL << idx;
  if (mask_contains_copy(seed_mask, tb.copies)) throw std::logic_error("seed witness not T5-free");
  std::uint64_t best = seed_h.edge_count();
  std::uint64_t best_mask = seed_mask;

  struct Frame {
    int idx;
    std::uint64_t mask;
    std::uint64_t cnt;
    int stage;  // 0: try include, 1: try exclude, 2: done
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0, 0, 0});
  ExtremalResult out;
  out.n = n;
  bool aborted = false;

  while (!stack.empty()) {
    if (out.nodes >= opts.node_budget ||
        (opts.time_limit_ms && std::chrono::steady_clock::now() >= deadline)) {
      aborted = true;
      break;
    }
    Frame& f = stack.back();
    if (f.cnt + static_cast<std::uint64_t>(t - f.idx) <= best || f.idx == t) {
      if (f.idx == t && f.cnt > best) { best = f.cnt; best_mask = f.mask; }
      stack.pop_back();
      continue;
    }
    if (f.stage == 0) {
      f.stage = 1;
      ++out.nodes;
      std::uint64_t with = f.mask | (1ULL << f.idx);
      bool creates = false;
      for (std::uint64_t cm : tb.copies_with[f.idx])
        if ((with & cm) == cm) { creates = true; break; }
      if (!creates) stack.push_back({f.idx + 1, with, f.cnt + 1, 0});
    } else if (f.stage == 1) {
      f.stage = 2;
      ++out.nodes;
      stack.push_back({f.idx + 1, f.mask, f.cnt, 0});
    } else {
      stack.pop_back();
    }
  }

  out.lower = best;
  if (aborted) {
    std::uint64_t ub = best;
    for (const Frame& f : stack)
      ub = std::max(ub, f.cnt + static_cast<std::uint64_t>(t - f.idx));
    out.upper = ub;
    out.completed = false;
  } else {
    out.upper = best;
    out.completed = true;
  }
  for (int i = 0; i < t; ++i)
    if ((best_mask >> i) & 1u) out.witness.push_back(tb.triples[i]);
  out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.cubic_bound = 2ULL * n * n * n / 27ULL;
  out.within_cubic_bound = out.lower <= out.cubic_bound;
  return out;
}

}  // namespace t5census
