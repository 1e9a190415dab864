#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "t5census/common.hpp"
#include "t5census/triple_system.hpp"

namespace t5census {

// Exact sweep counts over all 2^C(n,3) triple systems on n labeled vertices.
// i_n counts independent-neighborhood systems (pair criterion), t5_free
// counts systems with no T5 copy (copy-mask route); the sweep asserts the
// two agree on every mask and that semi-bipartite implies independent.
struct CensusReport {
  int n = 0;
  u128 total = 0;
  u128 i_n = 0;
  u128 s_n = 0;
  u128 t5_free = 0;
  u128 extra = 0;  // i_n - s_n
  std::uint64_t max_t5free_edges = 0;
  double elapsed_seconds = 0;
  int workers = 1;
  std::string version = kVersion;
};

struct CensusOptions {
  int workers = 1;
  bool deep = false;  // required for n = 7
};

// n <= 6, or n = 7 with deep set. Masks are swept in ascending order, split
// into one contiguous chunk per worker; counts are reduced in worker order,
// so results do not depend on the worker count.
CensusReport full_census(int n, const CensusOptions& opts = {});

// Resumable driver: sweeps in bands of checkpoint_every masks, persisting a
// cursor JSON after each band (written atomically). An existing valid
// checkpoint is picked up; n/version/checksum mismatches raise cache_error.
CensusReport full_census_resumable(int n, const CensusOptions& opts,
                                   const std::string& checkpoint_path,
                                   u128 checkpoint_every = u128(1) << 30);

std::uint64_t census_checksum(const CensusReport& r);
std::string census_cache_path(const std::string& dir, int n);
void save_census_cache(const CensusReport& r, const std::string& dir);
// Empty optional on miss or version mismatch; cache_error on corruption.
std::optional<CensusReport> load_census_cache(int n, const std::string& dir);

struct Theorem1Result {
  int n = 0;
  bool holds = false;
  i128 margin = 0;  // 2^{4n} * (i_n - s_n) - s_n, exact
};

// Strict form of the counting inequality (1 + 2^{-4n}) * s_n < i_n,
// evaluated in exact integer arithmetic.
Theorem1Result verify_theorem1_lower(const CensusReport& r);

struct ExtremalOptions {
  std::uint64_t node_budget = UINT64_MAX;
  std::uint64_t time_limit_ms = 0;  // 0 = unlimited
};

struct ExtremalResult {
  int n = 0;
  std::uint64_t lower = 0;  // best T5-free edge count found
  std::uint64_t upper = 0;  // proven bound (== lower when completed)
  bool completed = false;
  std::vector<std::array<int, 3>> witness;  // edges of a best system
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0;
  std::uint64_t cubic_bound = 0;  // floor(2n^3/27), recorded only
  bool within_cubic_bound = false;
};

// Branch and bound over triples in colex order (include/exclude), pruning
// when current count + remaining triples <= best and rejecting includes
// that complete a T5 copy. n <= 7.
ExtremalResult extremal_search(int n, const ExtremalOptions& opts = {});

}  // namespace t5census
