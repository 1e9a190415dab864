#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "t5census/census.hpp"
#include "t5census/detection.hpp"

using namespace t5census;

namespace {
struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("t5census-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};
}  // namespace

TEST_CASE("exact counts on small n") {
  CensusReport r3 = full_census(3);
  CHECK(r3.total == 2);
  CHECK(r3.i_n == 2);
  CHECK(r3.s_n == 2);
  CHECK(r3.max_t5free_edges == 1);

  CensusReport r4 = full_census(4);
  CHECK(r4.total == 16);
  CHECK(r4.i_n == 16);
  CHECK(r4.s_n == 15);
  CHECK(r4.t5_free == 16);
  CHECK(r4.extra == 1);
  CHECK(r4.max_t5free_edges == 4);

  CensusReport r5 = full_census(5, {.workers = 3});
  CHECK(r5.total == 1024);
  CHECK(r5.i_n == 653);
  CHECK(r5.s_n == 476);
  CHECK(r5.t5_free == 653);
  CHECK(r5.max_t5free_edges == 7);
  CHECK(r5.workers == 3);

  CHECK_THROWS_AS(full_census(7), resource_limit_error);  // needs the deep flag
  CHECK_THROWS_AS(full_census(8, {.workers = 1, .deep = true}), resource_limit_error);
  CHECK_THROWS_AS(full_census(5, {.workers = 0}), std::invalid_argument);
  CHECK_THROWS_AS(full_census(2), std::invalid_argument);
}

TEST_CASE("worker split does not change counts") {
  CensusReport base = full_census(5, {.workers = 1});
  for (int w : {2, 5, 16}) {
    CensusReport r = full_census(5, {.workers = w});
    CHECK(r.i_n == base.i_n);
    CHECK(r.s_n == base.s_n);
    CHECK(r.t5_free == base.t5_free);
    CHECK(r.max_t5free_edges == base.max_t5free_edges);
  }
}

TEST_CASE("counting inequality margins") {
  Theorem1Result t4 = verify_theorem1_lower(full_census(4));
  CHECK(t4.holds);
  CHECK(i128_to_string(t4.margin) == "65521");
  Theorem1Result t5 = verify_theorem1_lower(full_census(5));
  CHECK(t5.holds);
  CHECK(i128_to_string(t5.margin) == "185597476");
}

TEST_CASE("resumable sweep equals the one-shot sweep") {
  TempDir tmp;
  std::string ckpt = (tmp.path / "census5.ckpt").string();
  CensusReport banded = full_census_resumable(5, {.workers = 2}, ckpt, 100);
  CensusReport oneshot = full_census(5);
  CHECK(banded.i_n == oneshot.i_n);
  CHECK(banded.s_n == oneshot.s_n);
  CHECK(banded.t5_free == oneshot.t5_free);
  CHECK(banded.max_t5free_edges == oneshot.max_t5free_edges);

  // a completed checkpoint is picked up without resweeping
  CensusReport again = full_census_resumable(5, {.workers = 1}, ckpt, 100);
  CHECK(again.i_n == oneshot.i_n);
  CHECK(again.s_n == oneshot.s_n);

  // wrong n and corrupted cursor raise cache errors
  CHECK_THROWS_AS(full_census_resumable(4, {}, ckpt, 100), cache_error);
  std::ofstream(ckpt) << "not json";
  CHECK_THROWS_AS(full_census_resumable(5, {}, ckpt, 100), cache_error);
  CHECK_THROWS_AS(full_census_resumable(5, {}, (tmp.path / "x").string(), 0),
                  std::invalid_argument);
}

TEST_CASE("census cache round-trip, corruption and version gating") {
  TempDir tmp;
  std::string dir = tmp.path.string();
  CHECK_FALSE(load_census_cache(4, dir).has_value());
  CensusReport r = full_census(4);
  save_census_cache(r, dir);
  auto back = load_census_cache(4, dir);
  REQUIRE(back.has_value());
  CHECK(back->i_n == r.i_n);
  CHECK(back->s_n == r.s_n);
  CHECK(back->total == r.total);
  CHECK(back->version == kVersion);
  CHECK(census_checksum(*back) == census_checksum(r));

  // corrupted payload raises; a stale version reads as a miss
  std::string path = census_cache_path(dir, 4);
  std::ofstream(path) << "{broken";
  CHECK_THROWS_AS(load_census_cache(4, dir), cache_error);
  CensusReport stale = r;
  stale.version = "0.0.0";
  save_census_cache(stale, dir);
  CHECK_FALSE(load_census_cache(4, dir).has_value());
}

TEST_CASE("checksum tracks the counts") {
  CensusReport a = full_census(4);
  CensusReport b = a;
  CHECK(census_checksum(a) == census_checksum(b));
  b.i_n += 1;
  CHECK(census_checksum(a) != census_checksum(b));
}

TEST_CASE("extremal search on tiny instances") {
  ExtremalResult r4 = extremal_search(4);
  CHECK(r4.completed);
  CHECK(r4.lower == 4);
  CHECK(r4.upper == 4);
  CHECK(r4.witness.size() == 4);
  CHECK(r4.cubic_bound == 4);  // floor(2 * 64 / 27)
  CHECK(r4.within_cubic_bound);

  ExtremalResult r5 = extremal_search(5);
  CHECK(r5.completed);
  CHECK(r5.lower == 7);
  CHECK(r5.upper == 7);
  TripleSystem w(5, r5.witness);
  CHECK(w.edge_count() == 7);
  CHECK_FALSE(contains_t5(w).has_value());

  CHECK_THROWS_AS(extremal_search(8), resource_limit_error);
}

TEST_CASE("aborted searches stay sound") {
  ExtremalResult tight = extremal_search(6, {.node_budget = 10});
  CHECK_FALSE(tight.completed);
  CHECK(tight.lower <= 12);
  CHECK(tight.upper >= 12);
  CHECK(tight.nodes <= 12);  // abort fires on the budget check, small slack for in-flight nodes
  TripleSystem w(6, tight.witness);
  CHECK_FALSE(contains_t5(w).has_value());
  CHECK(w.edge_count() == tight.lower);

  ExtremalResult wide = extremal_search(6, {.node_budget = 100000000});
  CHECK(wide.completed);
  CHECK(wide.lower == 12);
  CHECK(wide.upper == 12);
  CHECK(wide.lower >= tight.lower);
  CHECK(wide.upper <= tight.upper);
}
