#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <polytri/cache.hpp>
#include <polytri/counting.hpp>

using namespace polytri;

namespace {

struct TempFile {
  std::string path;
  TempFile() {
    path = (std::filesystem::temp_directory_path() /
            ("polytri_cache_test_" + std::to_string(std::rand()) + ".jsonl"))
               .string();
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cache round trip preserves decimal strings exactly") {
  TempFile tmp;
  CountRecord big{CountFamily::balanced, {7, 6}, balanced_count({7, 6})};
  CountRecord tri{CountFamily::triangle, {3, 4, 6}, triangle_count({3, 4, 6})};
  {
    CacheFile cache(tmp.path);
    cache.load();
    cache.append(big);
    cache.append(tri);
    cache.append(big);  // duplicate with equal value: no-op
  }
  CacheFile reread(tmp.path);
  reread.load();
  REQUIRE(reread.records().size() == 2);
  CHECK(reread.records()[0] == big);
  CHECK(reread.records()[1] == tri);
  CHECK(to_decimal(reread.records()[0].count) == "182814912101920");
  auto hit = reread.lookup(CountFamily::balanced, {7, 6});
  REQUIRE(hit.has_value());
  CHECK(*hit == big.count);
  CHECK_FALSE(reread.lookup(CountFamily::balanced, {7, 5}).has_value());
}

TEST_CASE("conflicting duplicates abort") {
  TempFile tmp;
  CacheFile cache(tmp.path);
  cache.load();
  cache.append({CountFamily::partial, {8, 4}, partial_count({8, 4})});
  CHECK_THROWS_AS(cache.append({CountFamily::partial, {8, 4}, Count(31)}), std::runtime_error);
}

TEST_CASE("records can be revalidated by recomputation") {
  for (const CountRecord& rec :
       {CountRecord{CountFamily::balanced, {5, 3}, Count(13740)},
        CountRecord{CountFamily::triangle, {1, 1, 1}, Count(4)},
        CountRecord{CountFamily::partial, {8, 4}, Count(30)},
        CountRecord{CountFamily::isc, {3, 3}, Count(232)},
        CountRecord{CountFamily::general, {1, 2, 3}, triangle_count({1, 2, 3})}}) {
    CHECK(recompute(rec) == rec.count);
  }
}

TEST_CASE("malformed cache lines raise") {
  TempFile tmp;
  {
    std::ofstream out(tmp.path);
    out << "{not json}\n";
  }
  CacheFile cache(tmp.path);
  CHECK_THROWS_AS(cache.load(), std::runtime_error);
}

TEST_CASE("family names round trip") {
  for (CountFamily f : {CountFamily::balanced, CountFamily::triangle, CountFamily::partial,
                        CountFamily::general, CountFamily::isc}) {
    auto parsed = parse_family(family_name(f));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == f);
  }
  CHECK_FALSE(parse_family("nonsense").has_value());
}
