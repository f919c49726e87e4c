#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "mpap/enumerate.hpp"
#include "mpap/triangles.hpp"

using namespace mpap;

TEST_SUITE("enumerate") {

TEST_CASE("count table pins") {
  CountTable t = count_table(Family::M2, 3, 3);
  CHECK(t.counts[3][0] == 2);
  CHECK(t.counts[3][1] == 3);
  CHECK(t.counts[3][2] == 3);
  CHECK(t.counts[3][3] == 1);

  // both length-3 paths at height 0 finish with a down step
  CHECK(t.by_class[3][0].up == 0);
  CHECK(t.by_class[3][0].down == 2);
  CHECK(t.by_class[3][0].flat == 0);
  CHECK(t.by_class[3][0].total() == 2);

  // the empty path counts in the up slot
  CHECK(t.counts[0][0] == 1);
  CHECK(t.by_class[0][0].up == 1);
  CHECK(t.by_class[0][0].down == 0);
  CHECK(t.by_class[0][0].flat == 0);
}

TEST_CASE("generation order is lexicographic in rises") {
  std::vector<std::string> seen;
  for (const auto& p : collect_paths(Family::M2, 2, 2)) seen.push_back(render_path(p));
  CHECK(seen == std::vector<std::string>{"H U", "U D", "U H", "U U"});
}

TEST_CASE("each visited path is valid and distinct") {
  for (Family f : {Family::M1, Family::M2, Family::M1R, Family::M2R}) {
    std::vector<std::string> seen;
    enumerate_paths(f, 5, 5, [&](const LatticePath& p) {
      CHECK(p.length() == 5);
      CHECK(p.end_height() <= 5);
      CHECK(validate_path(f, p.steps).ok());
      seen.push_back(render_path(p));
    });
    for (size_t i = 1; i < seen.size(); ++i) CHECK(seen[i - 1] != seen[i]);
  }
}

TEST_CASE("height cap is respected and defaultable") {
  Int capped = 0, full = 0;
  enumerate_paths(Family::M1, 4, 2, [&](const LatticePath& p) {
    CHECK(p.end_height() <= 2);
    ++capped;
  });
  enumerate_paths(Family::M1, 4, -1, [&](const LatticePath&) { ++full; });
  CHECK(capped < full);

  // reversed families reach unbounded heights, so the cap is mandatory
  CHECK_THROWS_AS(enumerate_paths(Family::M1R, 3, -1, [](const LatticePath&) {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(collect_paths(Family::M2R, 3, -1), std::invalid_argument);
}

TEST_CASE("antidiagonal counts") {
  std::vector<Int> m1r;
  for (int n = 0; n <= 4; ++n) m1r.push_back(antidiagonal_count(Family::M1R, n));
  CHECK(m1r == std::vector<Int>{1, 1, 3, 9, 25});
  CHECK(antidiagonal_count(Family::M2R, 0) == 1);
  CHECK(antidiagonal_count(Family::M2R, 4) == 9);
}

TEST_CASE("counts agree with the closed-form triangle") {
  Triangle closed = build_triangle(Family::M1, Route::ClosedForm, 7, 7);
  CountTable t = count_table(Family::M1, 6, 6);
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= 6; ++k) CHECK(t.counts[n][k] == closed.at(n, k));
}

}  // TEST_SUITE
