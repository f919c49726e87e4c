#include "doctest.h"
#include "mpap/enumerate.hpp"
#include "mpap/paths.hpp"

using namespace mpap;

TEST_SUITE("paths") {

TEST_CASE("family tags") {
  CHECK(family_from_tag("m1") == Family::M1);
  CHECK(family_from_tag("m2r") == Family::M2R);
  CHECK(family_tag(Family::M1R) == "m1r");
  CHECK_THROWS_AS(family_from_tag("m3"), std::invalid_argument);
}

TEST_CASE("parse and render round trip") {
  auto r = parse_path(Family::M1, "U U D2");
  REQUIRE(r.ok());
  CHECK(r.path->steps == std::vector<Step>{up(), up(), down(2)});
  CHECK(r.path->heights == std::vector<int>{1, 2, 0});
  CHECK(r.path->end_height() == 0);
  CHECK(render_path(*r.path) == "U U D2");

  auto r2 = parse_path(Family::M1R, "U3 D D H");
  REQUIRE(r2.ok());
  CHECK(r2.path->end_height() == 1);
  CHECK(render_path(*r2.path) == "U3 D D H");

  auto empty = parse_path(Family::M2, "");
  REQUIRE(empty.ok());
  CHECK(empty.path->length() == 0);
  CHECK(empty.path->end_height() == 0);
  CHECK(render_path(*empty.path) == "");
}

TEST_CASE("token errors") {
  auto bad = parse_path(Family::M1, "U X");
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.error->kind == PathErrorKind::TokenSyntax);
  CHECK(bad.error->index == 1);

  CHECK(parse_path(Family::M1, "H2").error->kind == PathErrorKind::TokenSyntax);
  CHECK(parse_path(Family::M1, "U0").error->kind == PathErrorKind::TokenSyntax);
  CHECK(parse_path(Family::M1R, "D2").error->kind == PathErrorKind::IllegalStep);
}

TEST_CASE("alphabet violations") {
  // M1/M2 rise by exactly one; M1R/M2R fall by exactly one
  auto r = validate_path(Family::M1, {up(2)});
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind == PathErrorKind::IllegalStep);
  CHECK(r.error->index == 0);
  CHECK(validate_path(Family::M2, {up(3)}).error->kind == PathErrorKind::IllegalStep);
  CHECK_FALSE(validate_path(Family::M2R, {up(2), down(2)}).ok());
}

TEST_CASE("height must stay nonnegative") {
  auto r = validate_path(Family::M1, {down(1)});
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind == PathErrorKind::NegativeHeight);
  CHECK(r.error->index == 0);
  auto deep = validate_path(Family::M1, {up(), up(), down(3)});
  CHECK(deep.error->kind == PathErrorKind::NegativeHeight);
  CHECK(deep.error->index == 2);
}

TEST_CASE("adjacency rules for the jump families") {
  // no down after down in M1
  auto r = validate_path(Family::M1, {up(), up(), down(1), down(1)});
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind == PathErrorKind::AdjacencyViolation);
  CHECK(r.error->index == 2);
  // no up after up in M1R
  auto r2 = parse_path(Family::M1R, "U2 U1 D");
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.error->kind == PathErrorKind::AdjacencyViolation);
  CHECK(r2.error->index == 0);
  CHECK(validate_path(Family::M1, {up(), down(1), up(), down(1)}).ok());
}

TEST_CASE("positional rules for the tight families") {
  // M2: a down or flat step must be followed by an up step unless final
  auto r = validate_path(Family::M2, {flat(), flat()});
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind == PathErrorKind::PositionalViolation);
  CHECK(r.error->index == 0);
  CHECK(validate_path(Family::M2, {flat(), up(), down(1)}).ok());
  CHECK(validate_path(Family::M2, {up(), down(1)}).ok());

  // M2R: an up or flat step other than the first must follow a down step
  auto r2 = validate_path(Family::M2R, {flat(), up(1)});
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.error->kind == PathErrorKind::PositionalViolation);
  CHECK(r2.error->index == 1);
  CHECK(validate_path(Family::M2R, {up(2), down(1), flat()}).ok());
}

TEST_CASE("prefixes of valid paths stay valid") {
  for (Family f : {Family::M1, Family::M2, Family::M1R, Family::M2R}) {
    for (const auto& p : collect_paths(f, 5, 5)) {
      for (int len = 0; len < p.length(); ++len) {
        std::vector<Step> prefix(p.steps.begin(), p.steps.begin() + len);
        CHECK(validate_path(f, prefix).ok());
      }
    }
  }
}

TEST_CASE("reversal lands in the mirror family") {
  auto p = parse_path(Family::M1, "U H D");
  REQUIRE(p.ok());
  auto r = reverse_path(*p.path);
  REQUIRE(r.ok());
  CHECK(r.path->family == Family::M1R);
  CHECK(render_path(*r.path) == "U H D");

  auto q = parse_path(Family::M2, "U U D2");
  REQUIRE(q.ok());
  auto rq = reverse_path(*q.path);
  REQUIRE(rq.ok());
  CHECK(rq.path->family == Family::M2R);
  CHECK(render_path(*rq.path) == "U2 D D");

  for (Family f : {Family::M1, Family::M2, Family::M1R, Family::M2R}) {
    for (int n = 0; n <= 7; ++n) {
      for (const auto& path : collect_paths(f, n, 0)) {
        auto rev = reverse_path(path);
        REQUIRE(rev.ok());
        auto back = reverse_path(*rev.path);
        REQUIRE(back.ok());
        CHECK(back.path->steps == path.steps);
        CHECK(back.path->family == f);
      }
    }
  }
}

TEST_CASE("error text names the step") {
  auto r = validate_path(Family::M1, {down(2)});
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->to_string().find("0") != std::string::npos);
}

}  // TEST_SUITE
