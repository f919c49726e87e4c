#include <string>

#include "doctest.h"
#include "json.hpp"
#include "mpap/formulas.hpp"
#include "mpap/triangles.hpp"

using namespace mpap;

TEST_SUITE("formulas") {

TEST_CASE("binomial conventions") {
  CHECK(binomial(Int(5), 2) == 10);
  CHECK(binomial(Int(5), 0) == 1);
  CHECK(binomial(Int(5), -1) == 0);
  CHECK(binomial(Int(4), 7) == 0);
  // negative upper index follows the falling-factorial product
  CHECK(binomial(Int(-1), 2) == 1);
  CHECK(binomial(Int(-2), 3) == -4);
}

TEST_CASE("catalan and motzkin numbers") {
  std::vector<Int> cat, mot;
  for (int n = 0; n < 7; ++n) {
    cat.push_back(catalan_number(n));
    mot.push_back(motzkin_number(n));
  }
  CHECK(cat == std::vector<Int>{1, 1, 2, 5, 14, 42, 132});
  CHECK(mot == std::vector<Int>{1, 1, 2, 4, 9, 21, 51});
}

TEST_CASE("first-family sums") {
  CHECK(m1_sum_terms(4, 2).t == 9);
  CHECK(m1_sum_terms(3, 1).t == 5);
  // column 0 at even length lands one short of the triangle
  Triangle t = build_triangle(Family::M1, Route::ClosedForm, 9, 9);
  CHECK(m1_sum_terms(4, 0).t == t.at(4, 0) - 1);
  CHECK(m1_sum_terms(3, 0).t == t.at(3, 0));

  CHECK(m1_direct_term(3, 1) == 5);
  CHECK(m1_direct_term(6, 3) == 48);
  CHECK(m1_direct_term(5, 5) == 1);
  CHECK(m1_direct_term(2, 5) == 0);
  for (int n = 0; n < 9; ++n)
    for (int k = 0; k < 9; ++k) CHECK(m1_direct_term(n, k) == t.at(n, k));
}

TEST_CASE("reversed-first-family sums") {
  CHECK(m1r_sum_terms(3, 2).t == 10);
  CHECK(m1r_sum_terms(3, 2).m == 2);
  std::vector<Int> v;
  for (int n = 0; n <= 4; ++n) v.push_back(m1r_sum_terms(n, 1).v);
  CHECK(v == std::vector<Int>{1, 3, 8, 23, 69});

  Triangle t = build_triangle(Family::M1R, Route::ClosedForm, 8, 8);
  for (int n = 1; n < 8; ++n)
    for (int k = 1; k < 8; ++k) CHECK(m1r_sum_terms(n, k).t == t.at(n, k));
}

TEST_CASE("second-family sums") {
  M2SumTerms s = m2_sum_terms(7, 3);
  CHECK(s.expr3 == 59);
  CHECK(m2_sum_terms(5, 0).expr1 == 9);
  CHECK(m2_sum_terms(4, 4).expr1 == 1);
  CHECK(m2_sum_terms(4, 4).expr2 == 1);
  CHECK(m2_sum_terms(4, 4).expr3 == 1);

  Triangle t = build_triangle(Family::M2, Route::ClosedForm, 9, 9);
  for (int n = 0; n < 9; ++n)
    for (int k = 0; k < 9; ++k) {
      M2SumTerms e = m2_sum_terms(n, k);
      CHECK(e.expr1 == t.at(n, k));
      CHECK(e.expr2 == t.at(n, k));
      CHECK(e.expr3 == t.at(n, k));
    }
}

TEST_CASE("reversed-second-family rectangle") {
  CHECK(m2r_rect_term(0, 0) == 1);
  CHECK(m2r_rect_term(2, 1) == 3);
  CHECK(m2r_rect_term(4, 2) == 22);

  Triangle t = build_triangle(Family::M2R, Route::ClosedForm, 9, 9);
  for (int n = 1; n < 9; ++n)
    for (int k = 0; k < 9; ++k) CHECK(m2r_rect_term(n - 1, k) == t.at(n, k));
}

TEST_CASE("validated ranges") {
  CHECK(formula_validated(FormulaId::M1Sum, 3, 0));
  CHECK_FALSE(formula_validated(FormulaId::M1Sum, 4, 0));
  CHECK_FALSE(formula_validated(FormulaId::M1Sum, 0, 0));
  CHECK(formula_validated(FormulaId::M1Sum, 4, 2));
  CHECK(formula_validated(FormulaId::M1RSum, 1, 1));
  CHECK_FALSE(formula_validated(FormulaId::M1RSum, 0, 5));
  CHECK_FALSE(formula_validated(FormulaId::M1RSum, 5, 0));
  CHECK(formula_validated(FormulaId::M1Direct, 0, 0));
  CHECK(formula_validated(FormulaId::M2Expr2, 0, 0));
  CHECK(formula_validated(FormulaId::M2RRect, 0, 0));
}

TEST_CASE("manifest is well formed") {
  auto doc = nlohmann::json::parse(formula_manifest_json());
  REQUIRE(doc.contains("formulas"));
  REQUIRE(doc["formulas"].is_array());
  CHECK(doc["formulas"].size() == 7);
  CHECK(doc["formulas"][0]["id"] == "m1-sum");
  for (const auto& f : doc["formulas"]) {
    CHECK(f.contains("id"));
    CHECK(f.contains("target"));
    CHECK(f.contains("validated"));
  }
}

}  // TEST_SUITE
