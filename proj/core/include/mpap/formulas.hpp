#pragma once

#include <string>

#include "mpap/series.hpp"

namespace mpap {

// binomial(a, b) = 0 when b < 0, otherwise the product formula
// a(a-1)...(a-b+1)/b!, which stays meaningful for negative upper index.
Int binomial(const Int& a, long b);

Int catalan_number(int n);
// Motzkin numbers through the binomial sum over Catalan numbers.
Int motzkin_number(int n);

// Closed forms for the M1 triangle. t is the full quadruple-sum expression;
// a, b, c, d are its building blocks (c the Catalan-triangle entry, d the
// kernel-power expansion, a the resulting column factor, b the correction
// factor). t agrees with the triangle except on column 0 at even n, where it
// comes out one short; see the validated-range manifest.
struct M1SumTerms {
  Int t, a, b, c, d;
};
M1SumTerms m1_sum_terms(int n, int k);

// Alternative double-sum form for the same entries, exact on the whole
// triangle (and zero above the diagonal).
Int m1_direct_term(int n, int k);

// Closed forms for the M1R triangle: t evaluates the rectangular-array sum
// shifted onto triangle coordinates and is validated for n, k >= 1; v is the
// auxiliary column sequence, m the shifted Catalan-triangle entry the sum
// expands against.
struct M1RSumTerms {
  Int v, t, m;
};
M1RSumTerms m1r_sum_terms(int n, int k);

// Three equivalent sum expressions for the M2 triangle entry, exact
// everywhere (zero above the diagonal, one on it).
struct M2SumTerms {
  Int expr1, expr2, expr3;
};
M2SumTerms m2_sum_terms(int n, int k);

// Closed form for the M2R rectangular array; the triangle entry at row n >= 1
// is m2r_rect_term(n-1, k).
Int m2r_rect_term(int n, int k);

enum class FormulaId { M1Sum, M1Direct, M1RSum, M2Expr1, M2Expr2, M2Expr3, M2RRect };

// Whether the closed form is warranted to reproduce its triangle at (n, k).
bool formula_validated(FormulaId id, int n, int k);

// Machine-readable description of every formula's validated range.
std::string formula_manifest_json();

}  // namespace mpap
