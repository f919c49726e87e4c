#pragma once

#include <vector>

#include "mpap/paths.hpp"
#include "mpap/report.hpp"
#include "mpap/series.hpp"

namespace mpap {

// Roots of the kernel quadratic of the family's bivariate functional
// equation. s is always the power-series root. The other root r has a pole
// at z = 0 for M1/M2, so those families carry 1/r (a series of valuation 1)
// in r_form; for M1R/M2R the root r itself is a unit series and is stored
// directly. has_inv_r() tells which reading applies.
struct KernelRoots {
  Family family;
  USeries disc;       // kernel discriminant
  USeries sqrt_disc;
  USeries s;
  USeries r_form;
  bool has_inv_r() const { return family == Family::M1 || family == Family::M2; }
};

KernelRoots kernel_roots(Family f, int order);

// Column generating functions of the counting triangle, split by the class
// of the last step: f = ends with up (or empty), g = ends with down,
// h = ends with flat. total = f + g + h. aux holds the scalar series the
// column equations eliminate against: the u = 1 evaluation of F for M1/M2,
// the column-0 of G for M1R/M2R.
struct GfBundle {
  Family family;
  int order;   // z-truncation N
  int width;   // top column K
  std::vector<USeries> f, g, h, total;  // size width+1
  USeries aux;

  BSeries f_bseries() const { return BSeries::from_columns(f); }
  BSeries g_bseries() const { return BSeries::from_columns(g); }
  BSeries h_bseries() const { return BSeries::from_columns(h); }
  BSeries total_bseries() const { return BSeries::from_columns(total); }
};

// Columns from the kernel-root closed forms.
GfBundle gf_closed_forms(Family f, int order, int width);

// Columns by direct coefficient iteration of the functional equations,
// independent of the root extraction.
GfBundle gf_by_iteration(Family f, int order, int width);

// Substitutes a bundle back into the family's functional-equation system and
// reports the residual of each displayed equation. Residuals are checked on
// the (order, width) window the bundle guarantees.
Report verify_functional_equations(const GfBundle& b);

}  // namespace mpap
