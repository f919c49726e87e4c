#pragma once

#include <optional>
#include <vector>

#include "mpap/series.hpp"

namespace mpap {

// Proper Riordan array (g, f): g a unit series, f of valuation exactly 1.
// Entry (n, k) is the coefficient of z^n in g * f^k.
struct RiordanArray {
  USeries g, f;
  RiordanArray(USeries g_, USeries f_);
  int order() const { return std::min(g.order(), f.order()); }
};

Rat riordan_term(const RiordanArray& a, int n, int k);
std::vector<std::vector<Rat>> term_matrix(const RiordanArray& a, int rows, int cols);

// Group structure: (g1,f1)*(g2,f2) = (g1 * g2(f1), f2(f1)); the inverse uses
// the compositional inverse of f.
RiordanArray riordan_mul(const RiordanArray& a, const RiordanArray& b);
RiordanArray riordan_inverse(const RiordanArray& a);

// Action on a column vector read as a series: g * h(f).
USeries riordan_apply(const RiordanArray& a, const USeries& h);

// Rectangular reading of the array: entry (n, k) = [z^n] g * (f/z)^k, which
// spreads each column's support down to row 0.
std::vector<std::vector<Rat>> rectify(const RiordanArray& a, int rows, int cols);

// Array whose column 0 is its own series g0 while columns k >= 1 follow a
// Riordan-like law: shifted columns are z*u*g/(1-u*f) (column k = z g f^(k-1)),
// stretched columns are z*u*g/(1-z^2*u*g) (column k = z^(2k-1) g^k).
struct AlmostRiordan {
  USeries g0, g;
  std::optional<USeries> f;  // unused in stretched form
  bool stretched = false;
};

BSeries almost_bivariate(const AlmostRiordan& a, int order, int width);
std::vector<std::vector<Rat>> almost_matrix(const AlmostRiordan& a, int rows, int cols);

// Sign the columns with (-1)^k and square the resulting matrix. involution
// reports square == identity, idempotent reports square == the signed matrix
// itself, both on the given finite window.
struct PseudoInvolution {
  bool involution = false;
  bool idempotent = false;
};
PseudoInvolution pseudo_involution_check(const RiordanArray& a, int size);

}  // namespace mpap
