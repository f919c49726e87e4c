#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mpap/enumerate.hpp"
#include "mpap/kernel.hpp"
#include "mpap/report.hpp"
#include "mpap/riordan.hpp"

namespace mpap {

// The five independent ways a counting triangle can be produced. Recurrence
// and Riordan constructions exist only for M1 and M2; asking for them on the
// reversed families raises RouteUnavailable.
enum class Route { Enumeration, Iteration, ClosedForm, Recurrence, Riordan };

Route route_from_tag(std::string_view tag);  // enum iter closed recur riordan
std::string route_tag(Route r);

struct RouteUnavailable : std::runtime_error {
  RouteUnavailable(Family f, Route r);
};

struct Triangle {
  Family family;
  Route route;
  int rows, cols;
  std::vector<std::vector<Int>> data;  // [n][k]

  const Int& at(int n, int k) const { return data.at(n).at(k); }
  // reads outside the window count as zero (used by recurrence checks)
  Int at0(int n, int k) const {
    if (n < 0 || k < 0 || n >= rows || k >= cols) return Int(0);
    return data[static_cast<size_t>(n)][static_cast<size_t>(k)];
  }
};

Triangle build_triangle(Family f, Route r, int rows, int cols);

// The proper Riordan pair whose term matrix reproduces the family triangle
// (M1 and M2 only).
RiordanArray riordan_pair(Family f, int order);

// The proper Riordan pair whose rectification reproduces the reversed-family
// block shifted one row up (M1R and M2R only).
RiordanArray rectification_pair(Family f, int order);

// t(n, 0) for n = 0..n_max via the first-column convolution recurrences.
std::vector<Int> first_column(Family f, int n_max);

// Pascal-like factor of the initial-column decompositions: entry (0,0) is 1,
// the rest of row 0 and column 0 vanish, and entry (n, k) for n, k >= 1 is
// binomial(k-1, n-1).
std::vector<std::vector<Int>> pascal_like_b(int rows, int cols);

// Two-dimensional recurrence residuals on a built triangle, including the
// boundary-row probes that pin where each recurrence starts to hold.
Report triangle_recurrence_check(Family f, const Triangle& t);

// First-column recurrence values against the closed-form column.
Report first_column_recurrence_check(Family f, int n_max);

// M1/M1R and M2/M2R share their first column.
Report column0_cross_family_check(int n_max);

// Initial-column decomposition T = A * B for the reversed families: A has a
// bespoke column 0 followed by shifted (M1R) or stretched (M2R) columns, and
// B is the pascal-like factor.
Report decomposition_check(Family f, int size);

// Convolution identities of the M1 column generating function: the auxiliary
// sequence u_n by composition and by its own array expansion, and
// t(n,0) as a sum of u over even offsets.
Report convolution_checks(int n_max);

// Every available route produces the same triangle, and the enumeration
// split by last step matches the f/g/h columns of both series routes.
Report cross_route_equality(Family f, int n_max, int k_max);

}  // namespace mpap
