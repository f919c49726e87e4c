// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "mpap/triangles.hpp"
#include "mpap/verify.hpp"

using namespace mpap;

namespace {

int failures = 0;

void criterion(int num, const std::string& what, bool pass) {
  std::cout << "criterion " << num << " (" << what << "): " << (pass ? "PASS" : "FAIL")
            << std::endl;
  if (!pass) ++failures;
}

bool report_ok(const Report& r) {
  if (r.ok()) return true;
  for (const auto& c : r.checks)
    if (!c.pass)
      std::cerr << "  failed: " << r.suite << " / " << c.name
                << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  return false;
}

bool block_matches(const Triangle& t, const std::vector<std::vector<long>>& rows,
                   int cols) {
  for (int n = 0; n < static_cast<int>(rows.size()); ++n)
    for (int k = 0; k < cols; ++k) {
      long want = k < static_cast<int>(rows[n].size()) ? rows[n][k] : 0;
      if (t.at(n, k) != want) return false;
    }
  return true;
}

const std::vector<std::vector<long>> kM1 = {
    {1},
    {1, 1},
    {2, 2, 1},
    {5, 5, 3, 1},
    {13, 14, 9, 4, 1},
    {36, 40, 28, 14, 5, 1},
    {105, 118, 87, 48, 20, 6, 1},
    {317, 359, 273, 161, 75, 27, 7, 1},
    {982, 1118, 869, 536, 270, 110, 35, 8, 1},
};

const std::vector<std::vector<long>> kM1R = {
    {1, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 1, 1, 1, 1},
    {2, 3, 3, 3, 3, 3, 3},
    {5, 8, 10, 12, 14, 16, 18},
    {13, 23, 33, 43, 53, 63, 73},
    {36, 69, 107, 149, 195, 245, 299},
    {105, 212, 348, 512, 704, 924, 1172},
    {317, 665, 1141, 1753, 2509, 3417, 4485},
    {982, 2123, 3771, 5999, 8879, 12483, 16883},
};

const std::vector<std::vector<long>> kM2 = {
    {1},
    {1, 1},
    {1, 2, 1},
    {2, 3, 3, 1},
    {4, 6, 6, 4, 1},
    {9, 13, 13, 10, 5, 1},
    {21, 30, 30, 24, 15, 6, 1},
    {51, 72, 72, 59, 40, 21, 7, 1},
    {127, 178, 178, 148, 105, 62, 28, 8, 1},
};

const std::vector<std::vector<long>> kM2R = {
    {1, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 1, 1, 1, 1, 1},
    {1, 1, 1, 1, 1, 1, 1, 1},
    {2, 3, 4, 5, 6, 7, 8, 9},
    {4, 6, 8, 10, 12, 14, 16, 18},
    {9, 15, 22, 30, 39, 49, 60, 72},
    {21, 36, 54, 75, 99, 126, 156, 189},
    {51, 91, 142, 205, 281, 371, 476, 597},
    {127, 232, 370, 545, 761, 1022, 1332, 1695},
};

bool seq_is(const std::vector<Int>& got, const std::vector<long>& want) {
  if (got.size() < want.size()) return false;
  for (size_t i = 0; i < want.size(); ++i)
    if (got[i] != want[i]) return false;
  return true;
}

std::vector<Int> row_sums(const Triangle& t) {
  std::vector<Int> out;
  for (int n = 0; n < t.rows; ++n) {
    Int acc = 0;
    for (int k = 0; k < t.cols; ++k) acc += t.at0(n, k);
    out.push_back(acc);
  }
  return out;
}

std::vector<Int> antidiagonal_sums(const Triangle& t, int count) {
  std::vector<Int> out;
  for (int n = 0; n < count; ++n) {
    Int acc = 0;
    for (int l = 0; l <= n; ++l) acc += t.at0(l, n - l);
    out.push_back(acc);
  }
  return out;
}

std::vector<Int> column(const Triangle& t, int k) {
  std::vector<Int> out;
  for (int n = 0; n < t.rows; ++n) out.push_back(t.at0(n, k));
  return out;
}

}  // namespace

int main() {
  {
    bool ok = block_matches(build_triangle(Family::M1, Route::ClosedForm, 9, 9), kM1, 9) &&
              block_matches(build_triangle(Family::M1R, Route::ClosedForm, 9, 7), kM1R, 7) &&
              block_matches(build_triangle(Family::M2, Route::ClosedForm, 9, 9), kM2, 9) &&
              block_matches(build_triangle(Family::M2R, Route::ClosedForm, 9, 8), kM2R, 8);
    criterion(1, "reference blocks", ok);
  }

  {
    Triangle m1 = build_triangle(Family::M1, Route::ClosedForm, 12, 12);
    Triangle m1r = build_triangle(Family::M1R, Route::ClosedForm, 10, 10);
    Triangle m2 = build_triangle(Family::M2, Route::ClosedForm, 10, 10);
    Triangle m2r = build_triangle(Family::M2R, Route::ClosedForm, 10, 10);
    USeries pair_g = riordan_pair(Family::M1, 11).g;
    USeries one = USeries::constant(1, 11);
    USeries z = USeries::z(11);
    std::vector<Int> u = (pair_g * (one - z * z)).int_coeffs();
    bool ok =
        seq_is(row_sums(m1), {1, 2, 5, 14, 41, 124, 385, 1220, 3929, 12822}) &&
        seq_is(column(m1, 0),
               {1, 1, 2, 5, 13, 36, 105, 317, 982, 3105, 9981, 32520}) &&
        seq_is(antidiagonal_sums(m1r, 10),
               {1, 1, 3, 9, 25, 73, 223, 697, 2217, 7161}) &&
        seq_is(row_sums(m2), {1, 2, 4, 9, 21, 51, 127, 323, 835, 2188}) &&
        seq_is(column(m2, 0), {1, 1, 1, 2, 4, 9, 21, 51, 127, 323}) &&
        seq_is(antidiagonal_sums(m2r, 10),
               {1, 1, 2, 4, 9, 21, 51, 127, 323, 835}) &&
        seq_is(u, {1, 1, 1, 4, 11, 31, 92, 281, 877, 2788, 8999, 29415});
    criterion(2, "reference sequences", ok);
  }

  {
    std::map<int, int> dist;
    int m2_len3_total = 0;
    enumerate_paths(Family::M2, 3, 3, [&](const LatticePath& p) {
      ++dist[p.end_height()];
      ++m2_len3_total;
    });
    bool m2_len3 = m2_len3_total == 9 && dist[0] == 2 && dist[1] == 3 &&
                   dist[2] == 3 && dist[3] == 1;

    int m2r_diag_total = 0, m2r_diag_axis = 0;
    for (int len = 0; len <= 4; ++len) {
      int want = 4 - len;
      enumerate_paths(Family::M2R, len, want, [&](const LatticePath& p) {
        if (p.end_height() != want) return;
        ++m2r_diag_total;
        if (want == 0) ++m2r_diag_axis;
      });
    }
    bool m2r_diag = m2r_diag_total == 9 && m2r_diag_axis == 4;
    criterion(3, "worked path examples", m2_len3 && m2r_diag);
  }

  {
    bool ok = true;
    for (Family f : {Family::M1, Family::M2, Family::M1R, Family::M2R})
      ok = report_ok(cross_route_equality(f, 12, 12)) && ok;
    criterion(4, "route agreement to depth 12", ok);
  }

  {
    bool ok = true;
    for (Family f : {Family::M1, Family::M2, Family::M1R, Family::M2R})
      ok = report_ok(verify_functional_equations(gf_closed_forms(f, 16, 16))) && ok;
    criterion(5, "functional-equation residuals at order 16", ok);
  }

  criterion(6, "kernel identities at order 24", report_ok(verify_kernel(24, 24)));

  {
    bool ok = report_ok(verify_riordan(16)) &&
              report_ok(decomposition_check(Family::M1R, 16)) &&
              report_ok(decomposition_check(Family::M2R, 16));
    criterion(7, "array identities and rectifications", ok);
  }

  {
    PseudoInvolution pi = pseudo_involution_check(riordan_pair(Family::M2, 20), 16);
    criterion(8,
              std::string("signed square is the identity; idempotent ") +
                  (pi.idempotent ? "true" : "false") + " on the window",
              pi.involution);
  }

  criterion(9, "closed forms match triangles", report_ok(verify_formulas(16, 16)));

  {
    bool ok = true;
    for (Family f : {Family::M1, Family::M2, Family::M1R, Family::M2R}) {
      Triangle t = build_triangle(f, Route::ClosedForm, 17, 17);
      ok = report_ok(triangle_recurrence_check(f, t)) && ok;
      ok = report_ok(first_column_recurrence_check(f, 16)) && ok;
    }
    ok = report_ok(column0_cross_family_check(16)) && ok;
    criterion(10, "recurrences and first columns", ok);
  }

  criterion(11, "embedded reference alignment", report_ok(verify_oeis()));

  return failures == 0 ? 0 : 1;
}
