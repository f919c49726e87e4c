#include "mpap/triangles.hpp"

#include <stdexcept>

#include "mpap/formulas.hpp"

namespace mpap {

Route route_from_tag(std::string_view tag) {
  if (tag == "enum") return Route::Enumeration;
  if (tag == "iter") return Route::Iteration;
  if (tag == "closed") return Route::ClosedForm;
  if (tag == "recur") return Route::Recurrence;
  if (tag == "riordan") return Route::Riordan;
  throw std::invalid_argument("unknown route tag: " + std::string(tag));
}

std::string route_tag(Route r) {
  switch (r) {
    case Route::Enumeration: return "enum";
    case Route::Iteration: return "iter";
    case Route::ClosedForm: return "closed";
    case Route::Recurrence: return "recur";
    case Route::Riordan: return "riordan";
  }
  return "?";
}

RouteUnavailable::RouteUnavailable(Family f, Route r)
    : std::runtime_error("route " + route_tag(r) + " is not defined for family " +
                         family_tag(f)) {}

namespace {

std::vector<std::vector<Int>> ints_from_bundle(const GfBundle& b, int rows, int cols) {
  std::vector<std::vector<Int>> data(rows, std::vector<Int>(cols));
  for (int k = 0; k < cols; ++k) {
    auto col = b.total[static_cast<size_t>(k)].int_coeffs();
    for (int n = 0; n < rows; ++n) data[n][k] = col[static_cast<size_t>(n)];
  }
  return data;
}

std::vector<std::vector<Int>> recurrence_data(Family f, int rows, int cols) {
  std::vector<std::vector<Int>> t(rows, std::vector<Int>(cols));
  auto at = [&](int n, int k) -> Int {
    if (n < 0 || k < 0 || n >= rows || k >= cols) return Int(0);
    return t[static_cast<size_t>(n)][static_cast<size_t>(k)];
  };
  auto col0 = first_column(f, rows - 1);
  for (int n = 0; n < rows; ++n) t[n][0] = col0[static_cast<size_t>(n)];
  if (cols > 1 && rows > 1) t[1][1] = 1;
  for (int n = 2; n < rows; ++n)
    for (int k = 1; k < cols; ++k) {
      if (f == Family::M1)
        t[n][k] = at(n, k - 1) + at(n - 1, k) - at(n - 1, k - 2) - at(n - 2, k) -
                  at(n - 2, k - 1);
      else
        t[n][k] = at(n, k - 1) + at(n - 1, k - 1) - at(n - 1, k - 2) - at(n - 2, k - 2);
    }
  return t;
}

}  // namespace

RiordanArray riordan_pair(Family f, int order) {
  int w = order + 2;
  USeries one = USeries::constant(1, w);
  USeries z = USeries::z(w);
  switch (f) {
    case Family::M1: {
      // g is the column-0 generating function; the column ratio is z*g.
      KernelRoots kr = kernel_roots(Family::M1, w);
      USeries g = (one - z * z - kr.sqrt_disc)
                      .shift_down(1)
                      .div((one - z + z * z).truncated(w - 1).scaled(2));
      return RiordanArray(g.truncated(order), g.truncated(order - 1).shift_up(1));
    }
    case Family::M2: {
      USeries g = one + named_series(Named::Motzkin, w - 1).shift_up(1);
      return RiordanArray(g.truncated(order), g.truncated(order - 1).shift_up(1));
    }
    default:
      throw RouteUnavailable(f, Route::Riordan);
  }
}

RiordanArray rectification_pair(Family f, int order) {
  int w = order + 4;
  USeries one = USeries::constant(1, w);
  USeries z = USeries::z(w);
  switch (f) {
    case Family::M1R: {
      KernelRoots kr = kernel_roots(Family::M1, w);
      USeries num = one - z.scaled(3) + z * z - z * z * z - (one - z) * kr.sqrt_disc;
      USeries g = num.shift_down(3).div((one - z + z * z).truncated(w - 3).scaled(2));
      USeries inner = kr.s.truncated(w - 1).shift_up(1);
      return RiordanArray(g.truncated(order), inner.truncated(order));
    }
    case Family::M2R: {
      USeries g = named_series(Named::Motzkin, order);
      USeries inner = named_series(Named::RiordanNumbers, order - 1).shift_up(1);
      return RiordanArray(g, inner);
    }
    default:
      throw RouteUnavailable(f, Route::Riordan);
  }
}

Triangle build_triangle(Family f, Route r, int rows, int cols) {
  Triangle t{f, r, rows, cols, {}};
  switch (r) {
    case Route::Enumeration: {
      CountTable ct = count_table(f, rows - 1, cols - 1);
      t.data = std::move(ct.counts);
      break;
    }
    case Route::Iteration:
      t.data = ints_from_bundle(gf_by_iteration(f, rows - 1, cols - 1), rows, cols);
      break;
    case Route::ClosedForm:
      t.data = ints_from_bundle(gf_closed_forms(f, rows - 1, cols - 1), rows, cols);
      break;
    case Route::Recurrence:
      if (f != Family::M1 && f != Family::M2) throw RouteUnavailable(f, r);
      t.data = recurrence_data(f, rows, cols);
      break;
    case Route::Riordan: {
      auto m = term_matrix(riordan_pair(f, rows - 1), rows, cols);
      t.data.assign(rows, std::vector<Int>(cols));
      for (int n = 0; n < rows; ++n)
        for (int k = 0; k < cols; ++k) {
          if (m[n][k].get_den() != 1) throw NonIntegerCoefficient(n);
          t.data[n][k] = m[n][k].get_num();
        }
      break;
    }
  }
  return t;
}

std::vector<Int> first_column(Family f, int n_max) {
  std::vector<Int> t(n_max + 1);
  if (n_max >= 0) t[0] = 1;
  if (n_max >= 1) t[1] = 1;
  bool m1_kind = (f == Family::M1 || f == Family::M1R);
  for (int n = 2; n <= n_max; ++n) {
    if (m1_kind) {
      Int acc = t[n - 1] + t[n - 2];
      for (int k = 0; k <= n - 3; ++k) acc += t[k] * t[n - k - 3];
      for (int k = 2; k <= n - 1; ++k) acc += (t[k] - t[k - 1]) * t[n - k - 1];
      t[n] = acc;
    } else {
      Int acc = t[n - 1];
      for (int k = 1; k <= n - 2; ++k) acc += t[k] * t[n - 1 - k];
      t[n] = acc;
    }
  }
  return t;
}

std::vector<std::vector<Int>> pascal_like_b(int rows, int cols) {
  std::vector<std::vector<Int>> b(rows, std::vector<Int>(cols));
  if (rows > 0 && cols > 0) b[0][0] = 1;
  for (int n = 1; n < rows; ++n)
    for (int k = 1; k < cols; ++k) b[n][k] = binomial(Int(k - 1), n - 1);
  return b;
}

Report triangle_recurrence_check(Family f, const Triangle& t) {
  Report rep{"triangle-recurrence:" + family_tag(f), {}};
  auto at = [&](int n, int k) { return t.at0(n, k); };
  int rows = t.rows, cols = t.cols;

  auto residual = [&](int n, int k) -> Int {
    switch (f) {
      case Family::M1:
        return at(n, k) - (at(n, k - 1) + at(n - 1, k) - at(n - 1, k - 2) -
                           at(n - 2, k) - at(n - 2, k - 1));
      case Family::M1R:
        return at(n, k) - (at(n - 2, k - 1) + at(n - 2, k) - at(n - 1, k - 1) +
                           at(n - 1, k + 1) + at(n, k - 1));
      case Family::M2:
        return at(n, k) - (at(n, k - 1) + at(n - 1, k - 1) - at(n - 1, k - 2) -
                           at(n - 2, k - 2));
      case Family::M2R:
        return at(n, k) - (at(n, k - 1) - at(n - 1, k) + at(n - 2, k + 1) +
                           at(n - 1, k + 1));
    }
    return Int(0);
  };

  // Recurrences referencing column k+1 need that column inside the window.
  bool uses_next = (f == Family::M1R || f == Family::M2R);
  int k_top = uses_next ? cols - 2 : cols - 1;
  bool stated = true;
  std::string where;
  for (int n = 2; n < rows; ++n)
    for (int k = 1; k <= k_top; ++k)
      if (residual(n, k) != 0 && stated) {
        stated = false;
        where = "fails at (" + std::to_string(n) + "," + std::to_string(k) + ")";
      }
  rep.add("recurrence-from-row-2", stated, where);

  bool row1_clean = true;
  for (int k = 1; k <= k_top; ++k)
    if (residual(1, k) != 0) row1_clean = false;
  // Row 1 extends the recurrence for M1 and M2R but genuinely breaks it for
  // M1R and M2, so pin the observed boundary either way.
  if (f == Family::M1 || f == Family::M2R) {
    rep.add("row-1-extension-holds", row1_clean);
  } else {
    rep.add("row-1-exclusion-justified", !row1_clean,
            row1_clean ? "recurrence unexpectedly holds on row 1" : "");
  }
  return rep;
}

Report first_column_recurrence_check(Family f, int n_max) {
  Report rep{"first-column:" + family_tag(f), {}};
  auto rec = first_column(f, n_max);
  GfBundle b = gf_closed_forms(f, n_max, 0);
  auto closed = b.total[0].int_coeffs();
  bool ok = true;
  for (int n = 0; n <= n_max; ++n)
    if (rec[static_cast<size_t>(n)] != closed[static_cast<size_t>(n)]) ok = false;
  rep.add("recurrence-matches-closed-column", ok);
  return rep;
}

Report column0_cross_family_check(int n_max) {
  Report rep{"column0-cross-family", {}};
  auto c_m1 = gf_closed_forms(Family::M1, n_max, 0).total[0].int_coeffs();
  auto c_m1r = gf_closed_forms(Family::M1R, n_max, 0).total[0].int_coeffs();
  auto c_m2 = gf_closed_forms(Family::M2, n_max, 0).total[0].int_coeffs();
  auto c_m2r = gf_closed_forms(Family::M2R, n_max, 0).total[0].int_coeffs();
  rep.add("m1-equals-m1r", c_m1 == c_m1r);
  rep.add("m2-equals-m2r", c_m2 == c_m2r);
  return rep;
}

namespace {

AlmostRiordan decomposition_a(Family f, int order) {
  int w = order + 4;
  USeries one = USeries::constant(1, w);
  USeries z = USeries::z(w);
  if (f == Family::M1R) {
    KernelRoots kr = kernel_roots(Family::M1R, w);
    USeries quad = (one - z + z * z);
    USeries g0 = (one - z * z - kr.sqrt_disc).shift_down(1).div(quad.truncated(w - 1).scaled(2));
    USeries num = one - z.scaled(3) + z * z - z * z * z - (one - z) * kr.sqrt_disc;
    USeries g = num.shift_down(3).div(quad.truncated(w - 3).scaled(2));
    USeries fa = (one - z.scaled(2) - z * z - kr.sqrt_disc).shift_down(1).scaled(Rat(1, 2));
    return AlmostRiordan{g0.truncated(order), g.truncated(order), fa.truncated(order), false};
  }
  if (f == Family::M2R) {
    KernelRoots kr = kernel_roots(Family::M2R, w);
    USeries g0 = one + named_series(Named::Motzkin, w - 1).shift_up(1);
    USeries num = one - z - (z * z).scaled(2) - kr.sqrt_disc;
    USeries g = num.shift_down(3).div((one + z).truncated(w - 3).scaled(2));
    return AlmostRiordan{g0.truncated(order), g.truncated(order), std::nullopt, true};
  }
  throw std::invalid_argument("decomposition exists for m1r and m2r only");
}

}  // namespace

Report decomposition_check(Family f, int size) {
  Report rep{"decomposition:" + family_tag(f), {}};
  Triangle t = build_triangle(f, Route::ClosedForm, size, size);
  AlmostRiordan ar = decomposition_a(f, size - 1);
  auto a = almost_matrix(ar, size, size);
  auto b = pascal_like_b(size, size);
  bool ok = true;
  std::string where;
  for (int n = 0; n < size && ok; ++n)
    for (int k = 0; k < size && ok; ++k) {
      Rat acc;
      for (int j = 0; j < size; ++j) acc += a[n][j] * Rat(b[j][k]);
      if (acc != Rat(t.at(n, k))) {
        ok = false;
        where = "differs at (" + std::to_string(n) + "," + std::to_string(k) + ")";
      }
    }
  rep.add("product-reconstructs-triangle", ok, where);
  return rep;
}

Report convolution_checks(int n_max) {
  Report rep{"convolutions", {}};
  int w = n_max + 4;
  USeries one = USeries::constant(1, w);
  USeries z = USeries::z(w);
  USeries zq = (z * (one - z + z * z)).div(((one - z * z) * (one - z * z)).truncated(w - 1));
  USeries u = compose(named_series(Named::Catalan, w), zq);

  // Same sequence through the array expansion sum_k [z^n] zq^k * c_k.
  int ord = zq.order();
  USeries u2(ord);
  {
    USeries pw = one.truncated(ord);
    for (int k = 0; k <= ord; ++k) {
      Rat ck = Rat(catalan_number(k));
      for (int n = 0; n <= ord; ++n) u2.set(n, u2[n] + pw[n] * ck);
      pw = pw * zq;
    }
  }
  rep.add("aux-sequence-two-routes", u.truncated(n_max) == u2.truncated(n_max));

  auto col0 = gf_closed_forms(Family::M1, n_max, 0).total[0].int_coeffs();
  bool conv_ok = true;
  for (int n = 0; n <= n_max; ++n) {
    Rat acc;
    for (int k = 0; k <= n; k += 2) acc += u[n - k];
    if (acc != Rat(col0[static_cast<size_t>(n)])) conv_ok = false;
  }
  rep.add("column0-even-offset-convolution", conv_ok);
  return rep;
}

Report cross_route_equality(Family f, int n_max, int k_max) {
  Report rep{"cross-route:" + family_tag(f), {}};
  CountTable ct = count_table(f, n_max, k_max);
  GfBundle it = gf_by_iteration(f, n_max, k_max);
  GfBundle cf = gf_closed_forms(f, n_max, k_max);

  bool totals = true, split = true;
  for (int n = 0; n <= n_max && totals; ++n)
    for (int k = 0; k <= k_max; ++k) {
      Rat c(ct.counts[n][k]);
      if (c != it.total[k][n] || c != cf.total[k][n]) {
        totals = false;
        break;
      }
    }
  for (int n = 0; n <= n_max && split; ++n)
    for (int k = 0; k <= k_max; ++k) {
      const auto& s = ct.by_class[n][k];
      if (Rat(s.up) != it.f[k][n] || Rat(s.down) != it.g[k][n] ||
          Rat(s.flat) != it.h[k][n] || Rat(s.up) != cf.f[k][n] ||
          Rat(s.down) != cf.g[k][n] || Rat(s.flat) != cf.h[k][n]) {
        split = false;
        break;
      }
    }
  rep.add("enumeration-iteration-closed-totals", totals);
  rep.add("last-step-split-matches-fgh", split);

  if (f == Family::M1 || f == Family::M2) {
    Triangle rec = build_triangle(f, Route::Recurrence, n_max + 1, k_max + 1);
    Triangle rio = build_triangle(f, Route::Riordan, n_max + 1, k_max + 1);
    bool rec_ok = true, rio_ok = true;
    for (int n = 0; n <= n_max; ++n)
      for (int k = 0; k <= k_max; ++k) {
        if (rec.at(n, k) != ct.counts[n][k]) rec_ok = false;
        if (rio.at(n, k) != ct.counts[n][k]) rio_ok = false;
      }
    rep.add("recurrence-route", rec_ok);
    rep.add("riordan-route", rio_ok);
  }
  return rep;
}

}  // namespace mpap
