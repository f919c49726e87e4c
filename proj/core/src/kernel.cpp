#include "mpap/kernel.hpp"

#include <stdexcept>

namespace mpap {

namespace {

USeries disc_poly(Family f, int order) {
  USeries d(order);
  if (f == Family::M1 || f == Family::M1R) {
    // 1 - 4z + 2z^2 - 4z^3 + z^4
    d.set(0, 1);
    if (order >= 1) d.set(1, -4);
    if (order >= 2) d.set(2, 2);
    if (order >= 3) d.set(3, -4);
    if (order >= 4) d.set(4, 1);
  } else {
    // 1 - 2z - 3z^2
    d.set(0, 1);
    if (order >= 1) d.set(1, -2);
    if (order >= 2) d.set(2, -3);
  }
  return d;
}

}  // namespace

KernelRoots kernel_roots(Family f, int order) {
  // Work two orders high so the valuation-1 shifts land on the asked order.
  int w = order + 2;
  USeries one = USeries::constant(1, w);
  USeries z = USeries::z(w);
  USeries disc = disc_poly(f, w);
  USeries root = sqrt_series(disc);
  USeries s(0), rf(0);
  switch (f) {
    case Family::M1: {
      s = (one - z * z - root).shift_down(1).scaled(Rat(1, 2));
      rf = z.scaled(2).div(one - z * z + root);  // 1/r
      break;
    }
    case Family::M1R: {
      USeries denom = (one - z + z * z).scaled(2);
      rf = (one - z * z + root).div(denom);  // r itself, a unit
      s = (one - z * z - root).div(denom);
      break;
    }
    case Family::M2: {
      s = (one + z - root).shift_down(1).scaled(Rat(1, 2)).div((one + z).truncated(w - 1));
      rf = (z * (one + z)).scaled(2).div(one + z + root);  // 1/r
      break;
    }
    case Family::M2R: {
      rf = (one + z + root).scaled(Rat(1, 2));  // r itself
      s = (one + z - root).scaled(Rat(1, 2));
      break;
    }
  }
  return KernelRoots{f, disc.truncated(order), root.truncated(order),
                     s.truncated(order), rf.truncated(order)};
}

namespace {

// Successive powers of 1/r for the families that need them, all at the
// internal working order.
std::vector<USeries> inv_powers(const USeries& inv, int count) {
  std::vector<USeries> p;
  p.reserve(count + 1);
  p.push_back(USeries::constant(1, inv.order()));
  for (int k = 1; k <= count; ++k) p.push_back(p.back() * inv);
  return p;
}

GfBundle closed_m1(int N, int K) {
  int w = N + 2;
  KernelRoots kr = kernel_roots(Family::M1, w);
  USeries one = USeries::constant(1, w);
  auto ip = inv_powers(kr.r_form, K + 2);
  GfBundle b{Family::M1, N, K, {}, {}, {}, {}, USeries(0)};
  USeries sm1 = kr.s - one;
  for (int k = 0; k <= K; ++k) {
    USeries f = ip[k];
    USeries g = sm1 * ip[k] - ip[k + 1].shift_up(1);
    USeries h = ip[k + 1];
    b.f.push_back(f.truncated(N));
    b.g.push_back(g.truncated(N));
    b.h.push_back(h.truncated(N));
    b.total.push_back((f + g + h).truncated(N));
  }
  // F(z,1) = r(s-1)/(2z) = (s-1) / (2 z / r); both sides have valuation 2.
  b.aux = sm1.shift_down(2).div(kr.r_form.shift_down(1).scaled(2)).truncated(N);
  return b;
}

GfBundle closed_m1r(int N, int K) {
  int w = N + 2;
  KernelRoots kr = kernel_roots(Family::M1R, w);
  USeries one = USeries::constant(1, w);
  USeries z = USeries::z(w);
  USeries rinv = one.div(kr.r_form);
  auto ip = inv_powers(rinv, K + 2);
  GfBundle b{Family::M1R, N, K, {}, {}, {}, {}, USeries(0)};
  USeries gshape = kr.s * (one - kr.r_form + kr.r_form * z);
  for (int k = 0; k <= K; ++k) {
    USeries f = k == 0 ? one : kr.s * ip[k - 1];
    USeries g = gshape * ip[k + 1];
    USeries h = kr.s * ip[k];
    if (k >= 1) h = h - (one - z) * kr.s * ip[k - 1];
    b.f.push_back(f.truncated(N));
    b.g.push_back(g.truncated(N));
    b.h.push_back(h.truncated(N));
    b.total.push_back((f + g + h).truncated(N));
  }
  b.aux = ((one - kr.r_form).div(kr.r_form) - kr.s.shift_up(1)).truncated(N);
  return b;
}

GfBundle closed_m2(int N, int K) {
  int w = N + 2;
  KernelRoots kr = kernel_roots(Family::M2, w);
  USeries one = USeries::constant(1, w);
  USeries z = USeries::z(w);
  auto ip = inv_powers(kr.r_form, K + 1);
  GfBundle b{Family::M2, N, K, {}, {}, {}, {}, USeries(0)};
  USeries gshape = (one + z) * (kr.s - one);
  for (int k = 0; k <= K; ++k) {
    USeries f = ip[k];
    USeries g = gshape * ip[k];
    USeries h = ip[k].shift_up(1);
    b.f.push_back(f.truncated(N));
    b.g.push_back(g.truncated(N));
    b.h.push_back(h.truncated(N));
    b.total.push_back((f + g + h).truncated(N));
  }
  // F(z,1) = (s-1)/(s z^2)
  b.aux = (kr.s - one).shift_down(2).div(kr.s).truncated(N);
  return b;
}

GfBundle closed_m2r(int N, int K) {
  int w = N + 2;
  KernelRoots kr = kernel_roots(Family::M2R, w);
  USeries one = USeries::constant(1, w);
  USeries rinv = one.div(kr.r_form);
  auto ip = inv_powers(rinv, K + 2);
  GfBundle b{Family::M2R, N, K, {}, {}, {}, {}, USeries(0)};
  for (int k = 0; k <= K; ++k) {
    USeries f = k == 0 ? one : ip[k].shift_up(1);
    USeries g = (one - kr.r_form) * ip[k + 1];
    USeries h = ip[k + 1].shift_up(1);
    if (k >= 1) h = h - ip[k].shift_up(1);
    b.f.push_back(f.truncated(N));
    b.g.push_back(g.truncated(N));
    b.h.push_back(h.truncated(N));
    b.total.push_back((f + g + h).truncated(N));
  }
  b.aux = ((one - kr.r_form) * rinv).truncated(N);
  return b;
}

}  // namespace

GfBundle gf_closed_forms(Family f, int order, int width) {
  switch (f) {
    case Family::M1: return closed_m1(order, width);
    case Family::M1R: return closed_m1r(order, width);
    case Family::M2: return closed_m2(order, width);
    case Family::M2R: return closed_m2r(order, width);
  }
  throw std::logic_error("bad family");
}

namespace {

using Grid = std::vector<std::vector<Rat>>;  // [column][z-order]

GfBundle bundle_from_grids(Family fam, int N, int K, const Grid& f, const Grid& g,
                           const Grid& h, const USeries& aux) {
  GfBundle b{fam, N, K, {}, {}, {}, {}, aux};
  for (int k = 0; k <= K; ++k) {
    USeries fs(N), gs(N), hs(N);
    for (int n = 0; n <= N; ++n) {
      fs.set(n, f[k][n]);
      gs.set(n, g[k][n]);
      hs.set(n, h[k][n]);
    }
    b.f.push_back(fs);
    b.g.push_back(gs);
    b.h.push_back(hs);
    b.total.push_back(fs + gs + hs);
  }
  return b;
}

GfBundle iterate_short(Family fam, int N, int K) {
  // M1/M2: a path of length n never climbs above n, so a window of
  // max(K, N) columns closes the tail sums exactly.
  int W = std::max(K, N);
  Grid f(W + 1, std::vector<Rat>(N + 1)), g = f, h = f;
  f[0][0] = 1;
  for (int n = 1; n <= N; ++n) {
    for (int k = 0; k <= W; ++k) {
      if (k >= 1) f[k][n] = f[k - 1][n - 1] + g[k - 1][n - 1] + h[k - 1][n - 1];
      Rat tail;
      int top = std::min(W, n - 1);
      for (int l = k + 1; l <= top; ++l) {
        tail += f[l][n - 1];
        if (fam == Family::M1) tail += h[l][n - 1];
      }
      g[k][n] = tail;
      if (fam == Family::M1)
        h[k][n] = f[k][n - 1] + g[k][n - 1] + h[k][n - 1];
      else
        h[k][n] = f[k][n - 1];
    }
  }
  USeries aux(N);  // F(z,1): columns above n contribute nothing at order n
  for (int n = 0; n <= N; ++n) {
    Rat acc;
    for (int k = 0; k <= W; ++k) acc += f[k][n];
    aux.set(n, acc);
  }
  return bundle_from_grids(fam, N, K, f, g, h, aux);
}

GfBundle iterate_tall(Family fam, int N, int K) {
  // M1R/M2R: the down-step equation chains column k to column k+1, so pad
  // the window by the z-order; columns <= K are then exact.
  int W = K + N;
  Grid f(W + 2, std::vector<Rat>(N + 1)), g = f, h = f;
  f[0][0] = 1;
  for (int n = 1; n <= N; ++n) {
    for (int k = 0; k <= W; ++k) {
      if (k >= 1) {
        Rat acc = n == 1 ? Rat(1) : Rat(0);
        for (int j = 0; j < k; ++j) {
          acc += g[j][n - 1];
          if (fam == Family::M1R) acc += h[j][n - 1];
        }
        f[k][n] = acc;
      }
      g[k][n] = f[k + 1][n - 1] + g[k + 1][n - 1] + h[k + 1][n - 1];
      if (fam == Family::M1R) {
        h[k][n] = f[k][n - 1] + g[k][n - 1] + h[k][n - 1];
      } else {
        h[k][n] = g[k][n - 1];
        if (k == 0 && n == 1) h[k][n] += 1;
      }
    }
  }
  USeries aux(N);
  for (int n = 0; n <= N; ++n) aux.set(n, g[0][n]);
  return bundle_from_grids(fam, N, K, f, g, h, aux);
}

}  // namespace

GfBundle gf_by_iteration(Family f, int order, int width) {
  if (f == Family::M1 || f == Family::M2) return iterate_short(f, order, width);
  return iterate_tall(f, order, width);
}

namespace {

BSeries embed_column0(const USeries& s, int width) {
  BSeries b(s.order(), width);
  for (int n = 0; n <= s.order(); ++n) b.set(n, 0, s[n]);
  return b;
}

BSeries embed_constant(const Rat& v, int order, int width) {
  BSeries b(order, width);
  b.set(0, 0, v);
  return b;
}

std::string first_nonzero(const BSeries& r) {
  for (int n = 0; n <= r.order(); ++n)
    for (int k = 0; k <= r.width(); ++k)
      if (r.at(n, k) != 0)
        return "first residual at z^" + std::to_string(n) + " u^" + std::to_string(k);
  return "";
}

}  // namespace

Report verify_functional_equations(const GfBundle& b) {
  Report rep{"functional-equations:" + family_tag(b.family), {}};
  int N = b.order, K = b.width;
  USeries z = USeries::z(N);
  BSeries F = b.f_bseries(), G = b.g_bseries(), H = b.h_bseries();
  BSeries one_b = embed_constant(1, N, K);
  BSeries z_b = embed_column0(z, K);

  auto check = [&](const std::string& name, const BSeries& residual) {
    BSeries r = residual.truncated(N, K);
    bool ok = r.is_zero();
    rep.add(name, ok, ok ? "" : first_nonzero(r));
  };

  switch (b.family) {
    case Family::M1: {
      USeries f1(N), h1(N);
      {  // u = 1 sections need the full column window
        f1 = F.eval_u(Rat(1));
        h1 = H.eval_u(Rat(1));
      }
      check("up-equation", F - one_b - (F + G + H).mul_z(z).shift_u(1));
      check("down-equation", G.shift_u(1) - G -
                                 (F - embed_column0(f1, K) + H - embed_column0(h1, K)).mul_z(z));
      check("flat-equation", H - (F + G + H).mul_z(z));
      break;
    }
    case Family::M2: {
      USeries f1 = F.eval_u(Rat(1));
      check("up-equation", F - one_b - (F + G + H).mul_z(z).shift_u(1));
      check("down-equation", G.shift_u(1) - G - (F - embed_column0(f1, K)).mul_z(z));
      check("flat-equation", H - F.mul_z(z));
      break;
    }
    case Family::M1R: {
      BSeries Fm1 = F - one_b;
      BSeries F0 = embed_column0(b.f[0], K), G0 = embed_column0(b.g[0], K),
              H0 = embed_column0(b.h[0], K);
      check("up-equation", Fm1 - Fm1.shift_u(1) - (G + H + one_b).mul_z(z).shift_u(1));
      check("down-equation", G.shift_u(1) - (F - F0 + G - G0 + H - H0).mul_z(z));
      check("flat-equation", H - (F + G + H).mul_z(z));
      break;
    }
    case Family::M2R: {
      BSeries Fm1 = F - one_b;
      BSeries F0 = embed_column0(b.f[0], K), G0 = embed_column0(b.g[0], K),
              H0 = embed_column0(b.h[0], K);
      check("up-equation", Fm1 - Fm1.shift_u(1) - (G + one_b).mul_z(z).shift_u(1));
      check("down-equation", G.shift_u(1) - (F - F0 + G - G0 + H - H0).mul_z(z));
      check("flat-equation", H - z_b - G.mul_z(z));
      break;
    }
  }
  return rep;
}

}  // namespace mpap
