#include <string>

#include "doctest.h"
#include "mpap/kernel.hpp"

using namespace mpap;

namespace {

bool check_fails(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name && !c.pass) return true;
  return false;
}

}  // namespace

TEST_SUITE("kernel") {

TEST_CASE("discriminants") {
  CHECK(kernel_roots(Family::M1, 8).disc == USeries({1, -4, 2, -4, 1}, 8));
  CHECK(kernel_roots(Family::M1R, 8).disc == USeries({1, -4, 2, -4, 1}, 8));
  CHECK(kernel_roots(Family::M2, 8).disc == USeries({1, -2, -3}, 8));
  CHECK(kernel_roots(Family::M2R, 8).disc == USeries({1, -2, -3}, 8));
}

TEST_CASE("square roots square back") {
  for (Family f : {Family::M1, Family::M2, Family::M1R, Family::M2R}) {
    KernelRoots kr = kernel_roots(f, 12);
    CHECK(kr.sqrt_disc * kr.sqrt_disc == kr.disc);
    CHECK(kr.sqrt_disc[0] == 1);
  }
}

TEST_CASE("root identities") {
  int w = 12;
  USeries one = USeries::constant(1, w);
  USeries z = USeries::z(w);

  KernelRoots m1 = kernel_roots(Family::M1, w);
  CHECK(m1.has_inv_r());
  CHECK(z * m1.s == (one - z + z * z) * m1.r_form);

  KernelRoots m1r = kernel_roots(Family::M1R, w);
  CHECK_FALSE(m1r.has_inv_r());
  CHECK(m1r.r_form[0] == 1);
  CHECK(m1r.r_form * m1r.s * (one - z + z * z) == z);

  KernelRoots m2 = kernel_roots(Family::M2, w);
  CHECK(m2.has_inv_r());
  CHECK(z * (one + z) * m2.s == m2.r_form);

  KernelRoots m2r = kernel_roots(Family::M2R, w);
  CHECK(m2r.r_form * m2r.s == z * (one + z));
  CHECK(m2r.r_form + m2r.s == z + one);
}

TEST_CASE("closed forms match iteration") {
  for (Family f : {Family::M1, Family::M2, Family::M1R, Family::M2R}) {
    GfBundle a = gf_closed_forms(f, 8, 8);
    GfBundle b = gf_by_iteration(f, 8, 8);
    REQUIRE(a.f.size() == b.f.size());
    for (size_t k = 0; k < a.f.size(); ++k) {
      CHECK(a.f[k] == b.f[k]);
      CHECK(a.g[k] == b.g[k]);
      CHECK(a.h[k] == b.h[k]);
      CHECK(a.total[k] == b.total[k]);
    }
    CHECK(a.aux == b.aux);
  }
}

TEST_CASE("residuals vanish on exact bundles") {
  for (Family f : {Family::M1, Family::M2, Family::M1R, Family::M2R}) {
    Report r = verify_functional_equations(gf_closed_forms(f, 10, 10));
    CHECK(r.ok());
    CHECK(r.checks.size() == 3);
  }
}

TEST_CASE("narrow windows are rejected for the u = 1 families") {
  CHECK_THROWS_AS(verify_functional_equations(gf_closed_forms(Family::M1, 8, 4)),
                  WindowTooSmall);
  CHECK_THROWS_AS(verify_functional_equations(gf_closed_forms(Family::M2, 8, 4)),
                  WindowTooSmall);
  // the reversed families eliminate against u = 0 sections and stay happy
  CHECK(verify_functional_equations(gf_closed_forms(Family::M1R, 8, 4)).ok());
  CHECK(verify_functional_equations(gf_closed_forms(Family::M2R, 8, 4)).ok());
}

TEST_CASE("residuals catch an injected fault") {
  GfBundle b = gf_closed_forms(Family::M1, 6, 6);
  b.h[2].set(4, b.h[2][4] + 1);
  Report broken = verify_functional_equations(b);
  CHECK_FALSE(broken.ok());
  CHECK(check_fails(broken, "flat-equation"));

  GfBundle b2 = gf_closed_forms(Family::M2, 6, 6);
  b2.f[1].set(3, b2.f[1][3] + 1);
  Report broken2 = verify_functional_equations(b2);
  CHECK_FALSE(broken2.ok());
  CHECK(check_fails(broken2, "up-equation"));
}

}  // TEST_SUITE
