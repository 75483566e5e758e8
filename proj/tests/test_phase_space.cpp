#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gsteer/phase_space.hpp"
#include "random_states.hpp"

using namespace gsteer;

TEST(CovMat2, VacuumAndThermal) {
  EXPECT_DOUBLE_EQ(CovMat2::vacuum().det(), 0.25);
  EXPECT_TRUE(CovMat2::vacuum().is_physical());
  const CovMat2 th = CovMat2::thermal(0.25);
  EXPECT_DOUBLE_EQ(th(0, 0), 2.0);
  EXPECT_DOUBLE_EQ(th.det(), 4.0);
  EXPECT_THROW(CovMat2::thermal(0.0), InvalidInput);
  EXPECT_THROW(CovMat2::thermal(1.5), InvalidInput);
}

TEST(CovMat2, RejectsAsymmetric) {
  Mat2 m;
  m << 1.0, 0.2, 0.1, 1.0;
  EXPECT_THROW(CovMat2{m}, InvalidInput);
}

TEST(CovMat2, SqueezedVacuumEigenvalues) {
  Mat2 m = Mat2::Zero();
  m(0, 0) = 0.5 * std::exp(-2.0);
  m(1, 1) = 0.5 * std::exp(2.0);
  const auto [lo, hi] = CovMat2(m).eigenvalues();
  EXPECT_NEAR(lo, 0.5 * std::exp(-2.0), 1e-15);
  EXPECT_NEAR(hi, 0.5 * std::exp(2.0), 1e-12);
  EXPECT_TRUE(CovMat2(m).is_physical());
  m(0, 0) = 0.3;
  m(1, 1) = 0.3;
  EXPECT_FALSE(CovMat2(m).is_physical());
}

TEST(SymplecticForm, Structure) {
  const Mat4 w = symplectic_form();
  EXPECT_TRUE((w * w).isApprox(-Mat4::Identity()));
  EXPECT_TRUE(w.transpose().isApprox(-w));
}

TEST(SymplecticEigenvalues, VacuumAndThermal) {
  const auto [m, p] = symplectic_eigenvalues(CovMat4::vacuum());
  EXPECT_NEAR(m, 0.5, 1e-12);
  EXPECT_NEAR(p, 0.5, 1e-12);
  Mat4 th = Mat4::Identity();
  th.block<2, 2>(0, 0) *= 2.0;
  th.block<2, 2>(2, 2) *= 0.75;
  const auto [m2, p2] = symplectic_eigenvalues(CovMat4(th));
  EXPECT_NEAR(m2, 0.75, 1e-12);
  EXPECT_NEAR(p2, 2.0, 1e-12);
}

// Reference values from an independent eigen-decomposition of i Omega sigma.
TEST(SymplecticEigenvalues, KnownCanonicalForms) {
  struct Row {
    CanonicalForm cf;
    double nu_minus, nu_plus, ppt;
  };
  const Row rows[] = {
      {{0.9, 0.9, 0.55, -0.7}, 0.538516480713, 0.748331477355, 0.264575131106},
      {{13.9, 13.9, 4.6, -13.7}, 1.923538406167, 16.021235907382, 1.363818169699},
      {{1.8, 1.8, 0.4, 1.6}, 0.529150262213, 2.734958866235, 0.663324958071},
  };
  for (const auto& r : rows) {
    Mat4 m = Mat4::Zero();
    m(0, 0) = m(1, 1) = r.cf.a;
    m(2, 2) = m(3, 3) = r.cf.b;
    m(0, 2) = m(2, 0) = r.cf.c1;
    m(1, 3) = m(3, 1) = r.cf.c2;
    const CovMat4 cm(m);
    const auto [nm, np] = symplectic_eigenvalues(cm);
    EXPECT_NEAR(nm, r.nu_minus, 1e-10);
    EXPECT_NEAR(np, r.nu_plus, 1e-10);
    const auto [cm_m, cm_p] = symplectic_eigenvalues(r.cf);
    EXPECT_NEAR(cm_m, r.nu_minus, 1e-10);
    EXPECT_NEAR(cm_p, r.nu_plus, 1e-10);
    EXPECT_NEAR(ppt_symplectic_eigenvalue(cm), r.ppt, 1e-10);
    EXPECT_NEAR(ppt_symplectic_eigenvalue(r.cf), r.ppt, 1e-10);
    EXPECT_TRUE(is_physical(cm));
  }
}

TEST(SymplecticEigenvalues, CanonicalRouteMatchesNumeric) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const CanonicalForm cf = testing_util::random_canonical(rng);
    Mat4 m = Mat4::Zero();
    m(0, 0) = m(1, 1) = cf.a;
    m(2, 2) = m(3, 3) = cf.b;
    m(0, 2) = m(2, 0) = cf.c1;
    m(1, 3) = m(3, 1) = cf.c2;
    const auto num = symplectic_eigenvalues(CovMat4(m));
    const auto cls = symplectic_eigenvalues(cf);
    ASSERT_NEAR(num.first, cls.first, 1e-9);
    ASSERT_NEAR(num.second, cls.second, 1e-9);
  }
}

TEST(SymplecticEigenvalues, InvariantUnderLocalSymplectic) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    const CanonicalForm cf = testing_util::random_canonical(rng);
    Mat4 m = Mat4::Zero();
    m(0, 0) = m(1, 1) = cf.a;
    m(2, 2) = m(3, 3) = cf.b;
    m(0, 2) = m(2, 0) = cf.c1;
    m(1, 3) = m(3, 1) = cf.c2;
    Mat4 s = Mat4::Zero();
    s.block<2, 2>(0, 0) = testing_util::random_local_symplectic(rng);
    s.block<2, 2>(2, 2) = testing_util::random_local_symplectic(rng);
    const CovMat4 moved(s * m * s.transpose());
    const auto a = symplectic_eigenvalues(CovMat4(m));
    const auto b = symplectic_eigenvalues(moved);
    ASSERT_NEAR(a.first, b.first, 1e-8 * a.second);
    ASSERT_NEAR(a.second, b.second, 1e-8 * a.second);
    const auto ia = invariants_of(CovMat4(m));
    const auto ib = invariants_of(moved);
    ASSERT_NEAR(ia.I1, ib.I1, 1e-9 * std::abs(ia.I1));
    ASSERT_NEAR(ia.I3, ib.I3, 1e-9 * std::max(1.0, std::abs(ia.I3)));
    ASSERT_NEAR(ia.I4, ib.I4, 1e-8 * std::max(1.0, std::abs(ia.I4)));
  }
}

TEST(Physicality, Rejections) {
  Mat4 m = Mat4::Identity() * 0.4;
  EXPECT_FALSE(is_physical(m));
  EXPECT_TRUE(is_physical(Mat4(Mat4::Identity() * 0.5)));
  Mat4 neg = Mat4::Identity();
  neg(0, 0) = -1.0;
  EXPECT_FALSE(is_physical(neg));
  Mat4 asym = Mat4::Identity();
  asym(0, 1) = 0.3;
  EXPECT_THROW(is_physical(asym), InvalidInput);
  Mat4 nan = Mat4::Identity();
  nan(2, 2) = std::nan("");
  EXPECT_THROW(CovMat4{nan}, InvalidInput);
}

TEST(Invariants, CanonicalMatchesBlocks) {
  const CanonicalForm cf{0.9, 0.9, 0.55, -0.7};
  const auto a = invariants_of(cf);
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = 0.9;
  m(2, 2) = m(3, 3) = 0.9;
  m(0, 2) = m(2, 0) = 0.55;
  m(1, 3) = m(3, 1) = -0.7;
  const auto b = invariants_of(CovMat4(m));
  EXPECT_NEAR(a.I1, b.I1, 1e-14);
  EXPECT_NEAR(a.I2, b.I2, 1e-14);
  EXPECT_NEAR(a.I3, b.I3, 1e-14);
  EXPECT_NEAR(a.I4, b.I4, 1e-14);
  EXPECT_NEAR(a.I3, -0.385, 1e-15);
}

TEST(MirrorReflect, Involution) {
  std::mt19937_64 rng(3);
  const CanonicalForm cf = testing_util::random_canonical(rng);
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = cf.a;
  m(2, 2) = m(3, 3) = cf.b;
  m(0, 2) = m(2, 0) = cf.c1;
  m(1, 3) = m(3, 1) = cf.c2;
  const CovMat4 cm(m);
  EXPECT_TRUE(mirror_reflect(mirror_reflect(cm)).matrix().isApprox(m));
  EXPECT_DOUBLE_EQ(mirror_reflect(cm)(1, 3), -cf.c2);
}

TEST(CovMat4, BlocksAndSwap) {
  Mat2 a, b, c;
  a << 2.0, 0.1, 0.1, 1.0;
  b << 1.5, -0.2, -0.2, 0.8;
  c << 0.3, 0.4, -0.1, 0.2;
  const CovMat4 cm = CovMat4::from_blocks(a, b, c);
  EXPECT_TRUE(cm.A().isApprox(a));
  EXPECT_TRUE(cm.C().isApprox(c));
  const CovMat4 sw = cm.swapped();
  EXPECT_TRUE(sw.A().isApprox(b));
  EXPECT_TRUE(sw.C().isApprox(c.transpose()));
  EXPECT_TRUE(sw.swapped().matrix().isApprox(cm.matrix()));
}
