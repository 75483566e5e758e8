#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gsteer/canonical.hpp"
#include "random_states.hpp"

using namespace gsteer;

namespace {

void expect_canonical_shape(const CovMat4& cm, double tol) {
  const Mat4& m = cm.matrix();
  EXPECT_NEAR(m(0, 1), 0.0, tol);
  EXPECT_NEAR(m(2, 3), 0.0, tol);
  EXPECT_NEAR(m(0, 0), m(1, 1), tol);
  EXPECT_NEAR(m(2, 2), m(3, 3), tol);
  EXPECT_NEAR(m(0, 3), 0.0, tol);
  EXPECT_NEAR(m(1, 2), 0.0, tol);
}

}  // namespace

TEST(Canonicalize, FixedPointOnCanonicalInput) {
  const CanonicalForm cf{0.9, 0.9, 0.7, -0.55};
  const auto red = canonicalize(canonical_cm(cf));
  EXPECT_NEAR(red.form.a, 0.9, 1e-12);
  EXPECT_NEAR(red.form.b, 0.9, 1e-12);
  EXPECT_NEAR(red.form.c1, 0.7, 1e-12);
  EXPECT_NEAR(red.form.c2, -0.55, 1e-12);
}

TEST(Canonicalize, OrdersCorrelations) {
  // |c2| > |c1| on input; the reduction puts the larger one first and keeps sign(det C).
  const auto red = canonicalize(canonical_cm({0.9, 0.9, 0.55, -0.7}));
  EXPECT_NEAR(red.form.c1, 0.7, 1e-12);
  EXPECT_NEAR(red.form.c2, -0.55, 1e-12);
  const auto pos = canonicalize(canonical_cm({1.8, 1.8, 0.4, 1.6}));
  EXPECT_NEAR(pos.form.c1, 1.6, 1e-12);
  EXPECT_NEAR(pos.form.c2, 0.4, 1e-12);
}

TEST(Canonicalize, RecoversFormAfterRandomLgut) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 2000; ++i) {
    const CanonicalForm cf = testing_util::random_canonical(rng);
    const CovMat4 moved = testing_util::random_lgut(canonical_cm(cf), rng);
    const auto red = canonicalize(moved);
    const double s = std::max({1.0, cf.a, cf.b});
    ASSERT_NEAR(red.form.a, cf.a, 1e-9 * s);
    ASSERT_NEAR(red.form.b, cf.b, 1e-9 * s);
    ASSERT_NEAR(red.form.c_max(), cf.c_max(), 1e-8 * s);
    ASSERT_NEAR(red.form.c_min(), cf.c_min(), 1e-8 * s);
    ASSERT_EQ(red.form.c1 * red.form.c2 >= 0.0, cf.c1 * cf.c2 >= 0.0);
  }
}

TEST(Canonicalize, TransformReproducesForm) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 500; ++i) {
    const CovMat4 moved =
        testing_util::random_lgut(canonical_cm(testing_util::random_canonical(rng)), rng);
    const auto red = canonicalize(moved);
    ASSERT_TRUE(red.transform.is_valid(1e-9));
    const CovMat4 back = transform_blocks(moved, red.transform);
    const double s = moved.matrix().cwiseAbs().maxCoeff();
    ASSERT_LT((back.matrix() - canonical_cm(red.form).matrix()).cwiseAbs().maxCoeff(), 1e-9 * s);
    expect_canonical_shape(back, 1e-8 * s);
  }
}

TEST(Canonicalize, PreservesInvariants) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 2000; ++i) {
    const CovMat4 moved =
        testing_util::random_lgut(canonical_cm(testing_util::random_canonical(rng)), rng);
    const auto before = invariants_of(moved);
    const auto after = invariants_of(canonicalize(moved).form);
    auto rel = [](double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(x)); };
    ASSERT_LT(rel(before.I1, after.I1), 1e-9);
    ASSERT_LT(rel(before.I2, after.I2), 1e-9);
    ASSERT_LT(rel(before.I3, after.I3), 1e-9);
    ASSERT_LT(rel(before.I4, after.I4), 1e-9);
  }
}

TEST(Canonicalize, RejectsUnphysical) {
  EXPECT_THROW(canonicalize(canonical_cm({0.5, 0.5, 0.5, 0.5})), InvalidInput);
}

TEST(Canonicalize, ProductState) {
  Mat2 a;
  a << 2.0, 0.5, 0.5, 1.0;
  const CovMat4 cm = CovMat4::from_blocks(a, Mat2::Identity() * 0.5, Mat2::Zero());
  const auto red = canonicalize(cm);
  EXPECT_NEAR(red.form.a, std::sqrt(1.75), 1e-12);
  EXPECT_NEAR(red.form.b, 0.5, 1e-12);
  EXPECT_NEAR(red.form.c1, 0.0, 1e-14);
  EXPECT_NEAR(red.form.c2, 0.0, 1e-14);
}

TEST(TransformBlocks, RejectsNonUnitDeterminant) {
  LocalSymplectic ls;
  ls.SA = Mat2::Identity() * 2.0;
  EXPECT_THROW(transform_blocks(CovMat4::vacuum(), ls), InvalidInput);
}
