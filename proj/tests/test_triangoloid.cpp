#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>

#include "gsteer/dynamics.hpp"
#include "gsteer/triangoloid.hpp"
#include "random_states.hpp"

using namespace gsteer;

TEST(LogGrid, EndpointsAndSpacing) {
  const auto g = log_grid(1e-4, 1.0, 5);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g.front(), 1e-4);
  EXPECT_DOUBLE_EQ(g.back(), 1.0);
  EXPECT_NEAR(g[2], 1e-2, 1e-15);
  EXPECT_THROW(log_grid(0.0, 1.0, 4), InvalidInput);
  EXPECT_THROW(log_grid(1e-3, 1.0, 1), InvalidInput);
}

TEST(Triangoloid, OverlapFlags) {
  EXPECT_TRUE(generate({0.4, 0.4, 1.2}, 20).nonclassical_overlap);
  EXPECT_FALSE(generate({0.15, 0.15, 1.2}, 20).nonclassical_overlap);
  EXPECT_THROW(generate({0.4, 0.4, 1.2}, 1), InvalidInput);
}

TEST(Triangoloid, Vertices) {
  const auto twb = vertex_check({1.0, 1.0, 1.2});
  EXPECT_NEAR(twb.red.mu_c, 1.0, 1e-9);
  EXPECT_NEAR(twb.red.mu_sc, 1.0, 1e-9);
  const auto v = vertex_check({0.4, 0.4, 1.2});
  EXPECT_NEAR(v.green.mu_c, 1.0 / (2.0 * 6.946183958707), 1e-12);
  EXPECT_NEAR(v.green.mu_c, 0.07198, 1e-5);
  EXPECT_DOUBLE_EQ(v.green.mu_sc, 1.0);
  EXPECT_NEAR(v.blue.lambda_minus, 0.22494365385205128, 1e-12);
  // homodyne vertex does not depend on the measurement purity
  for (double mu : {1.0, 0.3, 0.01}) {
    const auto p = conditional_params_tmst({0.4, 0.4, 1.2}, MeasurementSpec::general(mu, 1e-10, 0.0));
    EXPECT_NEAR(p.mu_c, v.blue.mu_c, 1e-8);
    EXPECT_NEAR(p.mu_sc, v.blue.mu_sc, 1e-8);
  }
}

TEST(Triangoloid, PointInvariants) {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 20; ++k) {
    const TmstSpec s = testing_util::random_tmst(rng, 0.05, 2.0);
    const auto ds = generate(s, 25);
    for (const auto& p : rows(ds)) {
      ASSERT_GT(p.params.mu_c, 0.0);
      ASSERT_LE(p.params.mu_c, 1.0 + 1e-12);
      ASSERT_GT(p.params.mu_sc, 0.0);
      ASSERT_LE(p.params.mu_sc, 1.0);
      ASSERT_LE(p.params.depth, ds.max_depth + 1e-9);
    }
    for (std::size_t i = 1; i < ds.red_side.size(); ++i)
      ASSERT_LE(ds.red_side[i].params.mu_sc, ds.red_side[i - 1].params.mu_sc + 1e-12);
    for (std::size_t i = 0; i < ds.green_side.size(); ++i) {
      ASSERT_NEAR(ds.green_side[i].params.mu_sc, 1.0, 1e-12);
      if (i > 0) ASSERT_LE(ds.green_side[i].params.mu_c, ds.green_side[i - 1].params.mu_c);
    }
  }
}

TEST(Triangoloid, ThreeRoutesToOverlap) {
  std::mt19937_64 rng(72);
  for (int k = 0; k < 2000; ++k) {
    const TmstSpec s = testing_util::random_tmst(rng, 0.01, 2.5);
    const double sig = sigma_steerability(s);
    if (std::abs(sig - 1.0) < 1e-8) continue;
    const auto v = vertex_check(s);
    const bool by_vertex = v.blue.mu_sc < nonclassicality_boundary(v.blue.mu_c);
    const bool by_depth = v.blue.depth > 0.0;
    ASSERT_EQ(by_vertex, sig > 1.0);
    ASSERT_EQ(by_depth, sig > 1.0);
  }
}

TEST(Triangoloid, OverlapVanishesAtTns) {
  const ChannelSpec ch{0.1, 0.2};
  const double tns = *t_ns(1.0, ch);
  EXPECT_TRUE(generate(noised_tmst_params(1.0, ch, tns - 1e-6), 4).nonclassical_overlap);
  EXPECT_FALSE(generate(noised_tmst_params(1.0, ch, tns), 4).nonclassical_overlap);
  EXPECT_FALSE(generate(noised_tmst_params(1.0, ch, tns + 1e-6), 4).nonclassical_overlap);
}

TEST(Triangoloid, CsvLayout) {
  const auto ds = generate({0.4, 0.4, 1.2}, 2);
  EXPECT_EQ(ds.interior.size(), 4u);
  EXPECT_EQ(ds.blue_side.size(), 64u);
  EXPECT_DOUBLE_EQ(ds.blue_side.front().t.value(), 1e-3);
  EXPECT_DOUBLE_EQ(ds.blue_side.back().t.value(), 1e3);
  std::ostringstream os;
  write_csv(os, ds);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "mu,mu_s,t,mu_c,mu_sc,lambda_minus,depth,tag");
  int n = 0, interior = 0, vertices = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.ends_with(",interior")) {
      ++interior;
      EXPECT_NE(line.find(",,"), std::string::npos);  // empty t column
    }
    if (line.find(",vertex_") != std::string::npos) ++vertices;
  }
  EXPECT_EQ(interior, 4);
  EXPECT_EQ(vertices, 3);
  EXPECT_EQ(n, 4 + 2 + 2 + 64 + 3);
}
