#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "nck/geometry.hpp"
#include "oracles.hpp"

using namespace nck;
using nck::testing::points;
using nck::testing::random_point_set;

namespace {

const double kSqrt3 = std::sqrt(3.0);

PointSet equilateral() {
  return points({{0.0, 0.0}, {1.0, 0.0}, {0.5, kSqrt3 / 2.0}});
}

}  // namespace

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(points({{0.0}})), 0.0);
  EXPECT_EQ(diameter(points({{0.0}, {1.0}})), 1.0);
  EXPECT_NEAR(diameter(equilateral()), 1.0, 1e-15);
}

TEST(PointSetTest, RejectsEmptyAndMismatchedInput) {
  try {
    PointSet ps(std::vector<Vector>{});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("empty point set"), std::string::npos);
  }
  EXPECT_THROW(points({{0.0, 0.0}, {1.0}}), DomainError);
  EXPECT_THROW(points({{0.0, NAN}}), DomainError);
}

TEST(PointSetTest, DeduplicatesInOrder) {
  const PointSet ps = points({{1.0}, {0.0}, {1.0}, {0.0}, {2.0}});
  const PointSet u = ps.deduplicated();
  ASSERT_EQ(u.size(), 3u);
  EXPECT_EQ(u[0][0], 1.0);
  EXPECT_EQ(u[1][0], 0.0);
  EXPECT_EQ(u[2][0], 2.0);
}

TEST(ChebyshevBall, TwoPointsOnTheLine) {
  const Ball b = chebyshev_ball(points({{0.0}, {1.0}}));
  EXPECT_EQ(b.center[0], 0.5);
  EXPECT_EQ(b.radius, 0.5);
}

TEST(ChebyshevBall, EquilateralTriangle) {
  const Ball b = chebyshev_ball(equilateral());
  EXPECT_NEAR(b.radius, 1.0 / kSqrt3, 1e-12);
  EXPECT_NEAR(chebyshev_oracle(equilateral()).radius, 1.0 / kSqrt3, 1e-12);
  EXPECT_NEAR(b.center[0], 0.5, 1e-12);
  EXPECT_NEAR(b.center[1], kSqrt3 / 6.0, 1e-12);
}

TEST(ChebyshevBall, InteriorThirdPoint) {
  const PointSet ps = points({{0.0, 0.0}, {2.0, 0.0}, {1.0, 0.1}});
  const Ball b = chebyshev_ball(ps);
  EXPECT_NEAR(b.center[0], 1.0, 1e-12);
  EXPECT_NEAR(b.center[1], 0.0, 1e-12);
  EXPECT_NEAR(b.radius, 1.0, 1e-12);
  const Ball o = chebyshev_oracle(ps);
  EXPECT_NEAR(o.radius, 1.0, 1e-12);
  EXPECT_NEAR(o.center[1], 0.0, 1e-12);
}

TEST(ChebyshevBall, RejectsNonPositiveTolerance) {
  EXPECT_THROW(chebyshev_ball(equilateral(), 0.0), DomainError);
}

TEST(ChebyshevBall, DuplicatesAndCollinearPoints) {
  const PointSet dup = points({{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}});
  EXPECT_EQ(chebyshev_ball(dup).radius, 0.0);
  EXPECT_EQ(chebyshev_oracle(dup).radius, 0.0);

  const PointSet line = points({{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}, {2.0, 2.0, 2.0},
                       {3.0, 3.0, 3.0}, {0.5, 0.5, 0.5}});
  const double expect = 1.5 * std::sqrt(3.0);
  EXPECT_NEAR(chebyshev_ball(line).radius, expect, 1e-12);
  EXPECT_NEAR(chebyshev_oracle(line).radius, expect, 1e-12);
}

TEST(ChebyshevOracle, RegularTetrahedron) {
  EXPECT_NEAR(chebyshev_oracle(regular_simplex(3)).radius, std::sqrt(3.0 / 8.0), 1e-12);
}

TEST(ChebyshevOracle, MatchesFastSolverOnSeededSet) {
  std::mt19937_64 rng(20240611);
  const PointSet ps = random_point_set(rng, 8, 2);
  EXPECT_NEAR(chebyshev_oracle(ps).radius, chebyshev_ball(ps).radius, 1e-9);
}

TEST(ChebyshevOracle, RejectsLargeInput) {
  std::mt19937_64 rng(1);
  EXPECT_THROW(chebyshev_oracle(random_point_set(rng, 30, 2)), DomainError);
}

TEST(RegularSimplex, UnitEdges) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const PointSet s = regular_simplex(n);
    ASSERT_EQ(s.size(), n + 1);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        EXPECT_NEAR(distance(s[i], s[j]), 1.0, 1e-14);
  }
}

TEST(JungReportTest, Examples) {
  const JungReport line = jung_report(points({{0.0}, {1.0}}));
  EXPECT_EQ(line.lower, 0.5);
  EXPECT_EQ(line.upper, 0.5);
  EXPECT_EQ(line.radius, 0.5);
  EXPECT_TRUE(line.pass);

  const JungReport tri = jung_report(equilateral());
  EXPECT_NEAR(tri.upper, std::sqrt(1.0 / 3.0), 1e-15);
  EXPECT_NEAR(tri.radius, std::sqrt(1.0 / 3.0), 1e-12);
  EXPECT_NEAR(tri.margin, 0.0, 1e-12);
  EXPECT_TRUE(tri.pass);
}

TEST(JungReportTest, RandomSetsInFiveDimensions) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> count(2, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    const JungReport r = jung_report(random_point_set(rng, count(rng), 5));
    ASSERT_TRUE(r.pass) << "trial " << trial << " radius " << r.radius;
  }
}

// ---- properties -------------------------------------------------------------

TEST(ChebyshevBallProperty, EnclosureAndJungSandwich) {
  std::mt19937_64 rng(11);
  for (std::size_t dim : {1u, 2u, 3u, 4u, 6u, 10u, 12u}) {
    for (int trial = 0; trial < 100; ++trial) {
      std::uniform_int_distribution<std::size_t> count(1, 3 * dim + 4);
      const PointSet ps = random_point_set(rng, count(rng), dim);
      const Ball b = chebyshev_ball(ps);
      for (const auto& p : ps) ASSERT_TRUE(b.contains(p, kDefaultTol));
      const double d = diameter(ps);
      ASSERT_GE(b.radius, d / 2.0 - 1e-9);
      // dim 12 uses the approximate core-set iteration
      if (dim <= 10) {
        ASSERT_LE(b.radius, jung_factor(dim) * d + 1e-9);
      }
    }
  }
}

TEST(ChebyshevBallProperty, OracleEquivalence) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    std::uniform_int_distribution<std::size_t> count(1, 10);
    const PointSet ps = random_point_set(rng, count(rng), dim);
    const double fast = chebyshev_ball(ps).radius;
    const double slow = chebyshev_oracle(ps).radius;
    ASSERT_LE(std::abs(fast - slow), 1e-9 * (1.0 + slow)) << "trial " << trial;
  }
}

TEST(ChebyshevBallProperty, LineIsExact) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const PointSet ps = random_point_set(rng, 1 + trial % 17, 1);
    const Ball b = chebyshev_ball(ps);
    double lo = ps[0][0], hi = ps[0][0];
    for (const auto& p : ps) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    ASSERT_EQ(b.center[0], 0.5 * (lo + hi));
    ASSERT_EQ(b.radius, 0.5 * (hi - lo));
    ASSERT_NEAR(b.radius, diameter(ps) / 2.0, 1e-15);
  }
}

TEST(ChebyshevBallProperty, RigidMotionInvariance) {
  std::mt19937_64 rng(14);
  std::normal_distribution<double> n;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 2 + trial % 4;
    const PointSet ps = random_point_set(rng, 3 + trial % 7, dim);
    Eigen::MatrixXd m(dim, dim);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = n(rng);
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ();
    const Vector shift = nck::testing::random_vector(rng, dim, -5.0, 5.0);
    std::vector<Vector> moved;
    for (const auto& p : ps) {
      const Eigen::VectorXd x = q * Eigen::Map<const Eigen::VectorXd>(p.data(), dim);
      Vector y(dim);
      for (std::size_t i = 0; i < dim; ++i) y[i] = x(i) + shift[i];
      moved.push_back(y);
    }
    const double r0 = chebyshev_ball(ps).radius;
    const double r1 = chebyshev_ball(PointSet(dim, moved)).radius;
    ASSERT_LE(std::abs(r0 - r1), 1e-9 * r0);
  }
}

TEST(ChebyshevBallProperty, AddingPointsNeverShrinksRadius) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 1 + trial % 4;
    const PointSet ps = random_point_set(rng, 2 + trial % 6, dim);
    const PointSet more = ps.with(nck::testing::random_vector(rng, dim, -1.5, 1.5));
    ASSERT_LE(chebyshev_ball(ps).radius, chebyshev_ball(more).radius + 1e-12);
  }
}

TEST(ChebyshevBallProperty, SeedChangesNothingObservable) {
  std::mt19937_64 rng(16);
  const PointSet ps = random_point_set(rng, 40, 3);
  const Ball a = chebyshev_ball(ps, kDefaultTol, 1);
  const Ball b = chebyshev_ball(ps, kDefaultTol, 1);
  const Ball c = chebyshev_ball(ps, kDefaultTol, 99);
  EXPECT_EQ(a.center, b.center);
  EXPECT_EQ(a.radius, b.radius);
  EXPECT_NEAR(a.radius, c.radius, 1e-9 * a.radius);
}

TEST(CoreSetBall, CoversAndApproximates) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const PointSet ps = random_point_set(rng, 12, 3);
    const Ball approx = core_set_ball(ps);
    for (const auto& p : ps) ASSERT_TRUE(approx.contains(p));
    const double exact = chebyshev_oracle(ps).radius;
    ASSERT_GE(approx.radius, exact - 1e-12);
    ASSERT_LE(approx.radius, exact * 1.01);
  }
}
