#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "nnembed/lobatto.hpp"

namespace nnembed {
namespace {

const double kS6 = std::sqrt(6.0);
const double kS10 = std::sqrt(10.0);
const double kS14 = std::sqrt(14.0);

std::vector<double> grid(double lo, double hi, double step) {
  std::vector<double> out;
  const int n = static_cast<int>(std::lround((hi - lo) / step));
  for (int k = 0; k <= n; ++k) out.push_back(lo + k * step);
  return out;
}

TEST(Polynomial, Arithmetic) {
  const Polynomial p{1, 2, 3};  // 1 + 2x + 3x^2
  EXPECT_EQ(p.degree(), 2);
  EXPECT_DOUBLE_EQ(p(2.0), 17.0);
  EXPECT_EQ(p.derivative().coeffs(), (std::vector<double>{2, 6}));
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ((p * Polynomial{0, 1}).coeffs(), (std::vector<double>{0, 1, 2, 3}));
  EXPECT_EQ((2.0 * p + p).coeffs(), (std::vector<double>{3, 6, 9}));
  // Integral over [-1, 1]: 2 + 0 + 3 * 2/3.
  EXPECT_DOUBLE_EQ(p.integral_pm1(), 4.0);
}

TEST(H10Inner, Examples) {
  const LobattoBasis& b = LobattoBasis::standard();
  EXPECT_NEAR(h10_inner(b.phi2, b.phi2), 1.0, 1e-12);
  EXPECT_NEAR(h10_inner(b.phi2, b.phi3), 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(h10_inner(Polynomial{0, 1}, Polynomial{0, 0, 1}), 0.0);
}

TEST(LobattoBasis, GramIsIdentity) {
  const LobattoBasis& b = LobattoBasis::standard();
  const Polynomial* phis[] = {&b.phi2, &b.phi3, &b.phi4};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_NEAR(h10_inner(*phis[i], *phis[j]), i == j ? 1.0 : 0.0, 1e-12);
    }
  }
}

TEST(LobattoBasis, BasisIsBubbleTimesDirection) {
  const LobattoBasis& b = LobattoBasis::standard();
  for (double x : grid(-1.0, 1.0, 0.05)) {
    EXPECT_NEAR(b.q(x), 1 - x * x, 1e-15);
    EXPECT_NEAR(b.phi2(x), b.q(x) * b.r2(x), 1e-14);
    EXPECT_NEAR(b.phi3(x), b.q(x) * b.r3(x), 1e-14);
    EXPECT_NEAR(b.phi4(x), b.q(x) * b.r4(x), 1e-14);
  }
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi(-1.0), (Vec3{0, 0, 0}));
  EXPECT_EQ(phi(1.0), (Vec3{0, 0, 0}));
  const Vec3 r0 = r(-1.0);
  EXPECT_NEAR(4 * r0[0], kS6, 1e-14);
  EXPECT_NEAR(4 * r0[1], -kS10, 1e-14);
  EXPECT_NEAR(4 * r0[2], kS14, 1e-14);
  const Vec3 p0 = phi(0.0);
  EXPECT_NEAR(p0[0], kS6 / 4, 1e-15);
  EXPECT_NEAR(p0[1], 0.0, 1e-15);
  EXPECT_NEAR(p0[2], -kS14 / 16, 1e-15);
  EXPECT_THROW(phi(1.5), DomainError);
  EXPECT_THROW(r(-1.0001), DomainError);
}

TEST(Curve, NonnegativeInnerProducts) {
  const auto xs = grid(-1.0, 1.0, 0.01);
  double worst = 1.0;
  for (double x : xs) {
    for (double y : xs) worst = std::min(worst, dot(phi(x), phi(y)));
  }
  EXPECT_GE(worst, -1e-12);
}

TEST(Curve, StrictlyAcuteInside) {
  const auto xs = grid(-0.99, 0.99, 0.01);
  for (double x : xs) {
    for (double y : xs) ASSERT_GT(dot(phi(x), phi(y)), 0.0) << x << ", " << y;
  }
}

TEST(Curve, GramConsistency) {
  const LobattoBasis& b = LobattoBasis::standard();
  const auto xs = grid(-1.0, 1.0, 0.01);
  for (double x : xs) {
    for (double y : xs) {
      EXPECT_NEAR(dot(phi(x), phi(y)), b.q(x) * b.q(y) * dot(r(x), r(y)), 1e-12);
    }
  }
}

TEST(SampleCurve, Sizes) {
  const auto c1 = sample_curve(1);
  ASSERT_EQ(c1.size(), 3u);
  EXPECT_EQ(c1[0], phi(-1.0));
  EXPECT_EQ(c1[1], phi(0.0));
  EXPECT_EQ(c1[2], phi(1.0));
  const auto c2 = sample_curve(2);
  ASSERT_EQ(c2.size(), 5u);
  EXPECT_EQ(c2[1], phi(-0.5));
  EXPECT_EQ(c2[3], phi(0.5));
  EXPECT_EQ(sample_curve(31).size(), 63u);
  EXPECT_THROW(sample_curve(0), std::invalid_argument);
  EXPECT_EQ(sample_curve_directions(2)[0], r(-1.0));
}

TEST(FourPoints, MatrixColumns) {
  const Matrix u = four_point_matrix();
  ASSERT_EQ(u.rows(), 3u);
  ASSERT_EQ(u.cols(), 4u);
  EXPECT_NEAR(u(0, 3), kS6, 1e-14);
  EXPECT_NEAR(u(1, 3), kS10, 1e-14);
  EXPECT_NEAR(u(2, 3), kS14, 1e-14);
  // Columns 2 and 3 mirror under y -> -y.
  EXPECT_NEAR(u(0, 1), u(0, 2), 1e-15);
  EXPECT_NEAR(u(1, 1), -u(1, 2), 1e-15);
  EXPECT_NEAR(u(2, 1), u(2, 2), 1e-15);
  // Each column is a positive multiple of r at its node.
  const double nodes[] = {-1.0, -0.5, 0.5, 1.0};
  for (std::size_t c = 0; c < 4; ++c) {
    const Vec3 rv = r(nodes[c]);
    const double ratio = u(0, c) / rv[0];
    EXPECT_GT(ratio, 0.0);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(u(k, c), ratio * rv[k], 1e-13);
  }
}

TEST(Psi, CorrectedMatrixIsOrthogonal) {
  const Matrix q = psi_matrix();
  EXPECT_LE((q.transpose() * q - Matrix::identity(3)).max_abs(), 1e-12);
  EXPECT_NEAR(q(0, 0), 2 / kS6, 1e-15);
  EXPECT_NEAR(q(0, 2), -1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(q(1, 1), 1 / std::sqrt(2.0), 1e-15);
}

TEST(Psi, ComponentsAreOrthonormal) {
  const LobattoBasis& b = LobattoBasis::standard();
  const Matrix q = psi_matrix();
  std::vector<Polynomial> psi;
  for (std::size_t i = 0; i < 3; ++i) psi.push_back(q(i, 0) * b.phi2 + q(i, 1) * b.phi3 + q(i, 2) * b.phi4);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_NEAR(h10_inner(psi[i], psi[j]), i == j ? 1.0 : 0.0, 1e-12);
    }
    EXPECT_NEAR(psi[i](0.3), psi_transform(0.3)[i], 1e-14);
  }
}

TEST(Psi, MinimumIsSlightlyNegative) {
  const double m = psi_min_scan(1e-4);
  EXPECT_GE(m, -2e-3);
  EXPECT_LE(m, -1e-4);
  EXPECT_THROW(psi_min_scan(0.0), std::invalid_argument);
  EXPECT_THROW(psi_min_scan(0.02), std::invalid_argument);
}

TEST(DisproveBasis, FourPointCertificateNamesDecisivePairs) {
  const BasisDisproof d = disprove_basis({});
  std::set<std::pair<std::size_t, std::size_t>> obtuse;
  for (const auto& rep : d.four_points.reports) {
    EXPECT_EQ(rep.verdict, CandidateVerdict::kProjectionObtuse);
    obtuse.insert({std::min(rep.i, rep.j), std::max(rep.i, rep.j)});
  }
  for (auto pair : {std::pair<std::size_t, std::size_t>{2, 3}, {0, 3}, {1, 2}}) {
    EXPECT_TRUE(obtuse.count(pair)) << pair.first << "," << pair.second;
  }
  EXPECT_FALSE(d.curve.reports.empty());
}

TEST(DisproveBasis, SingleNodeSampleIsInsufficient) {
  EXPECT_THROW(disprove_basis({}, 1), InsufficientSample);
}

}  // namespace
}  // namespace nnembed
