#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "nnembed/embed3d.hpp"
#include "nnembed/lobatto.hpp"
#include "nnembed/sphere_hull.hpp"
#include "test_support.hpp"

namespace nnembed {
namespace {

using testing::kSqrt2;
using testing::pyramid_points;

bool is_signed_permutation(const Frame3& f) {
  for (const auto& col : f) {
    int ones = 0;
    for (double v : col) {
      if (std::abs(std::abs(v) - 1.0) <= 1e-12) {
        ++ones;
      } else if (std::abs(v) > 1e-12) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return orthonormality_residual(f) <= 1e-12;
}

Vec3 oriented(Vec3 g, std::span<const Vec3> pts) {
  double sum = 0.0;
  for (const auto& p : pts) sum += dot(g, p);
  return sum < 0.0 ? -1.0 * g : g;
}

// Direct soundness check of a success: F^T u >= -eps_nn * max|u| and F
// orthonormal.
void expect_sound(const EmbedSuccess& s, std::span<const Vec3> pts) {
  double max_norm = 0.0;
  for (const auto& p : pts) max_norm = std::max(max_norm, norm(p));
  EXPECT_LE(orthonormality_residual(s.F), 1e-9);
  ASSERT_EQ(s.coords.cols(), pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    for (std::size_t a = 0; a < 3; ++a) {
      const double c = dot(s.F[a], pts[k]);
      EXPECT_NEAR(s.coords(a, k), c, 1e-12 * (1 + max_norm));
      EXPECT_GE(c, -1e-9 * max_norm);
    }
  }
}

TEST(GramNonneg, Examples) {
  EXPECT_TRUE(gram_nonneg(std::vector<Vec3>{{1, 0, 0}, {0, 1, 0}}, {}));
  EXPECT_TRUE(gram_nonneg(pyramid_points(), {}));
  EXPECT_FALSE(gram_nonneg(std::vector<Vec3>{{1, 0, 0}, {-1, 0, 0}}, {}));
}

TEST(FindObtusePair, ReportsIndices) {
  const std::vector<Vec3> pts{{1, 0, 0}, {0, 1, 0}, {-1, 0.1, 0}};
  const auto pair = find_obtuse_pair(pts, {});
  ASSERT_TRUE(pair);
  EXPECT_EQ(pair->first, 0u);
  EXPECT_EQ(pair->second, 2u);
  EXPECT_LT(pair->cos_angle, 0.0);
}

TEST(Fc1Candidates, PyramidHasTwoRightAngles) {
  const auto c = fc1_candidates(pyramid_points(), {});
  ASSERT_EQ(c.size(), 4u);
  for (const auto& cand : c) EXPECT_EQ(cand.source, CandidateSource::kRightAngle);
  EXPECT_EQ(c[0].g, (Vec3{1, 0, 0}));
  EXPECT_EQ(c[1].g, (Vec3{0, 1, 0}));
}

TEST(Fc1Candidates, NoRightAngles) {
  EXPECT_TRUE(fc1_candidates(std::vector<Vec3>{{1, 0, 0}, {1, 1, 1}}, {}).empty());
}

TEST(Fc1Candidates, AxisPair) {
  const auto c = fc1_candidates(std::vector<Vec3>{{1, 0, 0}, {0, 1, 0}}, {});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].g, (Vec3{1, 0, 0}));
  EXPECT_EQ(c[1].g, (Vec3{0, 1, 0}));
}

TEST(Fc2Candidates, BasisGivesBasisNormals) {
  const auto c = fc2_candidates(std::vector<Vec3>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {});
  ASSERT_EQ(c.size(), 3u);
  std::vector<Vec3> normals;
  for (const auto& cand : c) {
    EXPECT_EQ(cand.source, CandidateSource::kHullEdge);
    normals.push_back(cand.g);
  }
  std::sort(normals.begin(), normals.end());
  EXPECT_EQ(normals, (std::vector<Vec3>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST(Fc2Candidates, PyramidHasFourEdges) {
  const auto pts = pyramid_points();
  const auto c = fc2_candidates(pts, {});
  ASSERT_EQ(c.size(), 4u);
  for (const auto& cand : c) {
    EXPECT_NEAR(norm(cand.g), 1.0, 1e-15);
    double sum = 0.0;
    for (const auto& p : pts) sum += dot(cand.g, p);
    EXPECT_GE(sum, 0.0);
    EXPECT_NEAR(dot(cand.g, pts[cand.i]), 0.0, 1e-14);
    EXPECT_NEAR(dot(cand.g, pts[cand.j]), 0.0, 1e-14);
  }
}

TEST(Fc2Candidates, TwoPointsGiveOneNormal) {
  const auto c = fc2_candidates(std::vector<Vec3>{{1, 0, 0}, {1 / kSqrt2, 1 / kSqrt2, 0}}, {});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_NEAR(std::abs(c[0].g[2]), 1.0, 1e-15);
}

TEST(CheckCandidate, PyramidAxisHasObtuseProjection) {
  const auto pts = pyramid_points();
  const CandidateReport r = check_candidate({{1, 0, 0}, CandidateSource::kRightAngle, 0, 1}, pts, {});
  EXPECT_EQ(r.verdict, CandidateVerdict::kProjectionObtuse);
  EXPECT_EQ(std::min(r.i, r.j), 2u);
  EXPECT_EQ(std::max(r.i, r.j), 3u);
  EXPECT_NEAR(r.value, -1.0, 1e-12);
  EXPECT_FALSE(r.basis);
}

TEST(CheckCandidate, NormalToAxisPlanePasses) {
  const std::vector<Vec3> pts{{1, 0, 0}, {0, 1, 0}};
  const CandidateReport r = check_candidate({{0, 0, 1}, CandidateSource::kHullEdge, 0, 1}, pts, {});
  ASSERT_EQ(r.verdict, CandidateVerdict::kPass);
  ASSERT_TRUE(r.basis);
  // F = [e3 | e1, e2]: a column permutation of the identity.
  EXPECT_EQ((*r.basis)[0], (Vec3{0, 0, 1}));
  EXPECT_TRUE(is_signed_permutation(*r.basis));
  for (const auto& p : pts) {
    for (const auto& f : *r.basis) EXPECT_GE(dot(f, p), -1e-15);
  }
}

TEST(CheckCandidate, HalfSpaceFailureNamesStraddlingPair) {
  const std::vector<Vec3> pts{{1, 0, 1}, {1, 0, -1}};
  const CandidateReport r = check_candidate({{0, 0, 1}, CandidateSource::kHullEdge, 0, 1}, pts, {});
  EXPECT_EQ(r.verdict, CandidateVerdict::kHalfSpaceFail);
  EXPECT_EQ(r.i, 0u);
  EXPECT_EQ(r.j, 1u);
  EXPECT_LT(r.value, 0.0);
}

TEST(CheckCandidate, LobattoEndpointNormalLeavesInnerPairObtuse) {
  const auto pts = four_point_set();
  const Vec3 g = oriented(normalized(cross(pts[0], pts[3])), pts);
  const CandidateReport r = check_candidate({g, CandidateSource::kHullEdge, 0, 3}, pts, {});
  EXPECT_EQ(r.verdict, CandidateVerdict::kProjectionObtuse);
  EXPECT_EQ(std::min(r.i, r.j), 1u);
  EXPECT_EQ(std::max(r.i, r.j), 2u);
  EXPECT_LT(r.value, 0.0);
}

TEST(EmbedOctant, BasisEmbedsWithSignedPermutation) {
  const std::vector<Vec3> pts{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const EmbedResult res = embed_octant(pts, {});
  ASSERT_TRUE(std::holds_alternative<EmbedSuccess>(res));
  const auto& s = std::get<EmbedSuccess>(res);
  EXPECT_TRUE(is_signed_permutation(s.F));
  expect_sound(s, pts);
}

TEST(EmbedOctant, PyramidFailsWithEveryCandidateReported) {
  const auto pts = pyramid_points();
  const EmbedResult res = embed_octant(pts, {});
  ASSERT_TRUE(std::holds_alternative<EmbedFailure>(res));
  const auto& f = std::get<EmbedFailure>(res);
  EXPECT_FALSE(f.obtuse_pair);
  const auto right = std::count_if(f.reports.begin(), f.reports.end(), [](const auto& r) {
    return r.candidate.source == CandidateSource::kRightAngle;
  });
  const auto hull = std::count_if(f.reports.begin(), f.reports.end(), [](const auto& r) {
    return r.candidate.source == CandidateSource::kHullEdge;
  });
  EXPECT_EQ(right, 4);
  EXPECT_EQ(hull, 4);
  for (const auto& r : f.reports) EXPECT_NE(r.verdict, CandidateVerdict::kPass);
  // FC I candidates come first.
  EXPECT_EQ(f.reports.front().candidate.source, CandidateSource::kRightAngle);
}

TEST(EmbedOctant, LobattoFourPointsFail) {
  const EmbedResult res = embed_octant(four_point_set(), {});
  ASSERT_TRUE(std::holds_alternative<EmbedFailure>(res));
  const auto& f = std::get<EmbedFailure>(res);
  ASSERT_EQ(f.reports.size(), 4u);
  for (const auto& r : f.reports) {
    EXPECT_EQ(r.candidate.source, CandidateSource::kHullEdge);
    EXPECT_EQ(r.verdict, CandidateVerdict::kProjectionObtuse);
  }
}

TEST(EmbedOctant, ObtusePairShortCircuits) {
  const std::vector<Vec3> pts{{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}};
  const EmbedResult res = embed_octant(pts, {});
  ASSERT_TRUE(std::holds_alternative<EmbedFailure>(res));
  const auto& f = std::get<EmbedFailure>(res);
  EXPECT_TRUE(f.reports.empty());
  ASSERT_TRUE(f.obtuse_pair);
  EXPECT_EQ(f.obtuse_pair->first, 0u);
  EXPECT_EQ(f.obtuse_pair->second, 2u);
}

TEST(EmbedOctant, TrivialCases) {
  const std::vector<Vec3> zeros{{0, 0, 0}, {0, 0, 0}};
  const auto a = embed_octant(zeros, {});
  ASSERT_TRUE(std::holds_alternative<EmbedTrivial>(a));
  EXPECT_EQ(std::get<EmbedTrivial>(a).reason, "no nonzero points");

  const std::vector<Vec3> single{{0, 0, 0}, {1, -2, 3}, {2, -4, 6}};
  const auto b = embed_octant(single, {});
  ASSERT_TRUE(std::holds_alternative<EmbedTrivial>(b));
  const auto& tb = std::get<EmbedTrivial>(b);
  EXPECT_EQ(tb.reason, "single direction");
  for (std::size_t k = 0; k < single.size(); ++k) {
    for (std::size_t a2 = 0; a2 < 3; ++a2) EXPECT_GE(tb.coords(a2, k), -1e-12);
  }

  const std::vector<Vec3> plane{{1, 0, 1}, {0, 1, 1}, {1, 1, 2}};
  const auto c = embed_octant(plane, {});
  ASSERT_TRUE(std::holds_alternative<EmbedTrivial>(c));
  const auto& tc = std::get<EmbedTrivial>(c);
  EXPECT_EQ(tc.reason, "coplanar directions");
  EXPECT_LE(orthonormality_residual(tc.F), 1e-12);
  for (std::size_t k = 0; k < plane.size(); ++k) {
    for (std::size_t a2 = 0; a2 < 3; ++a2) EXPECT_GE(tc.coords(a2, k), -1e-9);
  }
}

TEST(EmbedOctant, ZerosKeptInCoordinates) {
  const std::vector<Vec3> pts{{1, 0, 0}, {0, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const auto res = embed_octant(pts, {});
  ASSERT_TRUE(std::holds_alternative<EmbedSuccess>(res));
  expect_sound(std::get<EmbedSuccess>(res), pts);
}

class EmbedProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{77};

  std::vector<Vec3> rotated_cone(std::size_t p) {
    std::vector<Vec3> pts(p);
    for (auto& v : pts) v = testing::random_nonneg_point(rng);
    return testing::apply(testing::random_rotation(rng), pts);
  }
};

TEST_F(EmbedProperties, ConstructedConesEmbedSoundly) {
  std::uniform_int_distribution<std::size_t> size(3, 12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pts = rotated_cone(size(rng));
    const auto res = embed_octant(pts, {});
    ASSERT_TRUE(std::holds_alternative<EmbedSuccess>(res)) << "trial " << trial;
    const auto& s = std::get<EmbedSuccess>(res);
    expect_sound(s, pts);
    if (s.witness.source == CandidateSource::kHullEdge) {
      int on_plane = 0;
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if (std::abs(s.coords(0, k)) <= 1e-9 * norm(pts[k])) ++on_plane;
      }
      EXPECT_GE(on_plane, 2) << "trial " << trial;
    }
  }
}

TEST_F(EmbedProperties, CandidateCountAndInnerProductBudget) {
  for (std::size_t p : {4u, 8u, 16u, 32u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto pts = rotated_cone(p);
      const auto hull = fc2_candidates(pts, {});
      EXPECT_LE(hull.size(), p);
      EXPECT_EQ(hull.size(), hull_order(project_dedupe(pts, {}), {}).size());
      for (const auto& cand : hull) {
        const CandidateReport r = check_candidate(cand, pts, {});
        EXPECT_LE(r.mutual_inner_products, 4 * p);
      }
    }
  }
}

TEST_F(EmbedProperties, AntiparallelPointsNeverMerge) {
  for (int trial = 0; trial < 50; ++trial) {
    auto pts = rotated_cone(4);
    pts.push_back(-2.0 * pts[0]);
    const auto res = embed_octant(pts, {});
    ASSERT_TRUE(std::holds_alternative<EmbedFailure>(res));
    EXPECT_TRUE(std::get<EmbedFailure>(res).obtuse_pair);
  }
}

}  // namespace
}  // namespace nnembed
