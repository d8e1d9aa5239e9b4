#ifndef NNEMBED_EMBED3D_HPP
#define NNEMBED_EMBED3D_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "nnembed/embed2d.hpp"
#include "nnembed/numerics.hpp"

namespace nnembed {

// Deciding whether a finite set U in R^3 can be rotated into the nonnegative
// octant.
//
// A basis F = [f1 f2 f3] works iff f1 puts every point in one closed half
// space and the projections of U onto f1's orthogonal complement make no
// obtuse angle; the planar problem is then solved by the widest-angle scan
// in embed2d. Only finitely many f1 need checking: if U embeds at all it
// embeds with two of its points sharing a zero coordinate, so f1 can be
// taken as the normal of a plane through two points that are adjacent on
// the spherical convex hull of U. Pairs of orthogonal points give a second,
// cheaper family: one of them can be put on a coordinate axis.

enum class CandidateSource {
  kRightAngle,  // f1 along point i, which is orthogonal to point j
  kHullEdge,    // f1 normal to the plane of hull-adjacent points i, j
};

struct Candidate {
  Vec3 g{0.0, 0.0, 1.0};
  CandidateSource source = CandidateSource::kHullEdge;
  std::size_t i = 0;
  std::size_t j = 0;
};

enum class CandidateVerdict {
  kPass,
  kHalfSpaceFail,     // some g.u_i > 0 > g.u_j
  kProjectionObtuse,  // u_i.u_j - (g.u_i)(g.u_j) < 0
  kQuadrant2DFail,    // assembled basis failed direct verification
};

struct CandidateReport {
  Candidate candidate;
  CandidateVerdict verdict = CandidateVerdict::kPass;
  // Offending pair for the failure verdicts. For kQuadrant2DFail both name
  // the point with the most negative coordinate.
  std::size_t i = 0;
  std::size_t j = 0;
  // kHalfSpaceFail: most negative g.u / |u|. kProjectionObtuse: the
  // projected inner product of the original points. kQuadrant2DFail: most
  // negative normalized coordinate.
  double value = 0.0;
  // Inner products between projected points spent by the widest-angle scan.
  std::size_t mutual_inner_products = 0;
  // Set on kPass: columns (g, f2, f3).
  std::optional<Frame3> basis;
};

/// Rotation found through a candidate.
struct EmbedSuccess {
  Frame3 F;
  Matrix coords;  // 3 x p, column k is F^T u_k
  Candidate witness;
  std::vector<CandidateReport> reports;  // candidates tried, in order
};

/// No candidate passes; `reports` holds every candidate in check order.
/// If the points already fail the pairwise test, `reports` is empty and
/// `obtuse_pair` names the pair (original indices).
struct EmbedFailure {
  std::vector<CandidateReport> reports;
  std::optional<ObtusePair> obtuse_pair;
};

/// Embeddable without a candidate search: at most one direction, or all
/// directions in one plane.
struct EmbedTrivial {
  Frame3 F;
  Matrix coords;
  std::string reason;
};

using EmbedResult = std::variant<EmbedSuccess, EmbedFailure, EmbedTrivial>;

/// True iff u_i.u_j >= -eps_nn |u_i||u_j| for all pairs.
bool gram_nonneg(std::span<const Vec3> points, const Tolerances& tol);

/// First pair (row-major) violating gram_nonneg, if any.
std::optional<ObtusePair> find_obtuse_pair(std::span<const Vec3> points, const Tolerances& tol);

/// Normals of the planes through hull-adjacent directions, oriented so the
/// points lie on their positive side. Indices refer to `points`. One
/// candidate for a two-vertex hull, none for fewer.
std::vector<Candidate> fc2_candidates(std::span<const Vec3> points, const Tolerances& tol);

/// Directions of points that are orthogonal to some other point, each
/// direction emitted once, in order of first appearance.
std::vector<Candidate> fc1_candidates(std::span<const Vec3> points, const Tolerances& tol);

/// Checks U^T U >= U^T g g^T U >= 0 for one candidate and, when it holds,
/// assembles the basis (g, f2, f3) and verifies it by direct multiplication.
/// `g` must be a unit vector. Zero points are ignored.
CandidateReport check_candidate(const Candidate& candidate, std::span<const Vec3> points,
                                const Tolerances& tol);

/// Full decision procedure. On every affirmative result F is orthonormal
/// within eps_orth and min(F^T U) >= -eps_nn * max|u|, checked directly.
/// On EmbedSuccess the first coordinate of at least two points vanishes.
EmbedResult embed_octant(std::span<const Vec3> points, const Tolerances& tol);

const char* to_string(CandidateSource source);
const char* to_string(CandidateVerdict verdict);

}  // namespace nnembed

#endif  // NNEMBED_EMBED3D_HPP
