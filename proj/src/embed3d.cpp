#include "nnembed/embed3d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nnembed/sphere_hull.hpp"

namespace nnembed {
namespace {

double max_norm_of(std::span<const Vec3> points) {
  double m = 0.0;
  for (const Vec3& p : points) m = std::max(m, norm(p));
  return m;
}

Matrix coordinates(const Frame3& f, std::span<const Vec3> points) {
  Matrix c(3, points.size());
  for (std::size_t k = 0; k < points.size(); ++k)
    for (std::size_t r = 0; r < 3; ++r) c(r, k) = dot(f[r], points[k]);
  return c;
}

bool sound(const Frame3& f, const Matrix& coords, double max_norm, const Tolerances& tol) {
  return orthonormality_residual(f) <= tol.eps_orth &&
         coords.min_entry() >= -tol.eps_nn * max_norm;
}

// Frame whose first vector is `g` and whose other two are rotated within
// g's complement by `rot`.
Frame3 assemble(const Vec3& g, const std::array<Vec3, 2>& h, const Rotation2& rot) {
  return {g, rot.c * h[0] + rot.s * h[1], (-rot.s) * h[0] + rot.c * h[1]};
}

// Cyclically shifts F so that its first axis is one on which at least two
// distinct directions have a vanishing coordinate.
void put_shared_zero_first(Frame3& f, std::span<const Vec3> units, const Tolerances& tol) {
  for (int axis = 0; axis < 3; ++axis) {
    int zeros = 0;
    for (const Vec3& u : units)
      if (std::abs(dot(f[axis], u)) <= tol.eps_nn) ++zeros;
    if (zeros >= 2) {
      std::rotate(f.begin(), f.begin() + axis, f.end());
      return;
    }
  }
}

}  // namespace

const char* to_string(CandidateSource source) {
  switch (source) {
    case CandidateSource::kRightAngle: return "right_angle";
    case CandidateSource::kHullEdge: return "hull_edge";
  }
  return "?";
}

const char* to_string(CandidateVerdict verdict) {
  switch (verdict) {
    case CandidateVerdict::kPass: return "pass";
    case CandidateVerdict::kHalfSpaceFail: return "half_space";
    case CandidateVerdict::kProjectionObtuse: return "projection_obtuse";
    case CandidateVerdict::kQuadrant2DFail: return "quadrant_2d";
  }
  return "?";
}

std::optional<ObtusePair> find_obtuse_pair(std::span<const Vec3> points, const Tolerances& tol) {
  std::vector<double> norms(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) norms[k] = norm(points[k]);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (norms[i] == 0.0) continue;
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (norms[j] == 0.0) continue;
      const double c = dot(points[i], points[j]) / (norms[i] * norms[j]);
      if (c < -tol.eps_nn) return ObtusePair{i, j, c};
    }
  }
  return std::nullopt;
}

bool gram_nonneg(std::span<const Vec3> points, const Tolerances& tol) {
  return !find_obtuse_pair(points, tol).has_value();
}

std::vector<Candidate> fc1_candidates(std::span<const Vec3> points, const Tolerances& tol) {
  std::vector<Candidate> out;
  std::vector<bool> emitted(points.size(), false);
  auto emit = [&](std::size_t axis, std::size_t partner) {
    if (emitted[axis]) return;
    emitted[axis] = true;
    out.push_back({normalized(points[axis]), CandidateSource::kRightAngle, axis, partner});
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double ni = norm(points[i]);
    if (ni == 0.0) continue;
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double nj = norm(points[j]);
      if (nj == 0.0) continue;
      if (std::abs(dot(points[i], points[j])) <= tol.eps_nn * ni * nj) {
        emit(i, j);
        emit(j, i);
      }
    }
  }
  return out;
}

std::vector<Candidate> fc2_candidates(std::span<const Vec3> points, const Tolerances& tol) {
  const UnitSet us = project_dedupe(points, tol);
  const HullOrder hull = hull_order(us, tol);
  const std::size_t m = hull.size();
  std::vector<Candidate> out;
  if (m < 2) return out;

  const std::size_t edges = (m == 2) ? 1 : m;
  for (std::size_t e = 0; e < edges; ++e) {
    const std::size_t a = hull.vertex_indices[e];
    const std::size_t b = hull.vertex_indices[(e + 1) % m];
    Vec3 g = normalized(cross(us.units[a], us.units[b]));
    double side = 0.0;
    for (const Vec3& u : us.units) side += dot(g, u);
    if (side < 0.0) g = -1.0 * g;
    out.push_back({g, CandidateSource::kHullEdge, us.representative(a), us.representative(b)});
  }
  return out;
}

CandidateReport check_candidate(const Candidate& candidate, std::span<const Vec3> points,
                                const Tolerances& tol) {
  CandidateReport report{candidate};
  const Vec3& g = candidate.g;
  const std::size_t p = points.size();
  const double zero_cut = tol.eps_nn * max_norm_of(points);

  std::vector<double> norms(p);
  std::vector<bool> live(p);
  for (std::size_t k = 0; k < p; ++k) {
    norms[k] = norm(points[k]);
    live[k] = norms[k] > 0.0 && norms[k] > zero_cut;
  }

  // Half space: every g.u_k on the same side.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  std::size_t arg_lo = 0;
  std::size_t arg_hi = 0;
  for (std::size_t k = 0; k < p; ++k) {
    if (!live[k]) continue;
    const double s = dot(g, points[k]) / norms[k];
    if (s < lo) lo = s, arg_lo = k;
    if (s > hi) hi = s, arg_hi = k;
  }
  if (lo < -tol.eps_nn) {
    report.verdict = CandidateVerdict::kHalfSpaceFail;
    report.i = arg_hi;
    report.j = arg_lo;
    report.value = lo;
    return report;
  }

  // Projections onto g's complement, scaled by the original norms.
  const auto h = complete_basis(g);
  std::vector<Vec2> proj(p, Vec2{0.0, 0.0});
  for (std::size_t k = 0; k < p; ++k) {
    if (!live[k]) continue;
    const Vec2 w{dot(h[0], points[k]) / norms[k], dot(h[1], points[k]) / norms[k]};
    if (norm(w) > tol.eps_nn) proj[k] = w;
  }

  const auto fit = scan_quadrant(proj, tol, &report.mutual_inner_products);
  if (const auto* obtuse = std::get_if<ObtusePair>(&fit)) {
    report.verdict = CandidateVerdict::kProjectionObtuse;
    report.i = std::min(obtuse->first, obtuse->second);
    report.j = std::max(obtuse->first, obtuse->second);
    const Vec3& ui = points[report.i];
    const Vec3& uj = points[report.j];
    report.value = dot(ui, uj) - dot(g, ui) * dot(g, uj);
    return report;
  }

  const Frame3 f = assemble(g, h, std::get<QuadrantFit>(fit).rotation);
  double worst = 0.0;
  std::size_t arg_worst = 0;
  for (std::size_t k = 0; k < p; ++k) {
    if (!live[k]) continue;
    for (const Vec3& axis : f) {
      const double c = dot(axis, points[k]) / norms[k];
      if (c < worst) worst = c, arg_worst = k;
    }
  }
  if (worst < -tol.eps_nn || orthonormality_residual(f) > tol.eps_orth) {
    report.verdict = CandidateVerdict::kQuadrant2DFail;
    report.i = report.j = arg_worst;
    report.value = worst;
    return report;
  }
  report.verdict = CandidateVerdict::kPass;
  report.basis = f;
  return report;
}

EmbedResult embed_octant(std::span<const Vec3> points, const Tolerances& tol) {
  const double max_norm = max_norm_of(points);
  const UnitSet us = project_dedupe(points, tol);

  if (us.size() == 0) {
    const Frame3 f{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
    return EmbedTrivial{f, coordinates(f, points), "no nonzero points"};
  }
  if (us.size() == 1) {
    const Vec3& g = us.units.front();
    const auto h = complete_basis(g);
    const Frame3 f{g, h[0], h[1]};
    return EmbedTrivial{f, coordinates(f, points), "single direction"};
  }

  // The pairwise test runs on the original points so that antiparallel
  // pairs are caught under their own indices.
  {
    std::vector<Vec3> nonzero(points.begin(), points.end());
    for (std::size_t z : us.dropped_zeros) nonzero[z] = Vec3{0.0, 0.0, 0.0};
    if (auto obtuse = find_obtuse_pair(nonzero, tol)) return EmbedFailure{{}, obtuse};
  }

  std::vector<Vec3> reps(us.size());
  for (std::size_t k = 0; k < us.size(); ++k) reps[k] = points[us.representative(k)];
  auto to_original = [&](std::size_t unit) { return us.representative(unit); };

  // Rank test: are all directions on one plane through the origin?
  SymMatrix scatter(3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = r; c < 3; ++c) {
      double s = 0.0;
      for (const Vec3& u : us.units) s += u[r] * u[c];
      scatter.set(r, c, s);
    }
  const EigenDecomp eig = sym_eigen(scatter);
  Vec3 normal{eig.vectors(0, 2), eig.vectors(1, 2), eig.vectors(2, 2)};
  double off_plane = 0.0;
  double side = 0.0;
  for (const Vec3& u : us.units) {
    off_plane = std::max(off_plane, std::abs(dot(normal, u)));
    side += dot(normal, u);
  }
  if (off_plane <= tol.eps_nn) {
    if (side < 0.0) normal = -1.0 * normal;
    const auto h = complete_basis(normal);
    std::vector<Vec2> flat(reps.size());
    for (std::size_t k = 0; k < reps.size(); ++k) flat[k] = {dot(h[0], reps[k]), dot(h[1], reps[k])};
    const auto fit = scan_quadrant(flat, tol);
    if (const auto* obtuse = std::get_if<ObtusePair>(&fit)) {
      return EmbedFailure{{}, ObtusePair{to_original(obtuse->first), to_original(obtuse->second),
                                         obtuse->cos_angle}};
    }
    const Frame3 f = assemble(normal, h, std::get<QuadrantFit>(fit).rotation);
    Matrix coords = coordinates(f, points);
    if (sound(f, coords, max_norm, tol)) {
      return EmbedTrivial{f, std::move(coords), "coplanar directions"};
    }
    // Not verified in the plane; fall through to the full candidate search.
  }

  std::vector<Candidate> candidates = fc1_candidates(us.units, tol);
  for (Candidate& c : fc2_candidates(us.units, tol)) candidates.push_back(c);

  std::vector<CandidateReport> reports;
  reports.reserve(candidates.size());
  for (const Candidate& cand : candidates) {
    CandidateReport report = check_candidate(cand, reps, tol);
    std::optional<Frame3> basis = report.basis;
    report.candidate.i = to_original(cand.i);
    report.candidate.j = to_original(cand.j);
    report.i = to_original(report.i);
    report.j = to_original(report.j);

    if (basis) {
      Frame3 f = *basis;
      put_shared_zero_first(f, us.units, tol);
      Matrix coords = coordinates(f, points);
      if (sound(f, coords, max_norm, tol)) {
        report.basis = f;
        Candidate witness = report.candidate;
        reports.push_back(std::move(report));
        return EmbedSuccess{f, std::move(coords), witness, std::move(reports)};
      }
      report.verdict = CandidateVerdict::kQuadrant2DFail;
      report.basis.reset();
      report.value = coords.min_entry() / max_norm;
    }
    reports.push_back(std::move(report));
  }
  return EmbedFailure{std::move(reports), std::nullopt};
}

}  // namespace nnembed
