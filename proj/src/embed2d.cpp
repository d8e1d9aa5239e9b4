#include "nnembed/embed2d.hpp"

#include <cmath>

namespace nnembed {

Rotation2 Rotation2::aligning(const Vec2& u) {
  const double n = norm(u);
  if (n == 0.0) return {};
  return {u[0] / n, u[1] / n};
}

std::variant<ExtremePair, ObtusePair> extend_extreme_pair(const ExtremePair& pair,
                                                          std::span<const Vec2> vectors,
                                                          std::size_t candidate,
                                                          const Tolerances& tol) {
  const Vec2& u1 = vectors[pair.first];
  const Vec2& u2 = vectors[pair.second];
  const Vec2& up = vectors[candidate];
  const double np = norm(up);
  if (np == 0.0) throw ZeroVector("extend_extreme_pair: candidate vector is zero");
  const double n1 = norm(u1);
  const double n2 = norm(u2);

  const double cos1 = dot(u1, up) / (n1 * np);
  const double cos2 = dot(u2, up) / (n2 * np);
  if (cos1 < -tol.eps_nn || cos2 < -tol.eps_nn) {
    if (cos1 <= cos2) return ObtusePair{pair.first, candidate, cos1};
    return ObtusePair{pair.second, candidate, cos2};
  }

  const double beta1 = det2(up, u2);
  const double beta2 = det2(u1, up);
  if (beta1 < 0.0 && beta2 < 0.0) {
    // up lies outside the wedge on both sides: the span exceeds a half turn.
    return ObtusePair{pair.first, candidate, cos1};
  }
  if (beta1 < 0.0) return ExtremePair{pair.first, candidate, cos1};
  if (beta2 < 0.0) return ExtremePair{candidate, pair.second, cos2};
  return pair;
}

std::variant<QuadrantFit, ObtusePair> scan_quadrant(std::span<const Vec2> vectors,
                                                    const Tolerances& tol,
                                                    std::size_t* inner_products) {
  std::optional<ExtremePair> pair;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k][0] == 0.0 && vectors[k][1] == 0.0) continue;
    if (!pair) {
      pair = ExtremePair::seed(k);
      continue;
    }
    auto step = extend_extreme_pair(*pair, vectors, k, tol);
    if (inner_products) *inner_products += 4;
    if (auto* obtuse = std::get_if<ObtusePair>(&step)) return *obtuse;
    pair = std::get<ExtremePair>(step);
  }
  if (!pair) return QuadrantFit{};
  return QuadrantFit{*pair, Rotation2::aligning(vectors[pair->first])};
}

std::optional<Rotation2> embed_quadrant(std::span<const Vec2> vectors, const Tolerances& tol) {
  auto fit = scan_quadrant(vectors, tol);
  if (auto* ok = std::get_if<QuadrantFit>(&fit)) return ok->rotation;
  return std::nullopt;
}

}  // namespace nnembed
