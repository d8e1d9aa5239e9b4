#ifndef NNEMBED_EMBED2D_HPP
#define NNEMBED_EMBED2D_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>

#include "nnembed/numerics.hpp"

namespace nnembed {

/// The two vectors spanning the widest angle seen so far.
///
/// `first` and `second` index the caller's vector list and are positively
/// oriented: det[u_first u_second] >= 0, so `second` lies counterclockwise of
/// `first`. A pair with first == second is the seed for a single vector.
struct ExtremePair {
  std::size_t first = 0;
  std::size_t second = 0;
  double cos_omega = 1.0;

  static ExtremePair seed(std::size_t index) { return {index, index, 1.0}; }
  friend bool operator==(const ExtremePair&, const ExtremePair&) = default;
};

/// Two vectors whose angle is obtuse beyond tolerance.
struct ObtusePair {
  std::size_t first = 0;
  std::size_t second = 0;
  double cos_angle = 0.0;
};

/// Proper rotation [[c, s], [-s, c]].
struct Rotation2 {
  double c = 1.0;
  double s = 0.0;

  Vec2 apply(const Vec2& v) const { return {c * v[0] + s * v[1], -s * v[0] + c * v[1]}; }
  double det() const { return c * c + s * s; }
  /// Rotation taking the direction of `u` onto the positive e1 axis.
  static Rotation2 aligning(const Vec2& u);
};

class ZeroVector : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One step of the incremental widest-angle update.
///
/// With u1 = vectors[pair.first], u2 = vectors[pair.second] and
/// up = vectors[candidate] it evaluates exactly four inner products:
/// alpha1 = u1.up, alpha2 = u2.up, beta1 = det[up u2], beta2 = det[u1 up].
/// A negative alpha (beyond eps_nn after normalization) is an obtuse pair.
/// Otherwise beta1 < 0 means up lies counterclockwise of u2 and the pair
/// becomes (u1, up); beta2 < 0 means up lies clockwise of u1 and the pair
/// becomes (up, u2); zero counts as inside and keeps the pair.
std::variant<ExtremePair, ObtusePair> extend_extreme_pair(const ExtremePair& pair,
                                                          std::span<const Vec2> vectors,
                                                          std::size_t candidate,
                                                          const Tolerances& tol);

/// Outcome of scanning a whole list: the widest pair and the rotation that
/// puts every vector into the closed first quadrant.
struct QuadrantFit {
  ExtremePair pair;
  Rotation2 rotation;
};

/// Runs extend_extreme_pair left to right over the nonzero vectors.
/// Zero vectors are skipped. An empty or all-zero input fits with the
/// identity rotation.
std::variant<QuadrantFit, ObtusePair> scan_quadrant(std::span<const Vec2> vectors,
                                                    const Tolerances& tol,
                                                    std::size_t* inner_products = nullptr);

/// Rotation mapping every vector into the nonnegative quadrant, or nullopt
/// if some pair makes an obtuse angle.
std::optional<Rotation2> embed_quadrant(std::span<const Vec2> vectors, const Tolerances& tol);

}  // namespace nnembed

#endif  // NNEMBED_EMBED2D_HPP
