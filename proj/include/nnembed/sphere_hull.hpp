#ifndef NNEMBED_SPHERE_HULL_HPP
#define NNEMBED_SPHERE_HULL_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "nnembed/numerics.hpp"

namespace nnembed {

/// Distinct directions of a point list.
///
/// units[k] is the direction shared by the original points listed in
/// origin_index[k] (in input order). Points whose norm is at most
/// eps_nn * (largest norm) count as zero and are listed in dropped_zeros.
struct UnitSet {
  std::vector<Vec3> units;
  std::vector<std::vector<std::size_t>> origin_index;
  std::vector<std::size_t> dropped_zeros;

  std::size_t size() const { return units.size(); }
  /// First original point carrying direction k.
  std::size_t representative(std::size_t k) const { return origin_index[k].front(); }
};

/// Vertices of the spherical convex hull in cyclic traversal order.
struct HullOrder {
  std::vector<std::size_t> vertex_indices;  // indices into UnitSet::units

  std::size_t size() const { return vertex_indices.size(); }
};

class DegenerateHull : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Normalizes onto the unit sphere, drops zeros and merges positive multiples
/// (directions closer than eps_dedup). Antiparallel directions stay distinct.
UnitSet project_dedupe(std::span<const Vec3> points, const Tolerances& tol);

/// Orders the hull vertices counterclockwise as seen from the mean direction.
///
/// The units are sent by central projection onto the plane tangent to the
/// sphere at their normalized mean; great circles become lines there, so the
/// planar hull (monotone chain, collinear boundary points dropped) gives the
/// spherical one. Requires every unit to lie strictly on the mean's side;
/// throws DegenerateHull otherwise. All units on one great circle give the
/// two endpoints of their arc.
HullOrder hull_order(const UnitSet& us, const Tolerances& tol);

}  // namespace nnembed

#endif  // NNEMBED_SPHERE_HULL_HPP
