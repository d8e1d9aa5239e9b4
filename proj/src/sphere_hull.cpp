#include "nnembed/sphere_hull.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nnembed {
namespace {

// Sine of the turn angle below which three boundary points count as collinear.
constexpr double kCollinearSine = 1e-12;

double turn(const Vec2& o, const Vec2& a, const Vec2& b) {
  const Vec2 oa{a[0] - o[0], a[1] - o[1]};
  const Vec2 ob{b[0] - o[0], b[1] - o[1]};
  const double c = det2(oa, ob);
  if (std::abs(c) <= kCollinearSine * norm(oa) * norm(ob)) return 0.0;
  return c;
}

}  // namespace

UnitSet project_dedupe(std::span<const Vec3> points, const Tolerances& tol) {
  double max_norm = 0.0;
  for (const Vec3& p : points) max_norm = std::max(max_norm, norm(p));
  const double zero_cut = tol.eps_nn * max_norm;

  UnitSet out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double n = norm(points[i]);
    if (n == 0.0 || n <= zero_cut) {
      out.dropped_zeros.push_back(i);
      continue;
    }
    const Vec3 u = (1.0 / n) * points[i];
    auto same = std::find_if(out.units.begin(), out.units.end(),
                             [&](const Vec3& v) { return norm(v - u) <= tol.eps_dedup; });
    if (same != out.units.end()) {
      out.origin_index[static_cast<std::size_t>(same - out.units.begin())].push_back(i);
    } else {
      out.units.push_back(u);
      out.origin_index.push_back({i});
    }
  }
  return out;
}

HullOrder hull_order(const UnitSet& us, const Tolerances& tol) {
  const std::size_t p = us.size();
  if (p <= 1) {
    HullOrder h;
    if (p == 1) h.vertex_indices.push_back(0);
    return h;
  }

  Vec3 mean{0.0, 0.0, 0.0};
  for (const Vec3& u : us.units) mean = mean + u;
  if (norm(mean) <= tol.eps_nn) throw DegenerateHull("hull_order: directions have no mean");
  const Vec3 center = normalized(mean);
  const auto [t1, t2] = complete_basis(center);

  std::vector<Vec2> plane(p);
  for (std::size_t k = 0; k < p; ++k) {
    const double h = dot(us.units[k], center);
    if (h <= tol.eps_nn) {
      throw DegenerateHull("hull_order: direction " + std::to_string(k) +
                           " is not in the open hemisphere around the mean");
    }
    plane[k] = {dot(us.units[k], t1) / h, dot(us.units[k], t2) / h};
  }

  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return plane[a] < plane[b];
  });

  // Andrew's monotone chain; popping on turn <= 0 drops collinear points.
  std::vector<std::size_t> hull(2 * p);
  std::size_t k = 0;
  for (std::size_t idx : order) {
    while (k >= 2 && turn(plane[hull[k - 2]], plane[hull[k - 1]], plane[idx]) <= 0.0) --k;
    hull[k++] = idx;
  }
  for (std::size_t i = p - 1, lower = k + 1; i-- > 0;) {
    const std::size_t idx = order[i];
    while (k >= lower && turn(plane[hull[k - 2]], plane[hull[k - 1]], plane[idx]) <= 0.0) --k;
    hull[k++] = idx;
  }
  hull.resize(k - 1);

  return HullOrder{std::move(hull)};
}

}  // namespace nnembed
