// Smoke benchmark: embed_octant on random embeddable cones of growing size.
// Prints the mean time per call and the growth factor per tenfold size step.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "nnembed/embed3d.hpp"

int main() {
  using namespace nnembed;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> n(0.0, 1.0);

  double previous = 0.0;
  std::printf("%8s %14s %10s %8s\n", "p", "seconds/call", "growth", "verdict");
  for (std::size_t p : {10u, 100u, 1000u}) {
    const int reps = p <= 100 ? 200 : 10;
    double total = 0.0;
    int embedded = 0;
    for (int r = 0; r < reps; ++r) {
      // Nonnegative points under a random rotation (normalized quaternion).
      double w = n(rng), x = n(rng), y = n(rng), z = n(rng);
      const double len = std::sqrt(w * w + x * x + y * y + z * z);
      w /= len, x /= len, y /= len, z /= len;
      const Vec3 r0{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)};
      const Vec3 r1{2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)};
      const Vec3 r2{2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)};
      std::vector<Vec3> pts(p);
      for (auto& v : pts) {
        const Vec3 q{u(rng), u(rng), u(rng)};
        v = {dot(r0, q), dot(r1, q), dot(r2, q)};
      }
      const auto start = std::chrono::steady_clock::now();
      const EmbedResult res = embed_octant(pts, {});
      total += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (std::holds_alternative<EmbedSuccess>(res)) ++embedded;
    }
    const double mean = total / reps;
    std::printf("%8zu %14.3e %10s %5d/%d\n", p, mean,
                previous > 0.0 ? std::to_string(mean / previous).substr(0, 6).c_str() : "-",
                embedded, reps);
    previous = mean;
  }
  return 0;
}
