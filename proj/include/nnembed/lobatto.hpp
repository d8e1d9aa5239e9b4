#ifndef NNEMBED_LOBATTO_HPP
#define NNEMBED_LOBATTO_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "nnembed/embed3d.hpp"
#include "nnembed/numerics.hpp"

namespace nnembed {

/// Univariate polynomial in the monomial basis, coefficient k multiplying
/// x^k. Trailing zero coefficients are trimmed, so the zero polynomial has
/// no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> coeffs);
  explicit Polynomial(std::vector<double> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }

  double operator()(double x) const;
  Polynomial derivative() const;
  /// Exact integral over [-1, 1]: odd powers vanish, x^(2k) gives 2/(2k+1).
  double integral_pm1() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double s, const Polynomial& a);

 private:
  void trim();
  std::vector<double> coeffs_;
};

/// <p, q> = integral over [-1, 1] of p'(x) q'(x), evaluated from coefficients.
double h10_inner(const Polynomial& p, const Polynomial& q);

/// The H^1_0-orthonormal Lobatto polynomials of degree 2..4 on [-1, 1],
/// written as phi_j = q r_j with the bubble q(x) = 1 - x^2 >= 0.
struct LobattoBasis {
  Polynomial phi2, phi3, phi4;
  Polynomial q;
  Polynomial r2, r3, r4;

  static const LobattoBasis& standard();
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// (phi2(x), phi3(x), phi4(x)). Throws DomainError outside [-1, 1].
Vec3 phi(double x);
/// (r2(x), r3(x), r4(x)); phi(x) = (1 - x^2) r(x). Throws DomainError outside [-1, 1].
Vec3 r(double x);

/// phi at x_j = -1 + j / ell for j = 0..2 ell. The two endpoints are zero.
std::vector<Vec3> sample_curve(int ell);

/// r at the same nodes. Off the endpoints these are positive multiples of
/// sample_curve; at x = +-1 they are the limit directions of the curve,
/// which the zero endpoints of sample_curve lose.
std::vector<Vec3> sample_curve_directions(int ell);

/// 3 x 4 matrix with columns 4 r(x) at x = -1, -1/2, 1/2, 1, i.e.
/// diag(sqrt6, sqrt10, sqrt14) [[1,1,1,1], [-1,-1/2,1/2,1], [1,1/16,1/16,1]].
Matrix four_point_matrix();

/// Columns of four_point_matrix() as points.
std::vector<Vec3> four_point_set();

/// Orthogonal matrix mixing (phi2, phi3, phi4) into an orthonormal basis that
/// is nonnegative up to about -6e-4. Rows (2/sqrt6, 0, -1/sqrt3),
/// (1/sqrt6, 1/sqrt2, 1/sqrt3), (1/sqrt6, -1/sqrt2, 1/sqrt3).
Matrix psi_matrix();

/// psi_matrix() * phi(x).
Vec3 psi_transform(double x);

/// Smallest component of psi_transform over the grid -1, -1 + step, ..., 1.
/// Requires step in (0, 0.01]; throws std::invalid_argument otherwise.
double psi_min_scan(double grid_step);

/// The curve sample at the requested grid size still embeds.
class InsufficientSample : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure certificates showing that no orthogonal map puts the Lobatto
/// curve into the nonnegative octant.
struct BasisDisproof {
  EmbedFailure four_points;  // columns of four_point_matrix()
  EmbedFailure curve;        // sample_curve_directions(ell)
  int ell = 2;
};

/// Runs embed_octant on the four-point set and on the curve directions at
/// grid size `ell`. Throws InvariantBroken (from cp3.hpp) if the four-point
/// set embeds and InsufficientSample if the curve sample at this `ell` does.
BasisDisproof disprove_basis(const Tolerances& tol, int ell = 2);

}  // namespace nnembed

#endif  // NNEMBED_LOBATTO_HPP
