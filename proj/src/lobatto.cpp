#include "nnembed/lobatto.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nnembed/cp3.hpp"

namespace nnembed {
namespace {

const double kSqrt6 = std::sqrt(6.0);
const double kSqrt10 = std::sqrt(10.0);
const double kSqrt14 = std::sqrt(14.0);

void check_domain(double x) {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw DomainError("Lobatto curve is defined on [-1, 1], got x = " + std::to_string(x));
  }
}

}  // namespace

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }
Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

double Polynomial::integral_pm1() const {
  double s = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); k += 2) s += coeffs_[k] * 2.0 / static_cast<double>(k + 1);
  return s;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& a) {
  std::vector<double> c = a.coeffs_;
  for (double& v : c) v *= s;
  return Polynomial(std::move(c));
}

double h10_inner(const Polynomial& p, const Polynomial& q) {
  return (p.derivative() * q.derivative()).integral_pm1();
}

const LobattoBasis& LobattoBasis::standard() {
  static const LobattoBasis basis = [] {
    LobattoBasis b;
    b.q = Polynomial{1.0, 0.0, -1.0};
    b.r2 = Polynomial{kSqrt6 / 4.0};
    b.r3 = Polynomial{0.0, kSqrt10 / 4.0};
    b.r4 = Polynomial{-kSqrt14 / 16.0, 0.0, 5.0 * kSqrt14 / 16.0};
    b.phi2 = b.q * b.r2;
    b.phi3 = b.q * b.r3;
    b.phi4 = b.q * b.r4;
    return b;
  }();
  return basis;
}

Vec3 r(double x) {
  check_domain(x);
  return {kSqrt6 / 4.0, kSqrt10 / 4.0 * x, kSqrt14 / 16.0 * (5.0 * x * x - 1.0)};
}

Vec3 phi(double x) {
  check_domain(x);
  return (1.0 - x * x) * r(x);
}

namespace {

template <typename F>
std::vector<Vec3> sample_nodes(int ell, F&& f) {
  if (ell < 1) throw std::invalid_argument("curve sample needs ell >= 1");
  std::vector<Vec3> out;
  out.reserve(2 * static_cast<std::size_t>(ell) + 1);
  for (int j = 0; j <= 2 * ell; ++j) out.push_back(f(static_cast<double>(j - ell) / ell));
  return out;
}

}  // namespace

std::vector<Vec3> sample_curve(int ell) { return sample_nodes(ell, phi); }
std::vector<Vec3> sample_curve_directions(int ell) { return sample_nodes(ell, r); }

Matrix four_point_matrix() {
  const double nodes[] = {-1.0, -0.5, 0.5, 1.0};
  Matrix u(3, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    const Vec3 col = 4.0 * r(nodes[k]);
    for (std::size_t i = 0; i < 3; ++i) u(i, k) = col[i];
  }
  return u;
}

std::vector<Vec3> four_point_set() {
  const Matrix u = four_point_matrix();
  std::vector<Vec3> pts(u.cols());
  for (std::size_t k = 0; k < u.cols(); ++k) pts[k] = {u(0, k), u(1, k), u(2, k)};
  return pts;
}

Matrix psi_matrix() {
  const double a = 1.0 / kSqrt6;
  const double b = 1.0 / std::sqrt(2.0);
  const double c = 1.0 / std::sqrt(3.0);
  return Matrix::from_rows({{2.0 * a, 0.0, -c}, {a, b, c}, {a, -b, c}});
}

Vec3 psi_transform(double x) {
  static const Matrix q = psi_matrix();
  const Vec3 p = phi(x);
  Vec3 out{};
  for (std::size_t i = 0; i < 3; ++i) out[i] = q(i, 0) * p[0] + q(i, 1) * p[1] + q(i, 2) * p[2];
  return out;
}

double psi_min_scan(double grid_step) {
  if (!(grid_step > 0.0 && grid_step <= 0.01)) {
    throw std::invalid_argument("psi_min_scan: grid step must lie in (0, 0.01]");
  }
  const auto steps = static_cast<long>(std::floor(2.0 / grid_step + 1e-9));
  double lowest = 0.0;
  for (long k = 0; k <= steps; ++k) {
    const double x = std::min(1.0, -1.0 + static_cast<double>(k) * grid_step);
    for (double v : psi_transform(x)) lowest = std::min(lowest, v);
  }
  for (double v : psi_transform(1.0)) lowest = std::min(lowest, v);
  return lowest;
}

BasisDisproof disprove_basis(const Tolerances& tol, int ell) {
  BasisDisproof out;
  out.ell = ell;

  EmbedResult four = embed_octant(four_point_set(), tol);
  auto* four_failure = std::get_if<EmbedFailure>(&four);
  if (!four_failure) {
    throw InvariantBroken("the four-point Lobatto set embedded into the octant");
  }
  out.four_points = std::move(*four_failure);

  EmbedResult curve = embed_octant(sample_curve_directions(ell), tol);
  auto* curve_failure = std::get_if<EmbedFailure>(&curve);
  if (!curve_failure) {
    throw InsufficientSample("insufficient sample: the curve at ell = " + std::to_string(ell) +
                             " embeds into the octant");
  }
  out.curve = std::move(*curve_failure);
  return out;
}

}  // namespace nnembed
