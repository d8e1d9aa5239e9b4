#ifndef NNEMBED_NUMERICS_HPP
#define NNEMBED_NUMERICS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nnembed {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

/// Numeric thresholds shared by every decision procedure in the library.
///
/// All verdicts are computed in floating point; these values say how much
/// slack is granted before an inequality counts as violated.
struct Tolerances {
  double eps_rank = 1e-10;   ///< relative eigenvalue cutoff for rank detection
  double eps_nn = 1e-9;      ///< nonnegativity slack
  double eps_orth = 1e-9;    ///< orthogonality / reconstruction residual
  double eps_dedup = 1e-9;   ///< angle (radians) below which directions merge

  /// Every field strictly positive and below 1e-2.
  bool valid() const;

  /// All four thresholds set to `eps`. Throws std::invalid_argument if the
  /// result would not be valid().
  static Tolerances uniform(double eps);

  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

/// Thrown when cyclic Jacobi does not converge within its sweep budget.
class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix. Only meant for the small sizes used here.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  double max_abs() const;
  double min_entry() const;
  std::vector<double> row(std::size_t r) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Square matrix whose stored entries are symmetric by construction.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t n = 0) : dense_(n, n) {}

  /// Accepts `a` if it is square and max|a_ij - a_ji| <= tol * (1 + max|a|);
  /// the stored matrix is the symmetric part of `a`.
  static std::optional<SymMatrix> from_dense(const Matrix& a, double tol);

  std::size_t size() const { return dense_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return dense_(i, j); }
  void set(std::size_t i, std::size_t j, double value) {
    dense_(i, j) = value;
    dense_(j, i) = value;
  }
  const Matrix& dense() const { return dense_; }

 private:
  Matrix dense_;
};

struct EigenDecomp {
  std::vector<double> values;  // descending
  Matrix vectors;              // column k pairs with values[k]
};

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
/// Throws NoConvergence after `max_sweeps` full sweeps.
EigenDecomp sym_eigen(const SymMatrix& a, int max_sweeps = 100);

/// Max-norm of V^T V - I.
double orthonormality_residual(const Matrix& v);

/// Max-norm of A - V diag(values) V^T.
double reconstruction_residual(const SymMatrix& a, const EigenDecomp& eig);

// Small fixed-size vector helpers.

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
double norm(const Vec2& a);

/// a / |a|; the zero vector is returned unchanged.
Vec3 normalized(const Vec3& a);

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& a);

/// det[a b] for column vectors a, b.
inline double det2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

/// Orthonormal frame with columns f[0], f[1], f[2].
using Frame3 = std::array<Vec3, 3>;

/// Max-norm of F^T F - I.
double orthonormality_residual(const Frame3& f);

/// Unit vector orthogonal to `g` built by Gram-Schmidt on the standard basis
/// vector least aligned with `g`; the third vector of the returned pair is
/// g x first, so (g, first, second) is right-handed. `g` must be a unit vector.
std::array<Vec3, 2> complete_basis(const Vec3& g);

}  // namespace nnembed

#endif  // NNEMBED_NUMERICS_HPP
