#include "nnembed/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nnembed {

bool Tolerances::valid() const {
  for (double v : {eps_rank, eps_nn, eps_orth, eps_dedup}) {
    if (!(v > 0.0 && v < 1e-2)) return false;
  }
  return true;
}

Tolerances Tolerances::uniform(double eps) {
  Tolerances t{eps, eps, eps, eps};
  if (!t.valid()) {
    throw std::invalid_argument("tolerance must lie in (0, 1e-2), got " + std::to_string(eps));
  }
  return t;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * m.cols());
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::min_entry() const {
  if (data_.empty()) return 0.0;
  return *std::min_element(data_.begin(), data_.end());
}

std::vector<double> Matrix::row(std::size_t r) const {
  return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

std::optional<SymMatrix> SymMatrix::from_dense(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return std::nullopt;
  const double bound = tol * (1.0 + a.max_abs());
  SymMatrix s(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      if (std::abs(a(i, j) - a(j, i)) > bound) return std::nullopt;
      s.set(i, j, 0.5 * (a(i, j) + a(j, i)));
    }
  }
  return s;
}

EigenDecomp sym_eigen(const SymMatrix& a, int max_sweeps) {
  const std::size_t n = a.size();
  Matrix m = a.dense();
  Matrix v = Matrix::identity(n);

  double frob = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) frob += m(i, j) * m(i, j);

  bool converged = false;
  for (int sweep = 0; sweep <= max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += m(p, q) * m(p, q);
    if (off <= 1e-32 * frob || off == 0.0) {
      converged = true;
      break;
    }
    if (sweep == max_sweeps) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double mkp = m(k, p);
          const double mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double mpk = m(p, k);
          const double mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged) {
    throw NoConvergence("cyclic Jacobi did not converge in " + std::to_string(max_sweeps) +
                        " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return m(x, x) > m(y, y); });

  EigenDecomp out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = m(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

double orthonormality_residual(const Matrix& v) {
  const Matrix g = v.transpose() * v;
  return (g - Matrix::identity(g.rows())).max_abs();
}

double reconstruction_residual(const SymMatrix& a, const EigenDecomp& eig) {
  const std::size_t n = a.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += eig.vectors(i, k) * eig.values[k] * eig.vectors(j, k);
      worst = std::max(worst, std::abs(a(i, j) - s));
    }
  }
  return worst;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
double norm(const Vec2& a) { return std::hypot(a[0], a[1]); }

Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  if (n == 0.0) return a;
  return {a[0] / n, a[1] / n, a[2] / n};
}

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

double orthonormality_residual(const Frame3& f) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      worst = std::max(worst, std::abs(dot(f[i], f[j]) - (i == j ? 1.0 : 0.0)));
  return worst;
}

std::array<Vec3, 2> complete_basis(const Vec3& g) {
  int axis = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(g[k]) < std::abs(g[axis])) axis = k;
  Vec3 e{0.0, 0.0, 0.0};
  e[axis] = 1.0;
  const Vec3 h2 = normalized(e - dot(g, e) * g);
  return {h2, cross(g, h2)};
}

}  // namespace nnembed
