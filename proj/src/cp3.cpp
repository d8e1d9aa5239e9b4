#include "nnembed/cp3.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nnembed/embed2d.hpp"
#include "nnembed/gram_factor.hpp"

namespace nnembed {
namespace {

std::optional<std::pair<std::size_t, std::size_t>> first_negative_entry(const SymMatrix& a,
                                                                        double bound) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a(i, j) < -bound) return std::pair{i, j};
  return std::nullopt;
}

Factorized certify(const SymMatrix& a, Matrix b, std::size_t rank, const Tolerances& tol) {
  const double scale = a.dense().max_abs();
  const Matrix gram = b.cols() == 0 ? Matrix(a.size(), a.size()) : b * b.transpose();
  const double residual = (a.dense() - gram).max_abs();
  if (residual > tol.eps_orth * (1.0 + scale)) {
    throw InvariantBroken("cp factor residual " + std::to_string(residual) + " out of bounds");
  }
  if (b.cols() > 0 && b.min_entry() < -tol.eps_nn * std::sqrt(scale)) {
    throw InvariantBroken("cp factor has a negative entry " + std::to_string(b.min_entry()));
  }
  return Factorized{std::move(b), rank, residual};
}

}  // namespace

const char* to_string(RefusalReason reason) {
  switch (reason) {
    case RefusalReason::kNotSymmetric: return "not_symmetric";
    case RefusalReason::kNotPsd: return "not_psd";
    case RefusalReason::kNotNonneg: return "not_nonnegative";
    case RefusalReason::kRankTooHigh: return "rank_too_high";
    case RefusalReason::kEmbedFailed: return "embed_failed";
  }
  return "?";
}

DnnVerdict is_doubly_nonnegative(const SymMatrix& a, const Tolerances& tol) {
  if (a.size() == 0) return {};
  if (auto neg = first_negative_entry(a, tol.eps_nn * a.dense().max_abs())) {
    const auto [i, j] = *neg;
    return {DnnVerdict::Kind::kNegativeEntry, i, j, a(i, j)};
  }
  const EigenDecomp eig = sym_eigen(a);
  const double lambda_max = std::max(eig.values.front(), 0.0);
  if (eig.values.back() < -tol.eps_rank * lambda_max) {
    return {DnnVerdict::Kind::kNotPsd, 0, 0, eig.values.back()};
  }
  return {};
}

CpResult cp_factorize_rank3(const Matrix& a, const Tolerances& tol) {
  auto sym = SymMatrix::from_dense(a, tol.eps_orth);
  if (!sym) return Refused{RefusalReason::kNotSymmetric};
  return cp_factorize_rank3(*sym, tol);
}

CpResult cp_factorize_rank3(const SymMatrix& a, const Tolerances& tol) {
  const std::size_t n = a.size();
  const double scale = a.dense().max_abs();
  if (auto neg = first_negative_entry(a, tol.eps_nn * scale)) {
    const auto [i, j] = *neg;
    return Refused{RefusalReason::kNotNonneg, i, j, 0, a(i, j)};
  }

  FactorC factor;
  try {
    factor = factor_psd(a, tol);
  } catch (const NotPsd& e) {
    return Refused{RefusalReason::kNotPsd, 0, 0, 0, e.eigenvalue()};
  }
  const std::size_t k = factor.rank;
  const Matrix& c = factor.C;

  switch (k) {
    case 0:
      return certify(a, Matrix(n, 0), 0, tol);

    case 1: {
      Matrix b = c;
      std::size_t big = 0;
      for (std::size_t i = 1; i < n; ++i)
        if (std::abs(b(i, 0)) > std::abs(b(big, 0))) big = i;
      if (b(big, 0) < 0.0)
        for (std::size_t i = 0; i < n; ++i) b(i, 0) = -b(i, 0);
      for (std::size_t i = 0; i < n; ++i)
        if (b(i, 0) < -tol.eps_nn * std::sqrt(scale))
          return Refused{RefusalReason::kNotNonneg, i, big, 1, b(i, 0)};
      return certify(a, std::move(b), 1, tol);
    }

    case 2: {
      double max_row = 0.0;
      std::vector<Vec2> rows(n);
      for (std::size_t i = 0; i < n; ++i) {
        rows[i] = {c(i, 0), c(i, 1)};
        max_row = std::max(max_row, norm(rows[i]));
      }
      // Rows that vanish up to rounding carry no direction.
      std::vector<Vec2> live = rows;
      for (Vec2& r : live)
        if (norm(r) <= tol.eps_nn * max_row) r = {0.0, 0.0};
      const auto fit = scan_quadrant(live, tol);
      if (const auto* obtuse = std::get_if<ObtusePair>(&fit)) {
        return Refused{RefusalReason::kEmbedFailed, obtuse->first, obtuse->second, 2,
                       obtuse->cos_angle};
      }
      const Rotation2 q = std::get<QuadrantFit>(fit).rotation;
      Matrix b(n, 2);
      for (std::size_t i = 0; i < n; ++i) {
        const Vec2 r = q.apply(rows[i]);
        b(i, 0) = r[0];
        b(i, 1) = r[1];
      }
      return certify(a, std::move(b), 2, tol);
    }

    case 3: {
      std::vector<Vec3> rows(n);
      for (std::size_t i = 0; i < n; ++i) rows[i] = {c(i, 0), c(i, 1), c(i, 2)};
      EmbedResult embedded = embed_octant(rows, tol);
      if (auto* failure = std::get_if<EmbedFailure>(&embedded)) {
        Refused r{RefusalReason::kEmbedFailed, 0, 0, 3};
        if (failure->obtuse_pair) {
          r.i = failure->obtuse_pair->first;
          r.j = failure->obtuse_pair->second;
          r.value = failure->obtuse_pair->cos_angle;
        }
        r.certificate = std::move(*failure);
        return r;
      }
      const Frame3& f = std::holds_alternative<EmbedSuccess>(embedded)
                            ? std::get<EmbedSuccess>(embedded).F
                            : std::get<EmbedTrivial>(embedded).F;
      Matrix b(n, 3);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t col = 0; col < 3; ++col) b(i, col) = dot(rows[i], f[col]);
      return certify(a, std::move(b), 3, tol);
    }

    default:
      return Refused{RefusalReason::kRankTooHigh, 0, 0, k};
  }
}

Matrix half_octahedron_gram() {
  return Matrix::from_rows({{4, 0, 2, 2}, {0, 4, 2, 2}, {2, 2, 4, 0}, {2, 2, 0, 4}});
}

Matrix half_octahedron_lift() {
  const double r = std::sqrt(2.0);
  // Columns (r,r,0,0), (0,0,r,r), (0,r,r,0), (r,0,0,r).
  return Matrix::from_rows({{r, 0, 0, r}, {r, 0, r, 0}, {0, r, r, 0}, {0, r, 0, r}});
}

bool verify_cp_lift(const Matrix& lift, const Matrix& gram, double tol) {
  if (lift.min_entry() < 0.0) return false;
  const Matrix g = lift.transpose() * lift;
  if (g.rows() != gram.rows() || g.cols() != gram.cols()) return false;
  return (g - gram).max_abs() <= tol;
}

bool verify_cp_lift_fixture() {
  return verify_cp_lift(half_octahedron_lift(), half_octahedron_gram(), 1e-12);
}

}  // namespace nnembed
