#include "nnembed/gram_factor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nnembed {

NotPsd::NotPsd(double eigenvalue, double lambda_max)
    : std::runtime_error("matrix is not positive semidefinite: eigenvalue " +
                         std::to_string(eigenvalue)),
      eigenvalue_(eigenvalue),
      lambda_max_(lambda_max) {}

FactorC factor_psd(const SymMatrix& a, const Tolerances& tol) {
  const std::size_t n = a.size();
  if (n == 0) return {};

  const EigenDecomp eig = sym_eigen(a);
  const double lambda_max = std::max(eig.values.front(), 0.0);
  const double cutoff = tol.eps_rank * lambda_max;

  // With lambda_max clamped at zero, a negative definite input fails here too.
  if (eig.values.back() < -cutoff) throw NotPsd(eig.values.back(), lambda_max);

  std::size_t rank = 0;
  while (rank < n && eig.values[rank] > cutoff) ++rank;

  FactorC out{Matrix(n, rank), rank, lambda_max};
  for (std::size_t k = 0; k < rank; ++k) {
    const double s = std::sqrt(eig.values[k]);
    for (std::size_t i = 0; i < n; ++i) out.C(i, k) = s * eig.vectors(i, k);
  }
  return out;
}

}  // namespace nnembed
