#ifndef NNEMBED_GRAM_FACTOR_HPP
#define NNEMBED_GRAM_FACTOR_HPP

#include <cstddef>
#include <stdexcept>

#include "nnembed/numerics.hpp"

namespace nnembed {

/// A = C C^T with C of shape n x rank. Row i of C is the point u_i whose
/// pairwise inner products reproduce A.
struct FactorC {
  Matrix C;
  std::size_t rank = 0;
  double lambda_max = 0.0;
};

/// Thrown when an eigenvalue falls below -eps_rank * lambda_max.
class NotPsd : public std::runtime_error {
 public:
  NotPsd(double eigenvalue, double lambda_max);
  double eigenvalue() const { return eigenvalue_; }
  double lambda_max() const { return lambda_max_; }

 private:
  double eigenvalue_;
  double lambda_max_;
};

/// Rank-revealing spectral factorization. Columns of C are
/// sqrt(lambda_k) v_k for the eigenvalues above eps_rank * lambda_max, in
/// descending order. The zero matrix gives rank 0 and an n x 0 factor.
FactorC factor_psd(const SymMatrix& a, const Tolerances& tol);

}  // namespace nnembed

#endif  // NNEMBED_GRAM_FACTOR_HPP
