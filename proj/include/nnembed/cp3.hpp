#ifndef NNEMBED_CP3_HPP
#define NNEMBED_CP3_HPP

#include <cstddef>
#include <optional>
#include <variant>

#include "nnembed/embed3d.hpp"
#include "nnembed/numerics.hpp"

namespace nnembed {

// Completely positive factorization A = B B^T, B >= 0, for matrices of rank
// at most three.
//
// A = C C^T is factored spectrally; the rows of C are points whose Gram
// matrix is A. Any orthogonal F with F^T C^T >= 0 gives B = C F. For rank 2
// such an F exists whenever A is doubly nonnegative; for rank 3 the octant
// embedding decides it. A rank-3 refusal means A has no nonnegative factor
// with three columns (its cp-rank exceeds 3, or it is not completely
// positive at all).

struct DnnVerdict {
  enum class Kind { kDoublyNonnegative, kNegativeEntry, kNotPsd };
  Kind kind = Kind::kDoublyNonnegative;
  std::size_t i = 0;  // kNegativeEntry: first offending entry (row-major)
  std::size_t j = 0;
  double value = 0.0;  // the entry, or the most negative eigenvalue

  bool ok() const { return kind == Kind::kDoublyNonnegative; }
};

/// Entrywise A_ij >= -eps_nn * max|A| and PSD within eps_rank * lambda_max.
DnnVerdict is_doubly_nonnegative(const SymMatrix& a, const Tolerances& tol);

struct Factorized {
  Matrix B;  // n x rank, entrywise >= -eps_nn * sqrt(max|A|)
  std::size_t rank = 0;
  double residual = 0.0;  // max|A - B B^T|
};

enum class RefusalReason { kNotSymmetric, kNotPsd, kNotNonneg, kRankTooHigh, kEmbedFailed };

struct Refused {
  RefusalReason reason = RefusalReason::kEmbedFailed;
  std::size_t i = 0;  // kNotNonneg entry, or the obtuse pair for a rank-2 failure
  std::size_t j = 0;
  std::size_t rank = 0;
  double value = 0.0;
  std::optional<EmbedFailure> certificate;  // kEmbedFailed at rank 3
};

using CpResult = std::variant<Factorized, Refused>;

/// Thrown if a factor fails its own residual or sign check; that is a bug,
/// never a property of the input.
class InvariantBroken : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

CpResult cp_factorize_rank3(const SymMatrix& a, const Tolerances& tol);

/// Accepts any dense matrix; non-square or asymmetric input is refused with
/// kNotSymmetric.
CpResult cp_factorize_rank3(const Matrix& a, const Tolerances& tol);

/// Gram matrix of the half-octahedron vectors (2,0,0), (0,2,0), (1,1,+-sqrt 2).
Matrix half_octahedron_gram();

/// 4 x 4 nonnegative matrix whose columns reproduce half_octahedron_gram()
/// after lifting the vectors into R^4.
Matrix half_octahedron_lift();

/// max|N^T N - gram| <= tol.
bool verify_cp_lift(const Matrix& lift, const Matrix& gram, double tol);

/// verify_cp_lift on the stored half-octahedron pair at 1e-12.
bool verify_cp_lift_fixture();

const char* to_string(RefusalReason reason);

}  // namespace nnembed

#endif  // NNEMBED_CP3_HPP
