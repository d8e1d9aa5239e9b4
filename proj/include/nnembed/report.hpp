#ifndef NNEMBED_REPORT_HPP
#define NNEMBED_REPORT_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nnembed/cp3.hpp"
#include "nnembed/embed3d.hpp"
#include "nnembed/lobatto.hpp"
#include "nnembed/numerics.hpp"

namespace nnembed {

// Serializable verdicts. The JSON field names are stable and described by
// schema/certificate.schema.json.

struct CandidateDoc {
  std::string source;   // "right_angle" | "hull_edge"
  std::array<std::size_t, 2> indices{};
  std::array<double, 3> g{};
  std::string verdict;  // "pass" | "half_space" | "projection_obtuse" | "quadrant_2d"
  std::array<std::size_t, 2> pair{};
  double value = 0.0;

  friend bool operator==(const CandidateDoc&, const CandidateDoc&) = default;
};

struct LobattoChecks {
  double orthonormality_residual = 0.0;  // max|Gram(phi) - I|
  double psi_orthonormality_residual = 0.0;
  double psi_min = 0.0;
  double scan_step = 0.0;
  int ell = 0;
  std::string curve_verdict;  // "not_embeddable" | "insufficient_sample"
  std::vector<CandidateDoc> curve_candidates;

  friend bool operator==(const LobattoChecks&, const LobattoChecks&) = default;
};

struct CertificateDoc {
  std::string command;  // "factorize" | "embed" | "check-dnn" | "lobatto"
  std::string verdict;
  Tolerances tolerances;
  std::string reason;
  std::optional<std::size_t> rank;
  std::vector<CandidateDoc> candidates;
  std::optional<CandidateDoc> witness;
  std::optional<std::array<std::size_t, 2>> obtuse_pair;
  std::optional<std::vector<std::vector<double>>> matrixB;
  std::optional<std::vector<std::vector<double>>> matrixF;  // rows f1, f2, f3
  std::optional<std::vector<std::vector<double>>> coordinates;  // 3 x p
  std::optional<double> residual;
  std::optional<LobattoChecks> lobatto;

  /// True for the affirmative verdicts (exit status 0).
  bool affirmative() const;

  friend bool operator==(const CertificateDoc&, const CertificateDoc&) = default;
};

CandidateDoc describe(const CandidateReport& report);

CertificateDoc certificate_for(const CpResult& result, const Tolerances& tol);
CertificateDoc certificate_for(const EmbedResult& result, const Tolerances& tol);
CertificateDoc certificate_for(const DnnVerdict& verdict, const Tolerances& tol);

nlohmann::json to_json(const CertificateDoc& doc);
CertificateDoc certificate_from_json(const nlohmann::json& j);

/// Multi-line human-readable rendering.
std::string render_text(const CertificateDoc& doc);

}  // namespace nnembed

#endif  // NNEMBED_REPORT_HPP
