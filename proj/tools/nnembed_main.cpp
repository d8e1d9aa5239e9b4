// nnembed command-line interface.
//
// Exit status: 0 affirmative verdict, 1 certified negative verdict,
// 2 input or usage error.

#include <algorithm>
#include <cmath>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nnembed/cp3.hpp"
#include "nnembed/embed3d.hpp"
#include "nnembed/input.hpp"
#include "nnembed/lobatto.hpp"
#include "nnembed/report.hpp"

namespace {

using namespace nnembed;

constexpr int kAffirmative = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Options {
  std::optional<double> tol;
  bool json = false;
  bool quiet = false;
  std::string path;
  int ell = 2;
  double scan_step = 1e-4;

  Tolerances tolerances() const { return tol ? Tolerances::uniform(*tol) : Tolerances{}; }
};

int emit(const CertificateDoc& doc, const Options& opt) {
  if (opt.json) {
    std::cout << to_json(doc).dump(2) << '\n';
  } else if (!opt.quiet) {
    std::cout << render_text(doc);
  }
  return doc.affirmative() ? kAffirmative : kNegative;
}

int cmd_factorize(const Options& opt) {
  const Tolerances tol = opt.tolerances();
  const InputDoc in = read_input(opt.path, InputKind::kMatrix, tol);
  return emit(certificate_for(cp_factorize_rank3(in.matrix(), tol), tol), opt);
}

int cmd_embed(const Options& opt) {
  const Tolerances tol = opt.tolerances();
  const InputDoc in = read_input(opt.path, InputKind::kPoints, tol);
  return emit(certificate_for(embed_octant(in.points(), tol), tol), opt);
}

int cmd_check_dnn(const Options& opt) {
  const Tolerances tol = opt.tolerances();
  const InputDoc in = read_input(opt.path, InputKind::kMatrix, tol);
  const SymMatrix a = *SymMatrix::from_dense(in.matrix(), tol.eps_orth);
  return emit(certificate_for(is_doubly_nonnegative(a, tol), tol), opt);
}

double gram_residual(const Polynomial* const (&p)[3]) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      worst = std::max(worst, std::abs(h10_inner(*p[i], *p[j]) - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

int cmd_lobatto(const Options& opt) {
  const Tolerances tol = opt.tolerances();
  const LobattoBasis& b = LobattoBasis::standard();
  const Matrix q = psi_matrix();
  const Polynomial psi[3] = {q(0, 0) * b.phi2 + q(0, 1) * b.phi3 + q(0, 2) * b.phi4,
                             q(1, 0) * b.phi2 + q(1, 1) * b.phi3 + q(1, 2) * b.phi4,
                             q(2, 0) * b.phi2 + q(2, 1) * b.phi3 + q(2, 2) * b.phi4};

  LobattoChecks checks;
  checks.orthonormality_residual = gram_residual({&b.phi2, &b.phi3, &b.phi4});
  checks.psi_orthonormality_residual = gram_residual({&psi[0], &psi[1], &psi[2]});
  checks.scan_step = opt.scan_step;
  checks.psi_min = psi_min_scan(opt.scan_step);
  checks.ell = opt.ell;

  CertificateDoc doc;
  doc.command = "lobatto";
  doc.tolerances = tol;

  // The four-point certificate does not depend on ell.
  const EmbedResult four = embed_octant(four_point_set(), tol);
  if (const auto* f = std::get_if<EmbedFailure>(&four)) {
    for (const auto& r : f->reports) doc.candidates.push_back(describe(r));
  }

  bool disproved = false;
  try {
    const BasisDisproof d = disprove_basis(tol, opt.ell);
    checks.curve_verdict = "not_embeddable";
    for (const auto& r : d.curve.reports) checks.curve_candidates.push_back(describe(r));
    disproved = true;
  } catch (const InsufficientSample& e) {
    checks.curve_verdict = "insufficient_sample";
    if (!opt.quiet) std::cerr << "warning: " << e.what() << '\n';
  } catch (const InvariantBroken& e) {
    checks.curve_verdict = "embeddable";
    std::cerr << "error: " << e.what() << '\n';
  }

  const bool checks_hold = checks.orthonormality_residual <= 1e-12 &&
                           checks.psi_orthonormality_residual <= 1e-12 && checks.psi_min < 0.0;
  if (!checks_hold || checks.curve_verdict == "embeddable") {
    doc.verdict = "not_disproved";
  } else {
    doc.verdict = disproved ? "disproved" : "insufficient_sample";
  }
  doc.reason = checks.curve_verdict == "not_embeddable" ? "" : checks.curve_verdict;
  doc.lobatto = std::move(checks);
  return emit(doc, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonnegative isometric embedding in three dimensions and completely positive "
               "factorization of rank-3 matrices"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--tol", opt.tol, "set all four tolerances to this value (0 < tol < 1e-2)");
  app.add_flag("--json", opt.json, "print the certificate as JSON");
  app.add_flag("--quiet", opt.quiet, "suppress text output; only the exit status reports");

  auto* factorize = app.add_subcommand("factorize", "factor a symmetric matrix as B B^T, B >= 0, rank <= 3");
  factorize->add_option("file", opt.path, "matrix file")->required();
  auto* embed = app.add_subcommand("embed", "rotate points (one per row) into the nonnegative octant");
  embed->add_option("file", opt.path, "point file, three columns")->required();
  auto* dnn = app.add_subcommand("check-dnn", "test whether a symmetric matrix is doubly nonnegative");
  dnn->add_option("file", opt.path, "matrix file")->required();
  auto* lobatto = app.add_subcommand("lobatto", "certify that no nonnegative H1_0-orthonormal basis of quartic bubbles exists");
  lobatto->add_option("--ell", opt.ell, "curve sample parameter (2 ell + 1 nodes)")
      ->check(CLI::Range(1, 1000));
  lobatto->add_option("--scan-step", opt.scan_step, "grid step for the psi minimum scan")
      ->check(CLI::Range(1e-7, 1e-2));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*factorize) return cmd_factorize(opt);
    if (*embed) return cmd_embed(opt);
    if (*dnn) return cmd_check_dnn(opt);
    if (*lobatto) return cmd_lobatto(opt);
  } catch (const std::exception& e) {
    // Parse errors, invalid tolerances and numerical breakdowns all land here.
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
