#include "nnembed/report.hpp"

#include <cstdio>
#include <sstream>

namespace nnembed {

using nlohmann::json;

namespace {

std::vector<std::vector<double>> rows_of(const Matrix& m) {
  std::vector<std::vector<double>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = m.row(r);
  return out;
}

std::vector<std::vector<double>> rows_of(const Frame3& f) {
  return {{f[0].begin(), f[0].end()}, {f[1].begin(), f[1].end()}, {f[2].begin(), f[2].end()}};
}

std::vector<CandidateDoc> describe_all(const std::vector<CandidateReport>& reports) {
  std::vector<CandidateDoc> out;
  out.reserve(reports.size());
  for (const auto& r : reports) out.push_back(describe(r));
  return out;
}

json candidate_json(const CandidateDoc& c) {
  return {{"source", c.source}, {"indices", c.indices}, {"g", c.g},
          {"verdict", c.verdict}, {"pair", c.pair},     {"value", c.value}};
}

CandidateDoc candidate_from(const json& j) {
  CandidateDoc c;
  c.source = j.at("source").get<std::string>();
  c.indices = j.at("indices").get<std::array<std::size_t, 2>>();
  c.g = j.at("g").get<std::array<double, 3>>();
  c.verdict = j.at("verdict").get<std::string>();
  c.pair = j.at("pair").get<std::array<std::size_t, 2>>();
  c.value = j.at("value").get<double>();
  return c;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void render_matrix(std::ostringstream& out, const char* name,
                   const std::vector<std::vector<double>>& rows) {
  out << name << ":\n";
  for (const auto& row : rows) {
    out << "  ";
    for (double v : row) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " %14.10f", v);
      out << buf;
    }
    out << '\n';
  }
}

void render_candidates(std::ostringstream& out, const std::vector<CandidateDoc>& cands) {
  for (std::size_t k = 0; k < cands.size(); ++k) {
    const CandidateDoc& c = cands[k];
    out << "  [" << k << "] " << c.source << " (" << c.indices[0] << ", " << c.indices[1]
        << ") g = (" << fmt(c.g[0]) << ", " << fmt(c.g[1]) << ", " << fmt(c.g[2]) << "): "
        << c.verdict;
    if (c.verdict != "pass") {
      out << " at (" << c.pair[0] << ", " << c.pair[1] << "), value " << fmt(c.value);
    }
    out << '\n';
  }
}

}  // namespace

bool CertificateDoc::affirmative() const {
  return verdict == "factorized" || verdict == "embedded" || verdict == "trivially_embeddable" ||
         verdict == "doubly_nonnegative" || verdict == "disproved" ||
         verdict == "insufficient_sample";
}

CandidateDoc describe(const CandidateReport& report) {
  const Candidate& c = report.candidate;
  return {to_string(c.source),       {c.i, c.j},
          {c.g[0], c.g[1], c.g[2]},  to_string(report.verdict),
          {report.i, report.j},      report.verdict == CandidateVerdict::kPass ? 0.0 : report.value};
}

CertificateDoc certificate_for(const CpResult& result, const Tolerances& tol) {
  CertificateDoc doc;
  doc.command = "factorize";
  doc.tolerances = tol;
  if (const auto* f = std::get_if<Factorized>(&result)) {
    doc.verdict = "factorized";
    doc.rank = f->rank;
    doc.matrixB = rows_of(f->B);
    doc.residual = f->residual;
    return doc;
  }
  const auto& r = std::get<Refused>(result);
  doc.verdict = "refused";
  doc.reason = to_string(r.reason);
  if (r.rank > 0) doc.rank = r.rank;
  if (r.reason == RefusalReason::kNotNonneg ||
      (r.reason == RefusalReason::kEmbedFailed && !r.certificate)) {
    doc.obtuse_pair = std::array<std::size_t, 2>{r.i, r.j};
  }
  if (r.certificate) {
    doc.candidates = describe_all(r.certificate->reports);
    if (r.certificate->obtuse_pair) {
      doc.obtuse_pair = std::array<std::size_t, 2>{r.certificate->obtuse_pair->first,
                                                   r.certificate->obtuse_pair->second};
    }
  }
  return doc;
}

CertificateDoc certificate_for(const EmbedResult& result, const Tolerances& tol) {
  CertificateDoc doc;
  doc.command = "embed";
  doc.tolerances = tol;
  if (const auto* s = std::get_if<EmbedSuccess>(&result)) {
    doc.verdict = "embedded";
    doc.candidates = describe_all(s->reports);
    doc.witness = doc.candidates.back();
    doc.matrixF = rows_of(s->F);
    doc.coordinates = rows_of(s->coords);
  } else if (const auto* t = std::get_if<EmbedTrivial>(&result)) {
    doc.verdict = "trivially_embeddable";
    doc.reason = t->reason;
    doc.matrixF = rows_of(t->F);
    doc.coordinates = rows_of(t->coords);
  } else {
    const auto& f = std::get<EmbedFailure>(result);
    doc.verdict = "not_embeddable";
    doc.candidates = describe_all(f.reports);
    if (f.obtuse_pair) {
      doc.reason = "obtuse_pair";
      doc.obtuse_pair = std::array<std::size_t, 2>{f.obtuse_pair->first, f.obtuse_pair->second};
    } else {
      doc.reason = "no_candidate_passes";
    }
  }
  return doc;
}

CertificateDoc certificate_for(const DnnVerdict& verdict, const Tolerances& tol) {
  CertificateDoc doc;
  doc.command = "check-dnn";
  doc.tolerances = tol;
  switch (verdict.kind) {
    case DnnVerdict::Kind::kDoublyNonnegative:
      doc.verdict = "doubly_nonnegative";
      break;
    case DnnVerdict::Kind::kNegativeEntry:
      doc.verdict = "not_doubly_nonnegative";
      doc.reason = "negative_entry";
      doc.obtuse_pair = std::array<std::size_t, 2>{verdict.i, verdict.j};
      break;
    case DnnVerdict::Kind::kNotPsd:
      doc.verdict = "not_doubly_nonnegative";
      doc.reason = "not_psd";
      break;
  }
  return doc;
}

json to_json(const CertificateDoc& doc) {
  json cands = json::array();
  for (const auto& c : doc.candidates) cands.push_back(candidate_json(c));

  json j = {
      {"command", doc.command},
      {"verdict", doc.verdict},
      {"tolerances",
       {{"eps_rank", doc.tolerances.eps_rank},
        {"eps_nn", doc.tolerances.eps_nn},
        {"eps_orth", doc.tolerances.eps_orth},
        {"eps_dedup", doc.tolerances.eps_dedup}}},
      {"reason", doc.reason},
      {"rank", optional_json(doc.rank)},
      {"candidates", cands},
      {"witness", doc.witness ? candidate_json(*doc.witness) : json(nullptr)},
      {"obtusePair", optional_json(doc.obtuse_pair)},
      {"matrixB", optional_json(doc.matrixB)},
      {"matrixF", optional_json(doc.matrixF)},
      {"coordinates", optional_json(doc.coordinates)},
      {"residual", optional_json(doc.residual)},
  };
  if (doc.lobatto) {
    const LobattoChecks& l = *doc.lobatto;
    json curve = json::array();
    for (const auto& c : l.curve_candidates) curve.push_back(candidate_json(c));
    j["lobatto"] = {{"orthonormalityResidual", l.orthonormality_residual},
                    {"psiOrthonormalityResidual", l.psi_orthonormality_residual},
                    {"psiMin", l.psi_min},
                    {"scanStep", l.scan_step},
                    {"ell", l.ell},
                    {"curveVerdict", l.curve_verdict},
                    {"curveCandidates", curve}};
  } else {
    j["lobatto"] = nullptr;
  }
  return j;
}

CertificateDoc certificate_from_json(const json& j) {
  CertificateDoc doc;
  doc.command = j.at("command").get<std::string>();
  doc.verdict = j.at("verdict").get<std::string>();
  const json& t = j.at("tolerances");
  doc.tolerances = {t.at("eps_rank").get<double>(), t.at("eps_nn").get<double>(),
                    t.at("eps_orth").get<double>(), t.at("eps_dedup").get<double>()};
  doc.reason = j.at("reason").get<std::string>();
  doc.rank = optional_from<std::size_t>(j, "rank");
  for (const auto& c : j.at("candidates")) doc.candidates.push_back(candidate_from(c));
  if (!j.at("witness").is_null()) doc.witness = candidate_from(j.at("witness"));
  doc.obtuse_pair = optional_from<std::array<std::size_t, 2>>(j, "obtusePair");
  doc.matrixB = optional_from<std::vector<std::vector<double>>>(j, "matrixB");
  doc.matrixF = optional_from<std::vector<std::vector<double>>>(j, "matrixF");
  doc.coordinates = optional_from<std::vector<std::vector<double>>>(j, "coordinates");
  doc.residual = optional_from<double>(j, "residual");
  if (j.contains("lobatto") && !j.at("lobatto").is_null()) {
    const json& l = j.at("lobatto");
    LobattoChecks checks;
    checks.orthonormality_residual = l.at("orthonormalityResidual").get<double>();
    checks.psi_orthonormality_residual = l.at("psiOrthonormalityResidual").get<double>();
    checks.psi_min = l.at("psiMin").get<double>();
    checks.scan_step = l.at("scanStep").get<double>();
    checks.ell = l.at("ell").get<int>();
    checks.curve_verdict = l.at("curveVerdict").get<std::string>();
    for (const auto& c : l.at("curveCandidates")) checks.curve_candidates.push_back(candidate_from(c));
    doc.lobatto = std::move(checks);
  }
  return doc;
}

std::string render_text(const CertificateDoc& doc) {
  std::ostringstream out;
  out << "verdict: " << doc.verdict;
  if (!doc.reason.empty()) out << " (" << doc.reason << ")";
  out << '\n';
  if (doc.rank) out << "rank: " << *doc.rank << '\n';
  if (doc.obtuse_pair) {
    out << "violating pair: (" << (*doc.obtuse_pair)[0] << ", " << (*doc.obtuse_pair)[1] << ")\n";
  }
  if (!doc.candidates.empty()) {
    out << "candidates (" << doc.candidates.size() << "):\n";
    render_candidates(out, doc.candidates);
  }
  if (doc.matrixB) render_matrix(out, "B", *doc.matrixB);
  if (doc.matrixF) render_matrix(out, "F (rows are basis vectors)", *doc.matrixF);
  if (doc.coordinates) render_matrix(out, "coordinates F^T U", *doc.coordinates);
  if (doc.residual) out << "residual max|A - B B^T|: " << fmt(*doc.residual) << '\n';
  if (doc.lobatto) {
    const LobattoChecks& l = *doc.lobatto;
    out << "H1_0 Gram of (phi2, phi3, phi4), max|G - I|: " << fmt(l.orthonormality_residual) << '\n'
        << "H1_0 Gram of (psi2, psi3, psi4), max|G - I|: " << fmt(l.psi_orthonormality_residual)
        << '\n'
        << "min psi over grid (step " << fmt(l.scan_step) << "): " << fmt(l.psi_min) << '\n'
        << "curve sample ell = " << l.ell << ": " << l.curve_verdict << '\n';
    if (!l.curve_candidates.empty()) {
      out << "curve candidates (" << l.curve_candidates.size() << "):\n";
      render_candidates(out, l.curve_candidates);
    }
  }
  return out.str();
}

}  // namespace nnembed
