#include "nnembed/input.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace nnembed {

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " +
                         what),
      line_(line) {}

std::vector<Vec3> InputDoc::points() const {
  std::vector<Vec3> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back({row.at(0), row.at(1), row.at(2)});
  return out;
}

InputDoc parse_input(std::istream& in, InputKind kind, const std::string& source,
                     const Tolerances& tol) {
  InputDoc doc{kind, {}, source};
  std::size_t first_line = 0;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<double> row;
    for (std::string tok; tokens >> tok;) {
      double v = 0.0;
      const char* begin = tok.data();
      const char* end = begin + tok.size();
      if (tok.size() > 1 && tok.front() == '+') ++begin;
      auto [ptr, ec] = std::from_chars(begin, end, v);
      if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw ParseError(source, lineno, "not a finite number: '" + tok + "'");
      }
      row.push_back(v);
    }
    if (row.empty()) continue;
    if (doc.rows.empty()) {
      first_line = lineno;
    } else if (row.size() != doc.rows.front().size()) {
      throw ParseError(source, lineno,
                       "expected " + std::to_string(doc.rows.front().size()) + " values, got " +
                           std::to_string(row.size()));
    }
    doc.rows.push_back(std::move(row));
  }

  if (doc.rows.empty()) throw ParseError(source, 0, "no data rows");

  if (kind == InputKind::kPoints) {
    if (doc.rows.front().size() != 3) {
      throw ParseError(source, first_line, "points need 3 coordinates per row");
    }
    return doc;
  }

  const Matrix m = doc.matrix();
  if (m.rows() != m.cols()) {
    throw ParseError(source, 0,
                     "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         ", expected square");
  }
  if (!SymMatrix::from_dense(m, tol.eps_orth)) throw ParseError(source, 0, "matrix is not symmetric");
  return doc;
}

InputDoc read_input(const std::filesystem::path& path, InputKind kind, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return parse_input(in, kind, path.string(), tol);
}

}  // namespace nnembed
