#ifndef NNEMBED_INPUT_HPP
#define NNEMBED_INPUT_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "nnembed/numerics.hpp"

namespace nnembed {

// Plain-text input: one row per line, whitespace-separated decimals, '#'
// starts a comment, blank lines are ignored.

enum class InputKind { kMatrix, kPoints };

struct InputDoc {
  InputKind kind = InputKind::kMatrix;
  std::vector<std::vector<double>> rows;
  std::string source;

  Matrix matrix() const { return Matrix::from_rows(rows); }
  std::vector<Vec3> points() const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads rows and checks their shape: rectangular and non-empty; a matrix
/// must be square and symmetric within eps_orth * (1 + max|a|), points must
/// have three columns. Throws ParseError with the offending line.
InputDoc parse_input(std::istream& in, InputKind kind, const std::string& source,
                     const Tolerances& tol);

InputDoc read_input(const std::filesystem::path& path, InputKind kind, const Tolerances& tol);

}  // namespace nnembed

#endif  // NNEMBED_INPUT_HPP
