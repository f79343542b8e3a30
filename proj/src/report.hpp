#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include "weights.hpp"

namespace orbiquot {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchema = "orbiquot-report/1";

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

using WeightMatrix = std::variant<ThetaMatrix, OmegaMatrix>;

// Rows separated by ';' or newlines, ASCII decimal integers. 3x4 rows give
// the Theta case, 2x3 the Omega case; anything else is a ShapeError.
WeightMatrix parse_matrix(const std::string& text);

struct ReportOptions {
  double tol = 1e-10;
  int seeds = 8;
  int max_iter = 500;
  std::uint64_t seed = 1;
  bool json = false;
};

struct RunResult {
  int status = 0;       // 0 ok, 1 analysis/suite failure
  std::string output;   // rendered document, newline terminated
};

RunResult run_check(const WeightMatrix& m, const ReportOptions& opts);
RunResult run_catalog(const WeightMatrix& m, const ReportOptions& opts);
RunResult run_sample(const WeightMatrix& m, const ReportOptions& opts);
RunResult run_verify(const ReportOptions& opts);

}  // namespace orbiquot
