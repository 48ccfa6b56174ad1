#pragma once

// Configuration parsing, orchestration of checks, and report emission for the
// gsfock command-line tool.
//
// Exit codes: 0 every error-severity check passed, 1 a check failed,
// 2 invalid input or environment.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gsfock/errors.hpp"
#include "gsfock/multilinear.hpp"
#include "gsfock/statistics_zoo.hpp"

namespace gsfock::cli {

using Json = nlohmann::json;

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInvalid = 2;

// Schema or syntax problem in a config file; the message names the location.
class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

struct StatisticsConfig {
  std::string family;
  std::optional<double> q;
  std::optional<std::vector<int>> group;
  std::optional<Grading> degrees;
  std::optional<ComplexMatrix> epsilon;
  std::optional<ComplexMatrix> cross;
  std::optional<ComplexMatrix> braid;
};

struct RunConfig {
  std::size_t dimension = 0;
  StatisticsConfig statistics;
  std::size_t n_max = 4;
  double tolerance = kDefaultTolerance;
  bool emit_matrix = false;
  bool allow_inconsistent = false;
};

inline constexpr std::size_t kMaxDimension = 6;
inline constexpr std::size_t kMaxLevels = 8;
inline constexpr std::size_t kMaxTruncatedSize = 65536;

RunConfig parse_config(std::string_view text);

// Canonical JSON form of a config (defaults filled in).
Json config_to_json(const RunConfig& config);

struct BuiltSpec {
  StatisticsSpec spec;
  std::optional<Bicharacter> epsilon;  // color-derived specs only
};

BuiltSpec make_spec(const RunConfig& config);

struct Outcome {
  Json report;
  int exit_code = kExitPass;
};

Outcome run_check(const RunConfig& config);
Outcome run_gram(const RunConfig& config, std::size_t level);
Outcome run_fock(const RunConfig& config);
Outcome run_report(const RunConfig& config);

// Sorted keys, two-space indent, floats at 17 significant digits.
std::string emit_json(const Json& value);

std::string human_summary(const Json& report);

Json complex_to_json(Complex z);
Json matrix_to_json(const ComplexMatrix& m);

// Entry point shared by tools/gsfock and the tests.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gsfock::cli
