// Check suites over a momentum grid, and their serialization.
#pragma once

#include "majorana/halfspin.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace majorana {

enum class Status { Pass, Fail, Reported };

const char* to_string(Status s);

struct CheckResult {
  std::string id;      //!< stable, dotted, suite-prefixed
  std::string anchor;  //!< the claim being checked, in words
  Status status{Status::Reported};
  double residual{0};
  double tolerance{0};
  nlohmann::ordered_json measured = nlohmann::ordered_json::object();
};

enum class Suite { HalfSpin, Spin1, Fock, FieldOps };
inline constexpr std::array<Suite, 4> kAllSuites{Suite::HalfSpin, Suite::Spin1, Suite::Fock,
                                                 Suite::FieldOps};

const char* to_string(Suite s);
std::optional<Suite> parse_suite(const std::string& name);

enum class OutputFormat { Json, Text };

struct Direction {
  double polar;
  double azimuth;
};

struct SuiteConfig {
  std::vector<double> masses{1.0};
  std::vector<double> magnitudes{0.5, 1.5, 4.0};
  std::vector<Direction> directions = default_directions();
  bool include_rest{true};
  double tolerance{1e-12};
  PhaseConvention<double> convention{};
  std::vector<Suite> suites{kAllSuites.begin(), kAllSuites.end()};
  OutputFormat format{OutputFormat::Json};

  /// x, y, z, -z and two generic directions.
  static std::vector<Direction> default_directions();

  /// Throws std::invalid_argument on an unusable configuration.
  void validate() const;

  std::vector<FourMomentum<double>> grid() const;
};

/// Runs the selected suites (concurrently) and returns the results sorted by id.
std::vector<CheckResult> run_suites(const SuiteConfig& config);

std::vector<CheckResult> halfspin_suite(const SuiteConfig& config);
std::vector<CheckResult> spin1_suite(const SuiteConfig& config);
std::vector<CheckResult> fock_suite(const SuiteConfig& config);
std::vector<CheckResult> fieldops_suite(const SuiteConfig& config);

bool all_passed(const std::vector<CheckResult>& results);

nlohmann::ordered_json to_json(const CheckResult& r);
/// One JSON object per line.
void write_json_lines(std::ostream& os, const std::vector<CheckResult>& results);
void write_text(std::ostream& os, const std::vector<CheckResult>& results);
void write_report(std::ostream& os, const std::vector<CheckResult>& results,
                  OutputFormat format);

enum class TableKind { Lambda, Rho, Dirac, Mr };

std::optional<TableKind> parse_table_kind(const std::string& name);

/// Component table with 12 significant digits, columns (re, im) per component.
void tabulate(std::ostream& os, const FourMomentum<double>& p,
              const PhaseConvention<double>& conv, TableKind what);

/// %.12g with negative zero printed as 0.
std::string format_number(double x);

}  // namespace majorana
