#pragma once

// Batch driver: job JSON in, report JSON (and optional CSV) out.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "supercong/congruence.hpp"

namespace supercong::harness {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kJobSchema = "supercong-job/1";
inline constexpr const char* kReportSchema = "supercong-report/1";

/// Malformed or inconsistent job description (exit code 2).
struct JobError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SeriesSpec {
  enum class Kind { Rational, Periodic, Coeffs };
  Kind kind = Kind::Rational;
  unsigned conductor = 1;
  std::vector<CycloElem> numerator;    // rational: constant term first
  std::vector<CycloElem> denominator;  // rational: constant term must be nonzero
  std::vector<CycloElem> values;       // periodic: a_1..a_N; coeffs: a_1..a_L
};

struct Job {
  nlohmann::json raw;
  std::optional<SeriesSpec> series;
  unsigned truncation = 0;  // 0: derived from the checks
  FramingParams framing;
  bool has_framing = false;
  std::vector<unsigned long> primes;
  std::optional<unsigned> precision;  // nullopt: auto
  std::vector<std::string> checks;
  std::vector<unsigned> n;
  std::vector<std::pair<unsigned, unsigned>> pairs;
  unsigned pairs_limit = 0;
  unsigned s = 2;
  unsigned m_max = 20;
  std::vector<unsigned long> power_n;
  unsigned a_max = 5;
  unsigned b_min = 1;
  std::vector<unsigned> r{1, 2};
  bool all_factors = false;
  unsigned horizon = 64;
};

/// Registered check identifiers.
const std::vector<std::string>& known_checks();

/// "num/den" string, integer, or {"conductor": N, "coeffs": [...]}.
CycloElem parse_element(const nlohmann::json& j, unsigned conductor);
nlohmann::json element_to_json(const CycloElem& a);

Job parse_job(const nlohmann::json& j);
Job load_job(const std::string& path);

/// Exact expansion to truncation T. Throws JobError when the spec cannot reach T.
Series series_from_spec(const SeriesSpec& spec, unsigned T);

/// Smallest N with a_{k+N} = a_k across coeffs (a_1..a_H in coeffs[0..H-1]);
/// only N <= H/2 qualify. Throws std::domain_error otherwise.
unsigned detect_period(const std::vector<CycloElem>& coeffs);

struct ReportDocument {
  nlohmann::json job;
  nlohmann::ordered_json series_info;
  std::vector<CongruenceReport> reports;

  struct Summary {
    std::size_t total = 0, pass = 0, fail = 0, skip = 0, invalid = 0, sharp = 0;
  };
  Summary summary() const;
};

/// Runs every check unit; `workers` threads (>= 1). Output order does not
/// depend on the worker count.
ReportDocument run(const Job& job, unsigned workers = 1);

nlohmann::ordered_json report_to_json(const CongruenceReport& r);
nlohmann::ordered_json to_json(const ReportDocument& doc);
std::string to_csv(const ReportDocument& doc);

/// 0 when nothing failed, 1 on any fail or invalid report.
int exit_code(const ReportDocument& doc);

}  // namespace supercong::harness
