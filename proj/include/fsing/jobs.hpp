#ifndef FSING_JOBS_HPP
#define FSING_JOBS_HPP

#include <string>

#include <json.hpp>

namespace fsing {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::ordered_json;

/// Runs one self-describing job and returns the report.  The report has
/// stable key order; identical jobs produce byte-identical reports apart
/// from the timing_ms field.  Job fields:
///   command   gb | member | colon | bracket-power | fedder | e-structures
///             | rf-submodule | semilinear.{iterate,base-change,fixed,
///             fixed-basis,stable,counterexample} | lc.{basis,frobenius,
///             verdict,socle,dual-check} | sweep
///   p, vars, weights, gens, f, by, tau, e, order ... (per command)
/// Errors raise fsing exceptions; the CLI maps them to diagnostics.
Json run_job(const Json& job);

/// Sweep a per-prime command over job["primes"], producing CSV with the
/// fixed column set "p,p_mod_d,result".  Rows are ordered by p; primes
/// are evaluated concurrently.
std::string run_sweep_csv(const Json& job);

/// Render a report as human-readable text (the default CLI output).
std::string report_to_text(const Json& report);

} // namespace fsing

#endif
