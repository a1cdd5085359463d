#pragma once

// Command implementations behind the qcorr executable. Each command writes to
// the given stream and returns the process exit status.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcorr/channels.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/oracle.hpp"

namespace qcorr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Format { kText, kCsv, kJson };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct StateSpec {
  enum class Kind { kX, kBloch, kWerner };
  Kind kind = Kind::kX;
  std::array<double, 5> values{};  // (a, b, c, z, w) or (x3, y3, T1, T2, T3)
  double werner_z = 0.0;
  std::optional<double> damping;   // amplitude damping on B
};

// Throws StateError for invalid parameters, UsageError for a malformed spec.
XState resolve_state(const StateSpec& spec);

std::string format_number(double v);

// --- report ---------------------------------------------------------------

struct ReportOptions {
  StateSpec state;
  bool with_oracle = false;
  Format format = Format::kText;
};

int cmd_report(const ReportOptions& opts, std::ostream& out, std::ostream& err);

// --- sweep ----------------------------------------------------------------

struct Range {
  double start = 0.0;
  double stop = 1.0;
  int count = 51;

  double at(int i) const;
};

struct SweepSpec {
  Range z;
  Range p;
  Format format = Format::kCsv;
};

struct SweepRow {
  double z, p, laqc, discord, concurrence, surface;
};

// Throws UsageError when a count is below 2 or a range leaves [0, 1].
void validate(const SweepSpec& spec);
std::vector<SweepRow> sweep(const SweepSpec& spec);
void write_sweep(const std::vector<SweepRow>& rows, Format format, std::ostream& out);
// Writes to path, or to out when path is empty or "-".
int cmd_sweep(const SweepSpec& spec, const std::string& path, std::ostream& out,
              std::ostream& err);

// --- verify ---------------------------------------------------------------

struct VerificationRecord {
  std::string state;
  std::string quantity;
  double closed = 0.0;
  double oracle = 0.0;
  double residual = 0.0;  // |closed - oracle|
  double elapsed_seconds = 0.0;
};

struct QuantitySummary {
  std::string quantity;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool pass = true;
};

struct VerifyResult {
  std::vector<VerificationRecord> records;
  std::vector<QuantitySummary> summary;
  bool pass = true;
};

struct VerifyThresholds {
  double laqc = 1e-6;
  double classical = 1e-6;
  double discord = 1e-6;
  double concurrence = 1e-9;
};

VerifyResult run_verify(int count, std::uint64_t seed,
                        const oracle::SearchOptions& search = {},
                        const VerifyThresholds& thresholds = {});
// Records and summary; elapsed times are kept out of the stream so the output
// depends only on count and seed.
void write_verify(const VerifyResult& result, Format format, std::ostream& out);
int cmd_verify(int count, std::uint64_t seed, Format format, std::ostream& out);

// --- monotonicity ---------------------------------------------------------

struct MonotonicityViolation {
  XState state;
  XSymmetry kind;
  double p;
  double before;
  double after;
};

struct MonotonicityResult {
  int states = 0;
  int checks = 0;
  double max_increase = 0.0;  // max over checks of L(rho') - L(rho)
  double max_p0_deviation = 0.0;
  std::vector<MonotonicityViolation> violations;
};

// count states cycling asymmetric, symmetric, anti-symmetric; p = k/20.
MonotonicityResult run_monotonicity(int count, std::uint64_t seed,
                                    double slack = 1e-12);
int cmd_monotonicity(int count, std::uint64_t seed, std::ostream& out);

// --- discrepancies --------------------------------------------------------

int cmd_discrepancies(std::ostream& out);

}  // namespace qcorr::cli
