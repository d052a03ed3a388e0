#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "harmonid/catalog.hpp"

namespace harmonid {

struct SweepConfig {
  unsigned n_max = 20;
  unsigned p_max = 6;
  unsigned q_max = 6;
  unsigned rational_samples = 25;
  std::uint64_t seed = 42;
  unsigned numerator_bound = 12;
  unsigned denominator_bound = 12;
  double float_tol = 1e-6;
  std::size_t max_terms = 500000;
  /// Worker threads; 0 means hardware concurrency.
  unsigned jobs = 0;
};

/// Throws UsageError on an unusable configuration.
void validate(const SweepConfig& cfg);

struct Counterexample {
  std::string check;
  Assignment assignment;
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct TrackSummary {
  std::string label;
  Mode mode = Mode::exact;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped_pole = 0;
};

struct VerificationReport {
  std::string identity_id;
  Mode mode = Mode::exact;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped_pole = 0;
  std::vector<TrackSummary> tracks;
  /// First kMaxCounterexamples failures, in enumeration order.
  std::vector<Counterexample> counterexamples;
  double wall_ms = 0.0;
  SweepConfig config;
};

inline constexpr std::size_t kMaxCounterexamples = 10;

VerificationReport run_identity(const IdentitySpec& spec, const SweepConfig& cfg);

/// Empty filter selects the whole catalog. Unknown ids throw UsageError.
std::vector<VerificationReport> run_all(const SweepConfig& cfg, const std::vector<std::string>& filter = {});

bool all_passed(const std::vector<VerificationReport>& reports);

/// Serializers. Wall times are included only when timing is set, so that
/// untimed output is a pure function of the configuration.
std::string to_json(const std::vector<VerificationReport>& reports, const SweepConfig& cfg, bool timing = false);
std::string to_csv(const std::vector<VerificationReport>& reports, bool timing = false);
std::string to_table(const std::vector<VerificationReport>& reports, bool timing = false);

struct DerivativeReport {
  std::size_t binom_total = 0;
  std::size_t binom_passed = 0;
  std::size_t harmonic_total = 0;
  std::size_t harmonic_passed = 0;
  std::vector<std::string> failures;

  bool ok() const { return binom_passed == binom_total && harmonic_passed == harmonic_total; }
};

/// Jet derivative rules over (s <= s_max, t <= s) and (n <= n_max, 1 <= ell <= ell_max),
/// each at cfg.rational_samples seeded rational points.
DerivativeReport run_derivative_checks(const SweepConfig& cfg, unsigned s_max = 10, unsigned n_max = 15,
                                       unsigned ell_max = 3);

struct BenchRow {
  unsigned n = 0;
  double full_ms = 0.0;
  double incremental_ms = 0.0;
  std::uint64_t full_mults = 0;
  std::uint64_t incremental_mults = 0;
  bool equal = false;
};

/// Terminating Dougall 5F4 payloads at each n: per-term rebuilding against
/// the term-ratio recurrence.
std::vector<BenchRow> bench_series(const std::vector<unsigned>& grid = {10, 50, 100, 200});

std::string bench_to_table(const std::vector<BenchRow>& rows, bool timing = true);
std::string bench_to_json(const std::vector<BenchRow>& rows, bool timing = true);

}  // namespace harmonid
