#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triwise/interval.hpp"

namespace triwise {

enum class Verdict { Holds, Fails, Inconclusive };

std::string_view to_string(Verdict v);

/// One checked instance. The margin is normalised so that the instance holds
/// iff the margin is positive; for exact rational checks it is [1,1] or
/// [-1,-1].
struct ClaimPoint {
  std::string label;
  Verdict verdict = Verdict::Inconclusive;
  Interval margin;
  mpfr_prec_t precision = 0;
};

struct ClaimReport {
  std::string id;
  std::string statement;
  std::string domain;
  /// Non-asserted entries are evaluated and reported but never count towards
  /// the overall pass/fail status.
  bool asserted = true;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<ClaimPoint> points;
  mpfr_prec_t max_precision = 0;
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t inconclusive = 0;
};

struct CheckDomain {
  /// Overrides the claim's t-range; the lower end is clamped to the smallest
  /// t for which the claim is stated.
  std::optional<int> t_min;
  std::optional<int> t_max;
  /// Points in each continuous p-grid (the endpoint is always included).
  int grid_points = 512;
};

inline constexpr int kDefaultSweepEnd = 500;

/// Registry order: A1, A1.5, A2, A2.5, A3, A4, A4-t6, A5, A6, S0, S1,
/// MONO-G, THRESH.
std::vector<std::string> claim_ids();
bool is_claim_id(std::string_view id);

/// Evaluates one registry entry. Each point starts at `start_precision` and
/// doubles until its margin separates from zero or `precision_cap` is passed.
ClaimReport run_check(std::string_view id, const CheckDomain& domain = {},
                      mpfr_prec_t precision_cap = kDefaultPrecisionCap,
                      mpfr_prec_t start_precision = kDefaultPrecision);

/// All registry entries, spread over `threads` workers; the result is in
/// registry order regardless of scheduling.
std::vector<ClaimReport> run_all_checks(const CheckDomain& domain = {},
                                        mpfr_prec_t precision_cap = kDefaultPrecisionCap,
                                        mpfr_prec_t start_precision = kDefaultPrecision, int threads = 1);

/// Fails if any asserted report fails, else inconclusive if any asserted
/// report is inconclusive, else holds.
Verdict overall_verdict(const std::vector<ClaimReport>& reports);

}  // namespace triwise
