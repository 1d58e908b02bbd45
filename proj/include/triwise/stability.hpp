#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triwise/family.hpp"
#include "triwise/interval.hpp"
#include "triwise/shifted_family.hpp"

namespace triwise {

inline constexpr int kStabilityMinT = 15;

/// The proof-derived constants for given (t, p). They are the values the
/// argument produces, not best possible ones.
struct StabilityConstants {
  int t = 0;
  Rational p;
  /// Sign of p - p0(t); 0 only when p0(t) is rational and p equals it.
  int p_vs_p0 = -1;
  Interval alpha;
  Interval eps1;
  /// Margins of the s = 2 and s >= 3 bounds; eps2 is their minimum.
  Interval eps2_s2;
  Interval eps2_s3;
  Interval eps2;
  Interval eps3;
  Interval eps0;
  Interval eps0_prime;
  Interval delta1;
  Interval delta2;
  Interval c1;
  Interval c2;
  Interval c;
  mpfr_prec_t precision = 0;
};

/// Needs t >= 15 and 0 < p <= p0(t). Escalates precision until every
/// positivity condition separates; throws InconclusiveError at the cap.
StabilityConstants compute_constants(int t, const Rational& p, mpfr_prec_t prec = kDefaultPrecision,
                                     mpfr_prec_t cap = kDefaultPrecisionCap);

/// a = μ(G \ F_0^t), b = μ(F_0^t \ G) and the chain
/// ε >= b - a > δ1 b, a + b < (2/δ1) ε for an s = 0 shaped family.
struct Claim9Check {
  Rational a;
  Rational b;
  Rational eps;
  bool eps_at_least_gap = false;
  bool gap_above_delta_b = false;
  bool sum_below_bound = false;
  bool holds = false;
};

Claim9Check claim9_chain(const ShiftedUpset& family, const StabilityConstants& k);

struct StabilityAudit {
  int t = 0;
  Rational p;
  bool shifted = false;
  bool up_closed = false;
  bool intersecting = false;
  bool below_pt = false;
  Rational measure;
  /// p^t - μ_p(G).
  Rational eps;
  Rational sym_diff_f0;
  std::optional<Rational> sym_diff_f1;
  std::optional<StabilityConstants> constants;
  /// "satisfied", "violated", "not-applicable", "equality" or "undetermined".
  std::string theorem2;
  std::string theorem3;
  /// max{i : W_i ∈ G} for the s = 0 and s = 1 witness walks, when W_1 ∈ G.
  std::optional<int> shift_index_s0;
  std::optional<int> shift_index_s1;
  std::vector<std::string> notes;
};

StabilityAudit stability_audit(const SetFamily& family, int t, const Rational& p,
                               mpfr_prec_t prec = kDefaultPrecision, mpfr_prec_t cap = kDefaultPrecisionCap);

}  // namespace triwise
