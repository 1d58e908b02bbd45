#pragma once

#include <optional>

#include "triwise/interval.hpp"
#include "triwise/rational.hpp"

namespace triwise {

/// α(p): the root in (0,1) of q x^3 - x + p, i.e. the probability that the
/// p-biased walk ever hits y = 2x + 1. Both the closed form
/// ½(√((1+3p)/(1-p)) - 1) and an interval Newton iteration on the cubic are
/// evaluated; the result is their intersection.
Interval alpha(const Rational& p, mpfr_prec_t prec = kDefaultPrecision);
Interval alpha_closed_form(const Interval& p);
Interval alpha_cubic(const Rational& p, mpfr_prec_t prec = kDefaultPrecision);

/// p0(t) = 2/(√(4t+9) - 1), intersected with the positive root of
/// (t+2)p^2 - p - 1 found by interval Newton.
Interval p0(int t, mpfr_prec_t prec = kDefaultPrecision);
Interval p0_surd(int t, mpfr_prec_t prec = kDefaultPrecision);
Interval p0_quadratic(int t, mpfr_prec_t prec = kDefaultPrecision);
/// Exact value when 4t+9 is a perfect square (t = 4, 10, 18, ...).
std::optional<Rational> p0_exact(int t);

/// Sign of p - p0(t), decided exactly through (t+2)p^2 - p - 1.
int compare_with_p0(const Rational& p, int t);
/// The exact p0 when rational, else a rational in (p0 - 2^-bits, p0).
Rational p0_bracket_below(int t, int bits = 96);
/// A rational in (p0, p0 + 2^-bits), or the exact p0 when rational.
Rational p0_bracket_above(int t, int bits = 96);

/// β(t) = log p0(t) + (t+1) p0(t)^2.
Interval beta(int t, mpfr_prec_t prec = kDefaultPrecision);

/// t0(p) = q(1+2p)/p^2; t <= t0(p) iff p <= p0(t).
Rational t0(const Rational& p);

/// μ_p(F_0^t) - μ_p(F_1^t) = p^t q (1 + p - (t+2)p^2).
Rational frontier_gap(int t, const Rational& p);
Interval frontier_gap(int t, const Interval& p);

struct ThresholdParams {
  int t = 0;
  Interval p0;
  Interval beta;
  /// t0 evaluated at the p0 enclosure; encloses t.
  Interval t0_at_p0;
  std::optional<Rational> p0_exact;
};

ThresholdParams threshold_params(int t, mpfr_prec_t prec = kDefaultPrecision);

}  // namespace triwise
