#include "triwise/stability.hpp"

#include "triwise/error.hpp"
#include "triwise/shift.hpp"
#include "triwise/thresholds.hpp"
#include "triwise/walk.hpp"

namespace triwise {

namespace {

Interval rat(const Rational& x, mpfr_prec_t prec) { return Interval::from_rational(x, prec); }

/// Fills every constant at one precision; returns the first condition that
/// failed to separate, or an empty string.
std::string evaluate(StabilityConstants& k, mpfr_prec_t prec) {
  const int t = k.t;
  const auto ut = static_cast<unsigned long>(t);
  const Interval p = rat(k.p, prec);
  const Interval q = 1 - p;
  const Interval a = alpha(k.p, prec);
  const Interval pt = pow(p, ut);
  k.precision = prec;
  k.alpha = a;
  k.eps1 = pt - pow(a, ut + 2) - pow(a, ut + 1);
  k.eps2_s2 = pt - (pow(a, ut + 2) + rat(make_rational(t * t + 9 * t + 14, 2), prec) * pow(p, ut + 4) * pow(q, 2));
  k.eps2_s3 = pt - (pow(a, ut + 1) + rat(make_rational((t + 1) * (t + 8) * (t + 9), 6), prec) * pow(p, ut + 6) * pow(q, 3));
  k.eps2 = min(k.eps2_s2, k.eps2_s3);
  k.eps3 = rat(frontier_gap(t, k.p), prec);
  k.eps0 = min(k.eps1, k.eps2);
  k.eps0_prime = k.p_vs_p0 < 0 ? min(k.eps0, k.eps3) : k.eps0;
  const Interval spread = q * (1 - pow(a, 2));
  k.delta1 = 1 - (a / q) * pow(a, ut + 1) / (pt * spread);
  k.delta2 = 1 - pow(a / q, 2) * pow(a, ut) / (t * pow(p, ut + 2) * spread);

  const std::pair<const char*, const Interval*> positive[] = {
      {"eps1", &k.eps1}, {"eps2", &k.eps2}, {"eps0", &k.eps0}, {"delta1", &k.delta1}, {"delta2", &k.delta2}};
  for (const auto& [name, value] : positive) {
    if (value->certainly_negative()) throw DomainError(std::string(name) + " is negative at this (t, p)");
    if (!value->certainly_positive()) return name;
  }
  if (k.p_vs_p0 < 0 && !k.eps0_prime.certainly_positive()) return "eps0_prime";
  // δ < 1 holds because the subtracted ratio is a product of positive factors.
  k.c1 = 2 / k.delta1;
  k.c2 = 2 / k.delta2;
  k.c = max(k.c1, k.c2);
  return {};
}

Rational profile_measure_where(const SetFamily& family, const Rational& p, int width, int need) {
  SizeProfile prof{family.ground_size(), std::vector<std::uint64_t>(static_cast<std::size_t>(family.ground_size()) + 1, 0)};
  for (const auto& g : family.members()) {
    if (g.prefix_count(width) >= need) ++prof.counts[static_cast<std::size_t>(g.size())];
  }
  return p_measure(prof, p);
}

std::string verdict(const StabilityConstants& k, const Interval& threshold, const Rational& eps, const Rational& distance,
                    mpfr_prec_t prec) {
  const Interval e = rat(eps, prec);
  if (!e.certainly_less(threshold)) return threshold.certainly_less(e) ? "not-applicable" : "undetermined";
  const Interval bound = k.c * e;
  const Interval d = rat(distance, prec);
  if (d.certainly_less(bound)) return "satisfied";
  if (!bound.certainly_less(d) && bound.overlaps(d)) return "undetermined";
  return "violated";
}

}  // namespace

StabilityConstants compute_constants(int t, const Rational& p, mpfr_prec_t prec, mpfr_prec_t cap) {
  if (t < kStabilityMinT) throw DomainError("stability constants need t >= 15");
  require_probability(p);
  StabilityConstants k;
  k.t = t;
  k.p = p;
  k.p_vs_p0 = compare_with_p0(p, t);
  if (k.p_vs_p0 > 0) throw DomainError("stability constants need p <= p0(t)");
  for (mpfr_prec_t bits = prec;; bits *= 2) {
    const std::string open = evaluate(k, bits);
    if (open.empty()) return k;
    if (bits * 2 > cap) throw InconclusiveError(open + " does not separate from 0 within the precision cap");
  }
}

Claim9Check claim9_chain(const ShiftedUpset& family, const StabilityConstants& k) {
  const UpsetBreakdown parts = family.breakdown(k.t, 0);
  const Rational pt = pow(k.p, static_cast<unsigned long>(k.t));
  const Rational whole = p_measure(parts.members, k.p);
  const Rational inside = p_measure(parts.members_in_frontier, k.p);
  Claim9Check c;
  c.a = whole - inside;
  c.b = pt - inside;
  c.eps = pt - whole;
  const mpfr_prec_t prec = k.precision;
  c.eps_at_least_gap = c.eps >= c.b - c.a;
  c.gap_above_delta_b = (rat(c.b - c.a, prec) - k.delta1 * rat(c.b, prec)).certainly_positive();
  c.sum_below_bound = (k.c1 * rat(c.eps, prec) - rat(c.a + c.b, prec)).certainly_positive();
  c.holds = c.eps_at_least_gap && c.gap_above_delta_b && c.sum_below_bound;
  return c;
}

StabilityAudit stability_audit(const SetFamily& family, int t, const Rational& p, mpfr_prec_t prec, mpfr_prec_t cap) {
  require_probability(p);
  const int n = family.ground_size();
  if (t < 1 || t > n) throw DomainError("stability audit needs 1 <= t <= n");
  StabilityAudit out;
  out.t = t;
  out.p = p;
  out.shifted = is_shifted(family);
  out.up_closed = is_up_closed(family);
  out.intersecting = !family.empty() && is_r_wise_t_intersecting(family, 3, t);
  const Rational pt = pow(p, static_cast<unsigned long>(t));
  out.measure = p_measure(family, p);
  out.eps = pt - out.measure;
  out.below_pt = out.eps > 0;
  out.sym_diff_f0 = pt + out.measure - 2 * profile_measure_where(family, p, t, t);
  if (t + 3 <= n) {
    out.sym_diff_f1 = frontier_measure(1, t, p, n) + out.measure - 2 * profile_measure_where(family, p, t + 3, t + 2);
  }
  if (!out.shifted) out.notes.emplace_back("family is not shifted");
  if (!out.up_closed) out.notes.emplace_back("family is not up-closed");
  if (!out.intersecting) out.notes.emplace_back("family is not 3-wise t-intersecting");
  if (out.eps < 0) out.notes.emplace_back("measure exceeds p^t");

  for (int i = 1; t + i + 1 <= n; ++i) {
    if (family.contains(witness_w(0, t, i, n))) out.shift_index_s0 = i;
  }
  for (int i = 1; t + i + 4 <= n; ++i) {
    if (family.contains(witness_w(1, t, i, n))) out.shift_index_s1 = i;
  }
  if (out.shift_index_s0 && !family.contains(witness_w(0, t, 1, n))) out.shift_index_s0.reset();
  if (out.shift_index_s1 && !family.contains(witness_w(1, t, 1, n))) out.shift_index_s1.reset();

  const bool in_range = t >= kStabilityMinT && compare_with_p0(p, t) <= 0;
  if (!in_range) {
    out.notes.emplace_back("constants need t >= 15 and p <= p0(t)");
    out.theorem2 = out.theorem3 = "not-applicable";
    return out;
  }
  out.constants = compute_constants(t, p, prec, cap);
  const StabilityConstants& k = *out.constants;
  const bool structural = out.shifted && out.up_closed && out.intersecting;
  if (!structural || out.eps < 0) {
    out.theorem2 = out.theorem3 = "not-applicable";
    return out;
  }
  if (out.eps == 0) {
    out.theorem2 = out.theorem3 = "equality";
    return out;
  }
  const Rational nearest = out.sym_diff_f1 ? std::min(out.sym_diff_f0, *out.sym_diff_f1) : out.sym_diff_f0;
  out.theorem2 = verdict(k, k.eps0, out.eps, nearest, k.precision);
  std::string t3 = verdict(k, k.eps0_prime, out.eps, out.sym_diff_f0, k.precision);
  if (t3 != "satisfied" && k.p_vs_p0 == 0 && out.sym_diff_f1) {
    const std::string alt = verdict(k, k.eps0_prime, out.eps, *out.sym_diff_f1, k.precision);
    if (alt == "satisfied") t3 = alt;
  }
  out.theorem3 = t3;
  return out;
}

}  // namespace triwise
