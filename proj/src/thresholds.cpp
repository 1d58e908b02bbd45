#include "triwise/thresholds.hpp"

#include <functional>
#include <stdexcept>

#include "triwise/error.hpp"

namespace triwise {

namespace {

using IntervalFn = std::function<Interval(const Interval&)>;
using RationalSign = std::function<int(const Rational&)>;

int sign(const Rational& x) { return sgn(x); }

/// Narrows [lo, hi] (sign change of `f`, f(lo) < 0 < f(hi) when `increasing`)
/// by exact bisection until the derivative enclosure on the bracket excludes
/// zero, then runs interval Newton to the working precision.
Interval newton_root(Rational lo, Rational hi, const RationalSign& f_sign, bool increasing, const IntervalFn& f,
                     const IntervalFn& df, mpfr_prec_t prec) {
  const int want = increasing ? 1 : -1;
  auto bisect = [&] {
    const Rational mid = (lo + hi) / 2;
    const int s = f_sign(mid);
    if (s == 0) {
      lo = hi = mid;
      return;
    }
    if (s == want) hi = mid;
    else lo = mid;
  };
  for (int i = 0; i < 24; ++i) bisect();
  for (int i = 0; i < 400 && lo != hi; ++i) {
    if (!df(Interval::from_bounds(lo, hi, prec)).contains_zero()) break;
    bisect();
  }
  Interval x = Interval::from_bounds(lo, hi, prec);
  if (lo == hi) return x;
  const Interval slope = df(x);
  if (slope.contains_zero()) throw InconclusiveError("derivative enclosure contains zero near the root");
  Rational last_width = x.width();
  for (int iter = 0; iter < 4 * prec; ++iter) {
    const Rational mid = (x.lower() + x.upper()) / 2;
    const Interval m = Interval::from_rational(mid, prec);
    const Interval step = m - f(m) / df(x);
    auto next = intersect(x, step);
    if (!next) throw std::logic_error("interval Newton lost the root");
    x = *next;
    const Rational w = x.width();
    if (w == 0 || w >= last_width) break;
    last_width = w;
  }
  return x;
}

Interval merge_routes(const Interval& a, const Interval& b, const char* what) {
  auto both = intersect(a, b);
  if (!both) throw std::logic_error(std::string("independent enclosures of ") + what + " disagree");
  return *both;
}

}  // namespace

Interval alpha_closed_form(const Interval& p) {
  const Interval ratio = (1 + 3 * p) / (1 - p);
  return (sqrt(ratio) - 1) / 2;
}

Interval alpha_cubic(const Rational& p, mpfr_prec_t prec) {
  require_probability(p);
  if (p >= make_rational(2, 3)) throw DomainError("alpha needs p < 2/3");
  const Rational q = 1 - p;
  // q x^3 - x + p = (x - 1)(q x^2 + q x - p); the quadratic factor changes
  // sign once on [0, 1] and is exact on rationals.
  auto g_sign = [&](const Rational& x) { return sign(q * x * x + q * x - p); };
  const Interval qi = Interval::from_rational(q, prec);
  const Interval pi = Interval::from_rational(p, prec);
  auto f = [&](const Interval& x) { return qi * pow(x, 3) - x + pi; };
  auto df = [&](const Interval& x) { return 3 * (qi * pow(x, 2)) - 1; };
  return newton_root(Rational(0), Rational(1), g_sign, true, f, df, prec);
}

Interval alpha(const Rational& p, mpfr_prec_t prec) {
  require_probability(p);
  if (p >= make_rational(2, 3)) throw DomainError("alpha needs p < 2/3");
  return merge_routes(alpha_closed_form(Interval::from_rational(p, prec)), alpha_cubic(p, prec), "alpha");
}

Interval p0_surd(int t, mpfr_prec_t prec) {
  if (t < 1) throw DomainError("t must be at least 1");
  const Interval root = sqrt(Interval::from_int(4L * t + 9, prec));
  return 2 / (root - 1);
}

Interval p0_quadratic(int t, mpfr_prec_t prec) {
  if (t < 1) throw DomainError("t must be at least 1");
  const Rational a = t + 2;
  auto q_sign = [&](const Rational& x) { return sign(a * x * x - x - 1); };
  const Interval ai = Interval::from_int(t + 2, prec);
  auto f = [&](const Interval& x) { return ai * pow(x, 2) - x - 1; };
  auto df = [&](const Interval& x) { return 2 * (ai * x) - 1; };
  return newton_root(Rational(0), Rational(1), q_sign, true, f, df, prec);
}

Interval p0(int t, mpfr_prec_t prec) {
  const Interval both = merge_routes(p0_surd(t, prec), p0_quadratic(t, prec), "p0");
  if (auto exact = p0_exact(t)) {
    if (!both.contains(*exact)) throw std::logic_error("exact p0 outside its enclosure");
    return Interval::from_rational(*exact, prec);
  }
  return both;
}

std::optional<Rational> p0_exact(int t) {
  if (t < 1) throw DomainError("t must be at least 1");
  const BigInt disc = 4L * t + 9;
  if (!mpz_perfect_square_p(disc.get_mpz_t())) return std::nullopt;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  Rational out(BigInt(1 + root), BigInt(2 * (t + 2)));
  out.canonicalize();
  return out;
}

int compare_with_p0(const Rational& p, int t) {
  require_probability(p);
  if (t < 1) throw DomainError("t must be at least 1");
  return sign(Rational(t + 2) * p * p - p - 1);
}

namespace {

Rational p0_bracket(int t, int bits, bool below) {
  if (auto exact = p0_exact(t)) return *exact;
  Rational lo = 0, hi = 1;
  const Rational width(BigInt(1), BigInt(1) << static_cast<mp_bitcnt_t>(bits));
  while (hi - lo >= width) {
    const Rational mid = (lo + hi) / 2;
    if (compare_with_p0(mid, t) < 0) lo = mid;
    else hi = mid;
  }
  return below ? lo : hi;
}

}  // namespace

Rational p0_bracket_below(int t, int bits) { return p0_bracket(t, bits, true); }
Rational p0_bracket_above(int t, int bits) { return p0_bracket(t, bits, false); }

Interval beta(int t, mpfr_prec_t prec) {
  const Interval p = p0(t, prec);
  return log(p) + (t + 1) * pow(p, 2);
}

Rational t0(const Rational& p) {
  require_probability(p);
  return (1 - p) * (1 + 2 * p) / (p * p);
}

Rational frontier_gap(int t, const Rational& p) {
  require_probability(p);
  if (t < 1) throw DomainError("t must be at least 1");
  return pow(p, static_cast<unsigned long>(t)) * (1 - p) * (1 + p - Rational(t + 2) * p * p);
}

Interval frontier_gap(int t, const Interval& p) {
  if (t < 1) throw DomainError("t must be at least 1");
  return pow(p, static_cast<unsigned long>(t)) * (1 - p) * (1 + p - (t + 2) * pow(p, 2));
}

ThresholdParams threshold_params(int t, mpfr_prec_t prec) {
  const Interval p = p0(t, prec);
  return ThresholdParams{t, p, beta(t, prec), (1 - p) * (1 + 2 * p) / pow(p, 2), p0_exact(t)};
}

}  // namespace triwise
