#include "triwise/interval.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <memory>

#include "triwise/error.hpp"

namespace triwise {

// --- BigFloat ----------------------------------------------------------------

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Steal the limbs and leave `other` as an unowned shell.
  value_[0] = other.value_[0];
  other.owned_ = false;
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) {
    if (!other.owned_) return *this;
    if (owned_) mpfr_swap(value_, other.value_);
    else {
      value_[0] = other.value_[0];
      owned_ = true;
      other.owned_ = false;
    }
  }
  return *this;
}

BigFloat::~BigFloat() {
  if (owned_) mpfr_clear(value_);
}

// --- Interval ------------------------------------------------------------------

namespace {

mpfr_prec_t joint(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

Rational to_rational(mpfr_srcptr x) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

std::string format(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*R*g", digits, rnd, x);
  std::string out = raw ? raw : "";
  mpfr_free_str(raw);
  return out;
}

}  // namespace

Interval::Interval(mpfr_prec_t prec) : prec_(prec), lo_(prec), hi_(prec) {}

Interval Interval::from_int(long value, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_.get(), value, MPFR_RNDD);
  mpfr_set_si(r.hi_.get(), value, MPFR_RNDU);
  return r;
}

Interval Interval::from_rational(const Rational& value, mpfr_prec_t prec) {
  return from_bounds(value, value, prec);
}

Interval Interval::from_bounds(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
  if (lo > hi) throw DomainError("interval bounds out of order");
  Interval r(prec);
  mpfr_set_q(r.lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_min(r.lo_.get(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.hi_.get(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Rational Interval::lower() const { return to_rational(lo()); }
Rational Interval::upper() const { return to_rational(hi()); }
Rational Interval::width() const { return upper() - lower(); }
double Interval::lower_double() const { return mpfr_get_d(lo(), MPFR_RNDD); }
double Interval::upper_double() const { return mpfr_get_d(hi(), MPFR_RNDU); }

bool Interval::certainly_positive() const { return mpfr_sgn(lo()) > 0; }
bool Interval::certainly_negative() const { return mpfr_sgn(hi()) < 0; }
bool Interval::contains_zero() const { return mpfr_sgn(lo()) <= 0 && mpfr_sgn(hi()) >= 0; }

bool Interval::contains(const Rational& x) const {
  return mpfr_cmp_q(lo(), x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi(), x.get_mpq_t()) >= 0;
}

bool Interval::certainly_less(const Interval& other) const { return mpfr_less_p(hi(), other.lo()) != 0; }

bool Interval::overlaps(const Interval& other) const {
  return mpfr_lessequal_p(lo(), other.hi()) && mpfr_lessequal_p(other.lo(), hi());
}

std::string Interval::lower_string(int digits) const { return format(lo(), digits, MPFR_RNDD); }
std::string Interval::upper_string(int digits) const { return format(hi(), digits, MPFR_RNDU); }
std::string Interval::to_string(int digits) const {
  return "[" + lower_string(digits) + ", " + upper_string(digits) + "]";
}

Interval Interval::operator-() const {
  Interval r(prec_);
  mpfr_neg(r.lo_.get(), hi(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo(), MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_add(r.lo_.get(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_sub(r.lo_.get(), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), a.hi(), b.lo(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = joint(a, b);
  Interval r(prec);
  BigFloat tmp(prec);
  const std::array<std::pair<mpfr_srcptr, mpfr_srcptr>, 4> corners{
      {{a.lo(), b.lo()}, {a.lo(), b.hi()}, {a.hi(), b.lo()}, {a.hi(), b.hi()}}};
  bool first = true;
  for (const auto& [x, y] : corners) {
    mpfr_mul(tmp.get(), x, y, MPFR_RNDD);
    if (first || mpfr_less_p(tmp.get(), r.lo_.get())) mpfr_set(r.lo_.get(), tmp.get(), MPFR_RNDD);
    mpfr_mul(tmp.get(), x, y, MPFR_RNDU);
    if (first || mpfr_greater_p(tmp.get(), r.hi_.get())) mpfr_set(r.hi_.get(), tmp.get(), MPFR_RNDU);
    first = false;
  }
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  const mpfr_prec_t prec = joint(a, b);
  Interval r(prec);
  BigFloat tmp(prec);
  const std::array<std::pair<mpfr_srcptr, mpfr_srcptr>, 4> corners{
      {{a.lo(), b.lo()}, {a.lo(), b.hi()}, {a.hi(), b.lo()}, {a.hi(), b.hi()}}};
  bool first = true;
  for (const auto& [x, y] : corners) {
    mpfr_div(tmp.get(), x, y, MPFR_RNDD);
    if (first || mpfr_less_p(tmp.get(), r.lo_.get())) mpfr_set(r.lo_.get(), tmp.get(), MPFR_RNDD);
    mpfr_div(tmp.get(), x, y, MPFR_RNDU);
    if (first || mpfr_greater_p(tmp.get(), r.hi_.get())) mpfr_set(r.hi_.get(), tmp.get(), MPFR_RNDU);
    first = false;
  }
  return r;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.hi()) < 0) throw DomainError("square root of a negative interval");
  Interval r(x.prec_);
  if (mpfr_sgn(x.lo()) <= 0) mpfr_set_zero(r.lo_.get(), 1);
  else mpfr_sqrt(r.lo_.get(), x.lo(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.get(), x.hi(), MPFR_RNDU);
  return r;
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo()) <= 0) throw DomainError("logarithm of an interval reaching zero");
  Interval r(x.prec_);
  mpfr_log(r.lo_.get(), x.lo(), MPFR_RNDD);
  mpfr_log(r.hi_.get(), x.hi(), MPFR_RNDU);
  return r;
}

Interval pow(const Interval& x, unsigned long k) {
  Interval r(x.prec_);
  if (k == 0) return Interval::from_int(1, x.prec_);
  const bool even = (k % 2) == 0;
  if (mpfr_sgn(x.lo()) >= 0 || !even) {
    // Monotone increasing on the whole interval.
    mpfr_pow_ui(r.lo_.get(), x.lo(), k, MPFR_RNDD);
    mpfr_pow_ui(r.hi_.get(), x.hi(), k, MPFR_RNDU);
  } else if (mpfr_sgn(x.hi()) <= 0) {
    mpfr_pow_ui(r.lo_.get(), x.hi(), k, MPFR_RNDD);
    mpfr_pow_ui(r.hi_.get(), x.lo(), k, MPFR_RNDU);
  } else {
    BigFloat a(x.prec_), b(x.prec_);
    mpfr_pow_ui(a.get(), x.lo(), k, MPFR_RNDU);
    mpfr_pow_ui(b.get(), x.hi(), k, MPFR_RNDU);
    mpfr_set_zero(r.lo_.get(), 1);
    mpfr_max(r.hi_.get(), a.get(), b.get(), MPFR_RNDU);
  }
  return r;
}

Interval min(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_min(r.lo_.get(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(r.hi_.get(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_max(r.lo_.get(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.hi_.get(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  if (!a.overlaps(b)) return std::nullopt;
  Interval r(joint(a, b));
  mpfr_max(r.lo_.get(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(r.hi_.get(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, long b) { return a + Interval::from_int(b, a.precision()); }
Interval operator+(long a, const Interval& b) { return Interval::from_int(a, b.precision()) + b; }
Interval operator-(const Interval& a, long b) { return a - Interval::from_int(b, a.precision()); }
Interval operator-(long a, const Interval& b) { return Interval::from_int(a, b.precision()) - b; }
Interval operator*(long a, const Interval& b) { return Interval::from_int(a, b.precision()) * b; }
Interval operator*(const Interval& a, long b) { return a * Interval::from_int(b, a.precision()); }
Interval operator/(const Interval& a, long b) { return a / Interval::from_int(b, a.precision()); }
Interval operator/(long a, const Interval& b) { return Interval::from_int(a, b.precision()) / b; }

}  // namespace triwise
