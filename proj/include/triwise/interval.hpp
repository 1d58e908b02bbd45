#pragma once

#include <mpfr.h>

#include <optional>
#include <string>

#include "triwise/rational.hpp"

namespace triwise {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;
inline constexpr mpfr_prec_t kDefaultPrecisionCap = 4096;

/// RAII owner of one MPFR number.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = kDefaultPrecision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  [[nodiscard]] mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

 private:
  mpfr_t value_;
  bool owned_ = true;
};

/// A closed interval [lo, hi] with binary floating-point endpoints.
///
/// Every operation rounds the lower endpoint toward -inf and the upper one
/// toward +inf, so the result encloses the exact result for every choice of
/// arguments inside the operand intervals. The working precision of a result
/// is the larger operand precision.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = kDefaultPrecision);

  static Interval from_int(long value, mpfr_prec_t prec = kDefaultPrecision);
  static Interval from_rational(const Rational& value, mpfr_prec_t prec = kDefaultPrecision);
  /// [lo, hi] with lo <= hi, each rounded outward.
  static Interval from_bounds(const Rational& lo, const Rational& hi, mpfr_prec_t prec = kDefaultPrecision);
  static Interval hull(const Interval& a, const Interval& b);

  [[nodiscard]] mpfr_prec_t precision() const noexcept { return prec_; }
  [[nodiscard]] mpfr_srcptr lo() const noexcept { return lo_.get(); }
  [[nodiscard]] mpfr_srcptr hi() const noexcept { return hi_.get(); }
  /// Exact dyadic endpoints.
  [[nodiscard]] Rational lower() const;
  [[nodiscard]] Rational upper() const;
  [[nodiscard]] Rational width() const;
  [[nodiscard]] double lower_double() const;
  [[nodiscard]] double upper_double() const;

  [[nodiscard]] bool certainly_positive() const;
  [[nodiscard]] bool certainly_negative() const;
  [[nodiscard]] bool contains_zero() const;
  [[nodiscard]] bool contains(const Rational& x) const;
  [[nodiscard]] bool certainly_less(const Interval& other) const;
  [[nodiscard]] bool overlaps(const Interval& other) const;

  /// "[lo, hi]" with `digits` significant decimal digits, rounded outward.
  [[nodiscard]] std::string to_string(int digits = 20) const;
  [[nodiscard]] std::string lower_string(int digits = 20) const;
  [[nodiscard]] std::string upper_string(int digits = 20) const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  friend Interval sqrt(const Interval& x);
  friend Interval log(const Interval& x);
  friend Interval pow(const Interval& x, unsigned long k);
  friend Interval min(const Interval& a, const Interval& b);
  friend Interval max(const Interval& a, const Interval& b);
  friend std::optional<Interval> intersect(const Interval& a, const Interval& b);

 private:
  mpfr_prec_t prec_;
  BigFloat lo_;
  BigFloat hi_;
};

Interval operator+(const Interval& a, long b);
Interval operator+(long a, const Interval& b);
Interval operator-(const Interval& a, long b);
Interval operator-(long a, const Interval& b);
Interval operator*(long a, const Interval& b);
Interval operator*(const Interval& a, long b);
Interval operator/(const Interval& a, long b);
Interval operator/(long a, const Interval& b);

}  // namespace triwise
