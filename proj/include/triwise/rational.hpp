#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace triwise {

/// Exact rational number in reduced form with positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "num/den" or a plain integer. Decimal and exponent notation are
/// rejected: probabilities cross the API boundary as exact rationals only.
Rational parse_rational(std::string_view text);

/// num/den in canonical form; the two-argument mpq_class constructor does
/// not reduce. Throws DomainError when den is 0.
Rational make_rational(const BigInt& num, const BigInt& den);

std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

Rational pow(const Rational& base, unsigned long exponent);
BigInt binomial(unsigned long n, unsigned long k);

/// Throws DomainError unless 0 < p < 1.
void require_probability(const Rational& p, std::string_view what = "p");

}  // namespace triwise
