#pragma once

// Exact integer and rational helpers shared by every module.
//
// Integers are GMP mpz values and rationals are GMP mpq values kept in
// canonical form (reduced, positive denominator).

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace frieze {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& v);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

/// Always "num/den", including "n/1". Used by the JSON schema.
std::string to_fraction_string(const Rational& q);

BigInt pow_ui(const BigInt& base, unsigned long exponent);

/// 2^e for a nonnegative machine exponent.
BigInt pow2(unsigned long exponent);

/// floor(2^x) for a rational x >= 0, computed exactly as floor((2^num)^(1/den)).
BigInt pow2_floor(const Rational& x);

/// True iff v <= 2^x, decided exactly by v^den <= 2^num (x >= 0, v >= 0).
bool leq_pow2(const BigInt& v, const Rational& x);

/// The exact k-th root of v when v is a perfect k-th power.
std::optional<BigInt> exact_root(const BigInt& v, unsigned long k);

/// floor(v^(1/k)) for v >= 0.
BigInt floor_root(const BigInt& v, unsigned long k);

/// log2(v) for v >= 1, accurate to double precision even for huge v.
double log2(const BigInt& v);
double log2(const Rational& q);

/// Prime factorization as (prime, multiplicity), primes ascending. v >= 1.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& v);

/// All positive divisors of v >= 1 in ascending order.
std::vector<BigInt> divisors(const BigInt& v);

/// Divisors of v that do not exceed limit, ascending.
std::vector<BigInt> divisors_up_to(const BigInt& v, const BigInt& limit);

}  // namespace frieze
