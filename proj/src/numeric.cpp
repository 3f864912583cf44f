#include "frieze/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frieze {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInt pow_ui(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigInt pow2(unsigned long exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
  return r;
}

BigInt pow2_floor(const Rational& x) {
  if (x < 0) throw std::invalid_argument("pow2_floor: negative exponent");
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  if (!num.fits_ulong_p() || !den.fits_ulong_p()) {
    throw std::overflow_error("pow2_floor: exponent too large");
  }
  BigInt power = pow2(num.get_ui());
  return floor_root(power, den.get_ui());
}

bool leq_pow2(const BigInt& v, const Rational& x) {
  if (v <= 0) return true;
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  if (!num.fits_ulong_p() || !den.fits_ulong_p()) {
    throw std::overflow_error("leq_pow2: exponent too large");
  }
  return pow_ui(v, den.get_ui()) <= pow2(num.get_ui());
}

std::optional<BigInt> exact_root(const BigInt& v, unsigned long k) {
  if (v < 0 || k == 0) return std::nullopt;
  if (k == 1) return v;
  BigInt r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

BigInt floor_root(const BigInt& v, unsigned long k) {
  if (v < 0 || k == 0) throw std::invalid_argument("floor_root: bad arguments");
  BigInt r;
  mpz_root(r.get_mpz_t(), v.get_mpz_t(), k);
  return r;
}

double log2(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log2 of a nonpositive integer");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

double log2(const Rational& q) { return log2(q.get_num()) - log2(q.get_den()); }

namespace {

constexpr unsigned long kTrialLimit = 1u << 12;

bool is_probable_prime(const BigInt& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite n.
BigInt pollard_brent(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, g = 1, q = 1, ys, t;
    unsigned long r = 1;
    constexpr unsigned long m = 64;
    auto step = [&](BigInt& z) {
      z = z * z + c;
      z %= n;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          t = abs(x - y);
          q = (q * t) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        t = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const BigInt& n, std::vector<BigInt>& primes) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    primes.push_back(n);
    return;
  }
  BigInt f = pollard_brent(n);
  split(f, primes);
  split(n / f, primes);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& v) {
  if (v < 1) throw std::domain_error("factorize: argument must be positive");
  std::vector<BigInt> primes;
  BigInt n = v;
  for (unsigned long p = 2; p < kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  if (n > 1) split(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<BigInt, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1u);
    }
  }
  return out;
}

std::vector<BigInt> divisors(const BigInt& v) {
  std::vector<BigInt> out{BigInt(1)};
  for (const auto& [p, mult] : factorize(v)) {
    const std::size_t base = out.size();
    BigInt pk = 1;
    for (unsigned e = 1; e <= mult; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigInt> divisors_up_to(const BigInt& v, const BigInt& limit) {
  auto all = divisors(v);
  auto end = std::upper_bound(all.begin(), all.end(), limit);
  all.erase(end, all.end());
  return all;
}

}  // namespace frieze
