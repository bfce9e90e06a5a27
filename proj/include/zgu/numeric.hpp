#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "zgu/errors.hpp"

namespace zgu {

// Exact scalars. Rational values are kept canonical (lowest terms, positive
// denominator); every constructor below canonicalizes.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational parse_rational(const std::string& s) {
  try {
    Rational r(s, 10);
    if (r.get_den() == 0) throw ParseError("rational with zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: '" + s + "'");
  }
}

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

inline std::string to_string(const Rational& x) { return x.get_str(); }
inline std::string to_string(const Integer& x) { return x.get_str(); }

// Floor/ceil quotients with GMP semantics (round toward -inf / +inf).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer lcm_integer(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer floor_rational(const Rational& x) { return floor_div(x.get_num(), x.get_den()); }
inline Integer ceil_rational(const Rational& x) { return ceil_div(x.get_num(), x.get_den()); }

inline long euler_phi(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

inline std::vector<long> divisors_of(long n) {
  std::vector<long> ds;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

inline std::vector<long> prime_divisors(long n) {
  std::vector<long> ps;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      ps.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) ps.push_back(m);
  return ps;
}

inline long mod_positive(long k, long n) {
  long r = k % n;
  return r < 0 ? r + n : r;
}

}  // namespace zgu
