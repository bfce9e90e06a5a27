#pragma once

#include <iosfwd>
#include <vector>

#include "zgu/numeric.hpp"

namespace zgu {

/// Exact element of the cyclotomic field Q(zeta_n), stored on the power basis
/// 1, zeta_n, ..., zeta_n^{phi(n)-1} of Q[x]/Phi_n(x). Values are immutable
/// and canonical: two elements with the same conductor are equal iff their
/// coefficient vectors are equal.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& r) : conductor_(1), coeffs_(1, r) {}
  explicit Cyclotomic(long value) : conductor_(1), coeffs_(1, Rational(value)) {}
  Cyclotomic(long conductor, std::vector<Rational> coeffs);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Coefficient-0 value; throws NotInSubfieldError unless is_rational().
  Rational rational_value() const;

  Cyclotomic operator-() const;

 private:
  long conductor_;
  std::vector<Rational> coeffs_;  // length euler_phi(conductor_)
};

bool operator==(const Cyclotomic& a, const Cyclotomic& b);
inline bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic operator*(const Rational& s, const Cyclotomic& x);

/// Coefficients of Phi_n, ascending degree, monic of degree phi(n).
/// Computed by exact division of x^n - 1 by the proper-divisor factors;
/// memoized for the lifetime of the process (thread safe).
std::vector<Integer> cyclotomic_polynomial(long n);

/// zeta_n^{k mod n} reduced modulo Phi_n at conductor n.
Cyclotomic root_power(long n, long k);

/// Image under the automorphism zeta_n -> zeta_n^i; requires gcd(i, n) = 1.
Cyclotomic galois(const Cyclotomic& x, long i);

/// galois(x, -1); the identity for conductor <= 2.
Cyclotomic conjugate(const Cyclotomic& x);

/// Trace to Q: the sum of all Galois conjugates. Equals phi(n) * x for
/// rational x.
Rational trace_to_rationals(const Cyclotomic& x);

/// Re-express x at conductor m (m must divide the conductor); throws
/// NotInSubfieldError when x does not lie in Q(zeta_m).
Cyclotomic restrict_conductor(const Cyclotomic& x, long m);

/// Represent x at the larger conductor m (the conductor of x must divide m).
Cyclotomic lift_conductor(const Cyclotomic& x, long m);

/// x re-expressed at an arbitrary compatible conductor: lifts to
/// lcm(conductor, m), then restricts. Throws NotInSubfieldError when
/// x is not in Q(zeta_m).
Cyclotomic value_at_conductor(const Cyclotomic& x, long m);

std::string to_string(const Cyclotomic& x);
std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

}  // namespace zgu
