#include "zgu/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace zgu {

namespace {

// Exact division of integer polynomials (ascending coefficients); the
// divisor must be monic and divide exactly.
std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  const long dn = static_cast<long>(num.size()) - 1;
  const long dd = static_cast<long>(den.size()) - 1;
  std::vector<Integer> quot(dn - dd + 1, Integer(0));
  for (long k = dn - dd; k >= 0; --k) {
    Integer c = num[k + dd];  // den is monic
    quot[k] = c;
    if (c == 0) continue;
    for (long j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  for (const auto& c : num)
    if (c != 0) throw Error("internal: inexact polynomial division");
  return quot;
}

struct ConductorData {
  std::vector<Integer> phi_poly;                // Phi_n, ascending
  std::vector<std::vector<Integer>> power;      // zeta_n^k mod Phi_n, k = 0..n-1
};

const ConductorData& conductor_data(long n);

std::vector<Integer> compute_phi_poly(long n) {
  if (n == 1) return {Integer(-1), Integer(1)};
  // x^n - 1
  std::vector<Integer> num(n + 1, Integer(0));
  num[0] = -1;
  num[n] = 1;
  for (long d : divisors_of(n)) {
    if (d == n) continue;
    num = divide_exact(num, conductor_data(d).phi_poly);
  }
  return num;
}

ConductorData compute_conductor_data(long n) {
  ConductorData data;
  data.phi_poly = compute_phi_poly(n);
  const long deg = static_cast<long>(data.phi_poly.size()) - 1;
  data.power.resize(n);
  data.power[0].assign(deg, Integer(0));
  data.power[0][0] = 1;
  for (long k = 1; k < n; ++k) {
    // multiply the previous power by x, then reduce x^deg = -(lower part of Phi_n)
    const auto& prev = data.power[k - 1];
    std::vector<Integer> cur(deg, Integer(0));
    for (long j = 0; j + 1 < deg; ++j) cur[j + 1] = prev[j];
    const Integer& lead = prev[deg - 1];
    if (lead != 0)
      for (long j = 0; j < deg; ++j) cur[j] -= lead * data.phi_poly[j];
    data.power[k] = std::move(cur);
  }
  return data;
}

const ConductorData& conductor_data(long n) {
  static std::mutex mu;
  static std::map<long, ConductorData> cache;
  {
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  ConductorData data = compute_conductor_data(n);
  std::scoped_lock lock(mu);
  return cache.try_emplace(n, std::move(data)).first->second;
}

std::vector<long> units_mod(long n) {
  if (n == 1) return {0};
  std::vector<long> us;
  for (long i = 1; i < n; ++i)
    if (std::gcd(i, n) == 1) us.push_back(i);
  return us;
}

}  // namespace

Cyclotomic::Cyclotomic(long conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (conductor_ < 1) throw Error("conductor must be positive");
  if (static_cast<long>(coeffs_.size()) != euler_phi(conductor_))
    throw DimensionMismatchError("coefficient vector length must be phi(conductor)");
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw NotInSubfieldError("value is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j] = -coeffs_[j];
  return Cyclotomic(conductor_, std::move(c));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() == b.conductor()) return a.coeffs() == b.coeffs();
  long m = std::lcm(a.conductor(), b.conductor());
  return lift_conductor(a, m).coeffs() == lift_conductor(b, m).coeffs();
}

namespace {

template <class Op>
Cyclotomic pointwise(const Cyclotomic& a, const Cyclotomic& b, Op op) {
  if (a.conductor() != b.conductor()) {
    long m = std::lcm(a.conductor(), b.conductor());
    return pointwise(lift_conductor(a, m), lift_conductor(b, m), op);
  }
  std::vector<Rational> c(a.coeffs().size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = op(a.coeffs()[j], b.coeffs()[j]);
  return Cyclotomic(a.conductor(), std::move(c));
}

}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) {
    long m = std::lcm(a.conductor(), b.conductor());
    return lift_conductor(a, m) * lift_conductor(b, m);
  }
  const long n = a.conductor();
  const auto& data = conductor_data(n);
  const long deg = static_cast<long>(a.coeffs().size());
  std::vector<Rational> conv(2 * deg - 1, Rational(0));
  for (long i = 0; i < deg; ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (long j = 0; j < deg; ++j) {
      if (b.coeffs()[j] == 0) continue;
      conv[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  std::vector<Rational> out(deg, Rational(0));
  for (long e = 0; e < static_cast<long>(conv.size()); ++e) {
    if (conv[e] == 0) continue;
    if (e < deg) {
      out[e] += conv[e];
    } else {
      const auto& rep = data.power[e % n];
      for (long j = 0; j < deg; ++j)
        if (rep[j] != 0) out[j] += conv[e] * rep[j];
    }
  }
  return Cyclotomic(n, std::move(out));
}

Cyclotomic operator*(const Rational& s, const Cyclotomic& x) {
  std::vector<Rational> c(x.coeffs().size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = s * x.coeffs()[j];
  return Cyclotomic(x.conductor(), std::move(c));
}

std::vector<Integer> cyclotomic_polynomial(long n) {
  if (n < 1) throw Error("cyclotomic_polynomial requires n >= 1");
  return conductor_data(n).phi_poly;
}

Cyclotomic root_power(long n, long k) {
  if (n < 1) throw Error("root_power requires n >= 1");
  const auto& rep = conductor_data(n).power[mod_positive(k, n)];
  std::vector<Rational> c(rep.size());
  for (std::size_t j = 0; j < rep.size(); ++j) c[j] = Rational(rep[j]);
  return Cyclotomic(n, std::move(c));
}

Cyclotomic galois(const Cyclotomic& x, long i) {
  const long n = x.conductor();
  const long im = mod_positive(i, n);
  if (std::gcd(im == 0 ? n : im, n) != 1 && n > 1)
    throw NotCoprimeError("galois exponent " + std::to_string(i) + " not coprime to conductor " +
                          std::to_string(n));
  const auto& data = conductor_data(n);
  const long deg = static_cast<long>(x.coeffs().size());
  std::vector<Rational> out(deg, Rational(0));
  for (long j = 0; j < deg; ++j) {
    if (x.coeffs()[j] == 0) continue;
    const auto& rep = data.power[(im * j) % n];
    for (long t = 0; t < deg; ++t)
      if (rep[t] != 0) out[t] += x.coeffs()[j] * rep[t];
  }
  return Cyclotomic(n, std::move(out));
}

Cyclotomic conjugate(const Cyclotomic& x) {
  if (x.conductor() <= 2) return x;
  return galois(x, x.conductor() - 1);
}

Rational trace_to_rationals(const Cyclotomic& x) {
  Cyclotomic sum(x.conductor(), std::vector<Rational>(x.coeffs().size(), Rational(0)));
  for (long i : units_mod(x.conductor())) sum = sum + galois(x, i);
  return sum.rational_value();
}

Cyclotomic restrict_conductor(const Cyclotomic& x, long m) {
  const long n = x.conductor();
  if (m < 1 || n % m != 0) throw Error("restrict_conductor target must divide the conductor");
  if (m == n) return x;
  // Solve sum_j a_j * zeta_n^{j*(n/m)} = x for a_0..a_{phi(m)-1} by Gaussian
  // elimination; inconsistency means x is outside Q(zeta_m).
  const auto& data = conductor_data(n);
  const long rows = static_cast<long>(x.coeffs().size());
  const long cols = euler_phi(m);
  const long step = n / m;
  std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1, Rational(0)));
  for (long j = 0; j < cols; ++j) {
    const auto& rep = data.power[(j * step) % n];
    for (long r = 0; r < rows; ++r) aug[r][j] = Rational(rep[r]);
  }
  for (long r = 0; r < rows; ++r) aug[r][cols] = x.coeffs()[r];

  std::vector<long> pivot_col_of_row;
  long row = 0;
  for (long col = 0; col < cols && row < rows; ++col) {
    long sel = -1;
    for (long r = row; r < rows; ++r)
      if (aug[r][col] != 0) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(aug[sel], aug[row]);
    const Rational inv = 1 / aug[row][col];
    for (long c = col; c <= cols; ++c) aug[row][c] *= inv;
    for (long r = 0; r < rows; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      const Rational f = aug[r][col];
      for (long c = col; c <= cols; ++c) aug[r][c] -= f * aug[row][c];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (long r = row; r < rows; ++r)
    if (aug[r][cols] != 0)
      throw NotInSubfieldError("value does not lie in Q(zeta_" + std::to_string(m) + ")");
  std::vector<Rational> out(cols, Rational(0));
  for (long r = 0; r < row; ++r) out[pivot_col_of_row[r]] = aug[r][cols];
  return Cyclotomic(m, std::move(out));
}

Cyclotomic lift_conductor(const Cyclotomic& x, long m) {
  const long n = x.conductor();
  if (m < 1 || m % n != 0) throw Error("lift_conductor target must be a conductor multiple");
  if (m == n) return x;
  const auto& data = conductor_data(m);
  const long deg = euler_phi(m);
  const long step = m / n;
  std::vector<Rational> out(deg, Rational(0));
  for (long j = 0; j < static_cast<long>(x.coeffs().size()); ++j) {
    if (x.coeffs()[j] == 0) continue;
    const auto& rep = data.power[(j * step) % m];
    for (long t = 0; t < deg; ++t)
      if (rep[t] != 0) out[t] += x.coeffs()[j] * rep[t];
  }
  return Cyclotomic(m, std::move(out));
}

Cyclotomic value_at_conductor(const Cyclotomic& x, long m) {
  if (x.conductor() == m) return x;
  if (m % x.conductor() == 0) return lift_conductor(x, m);
  long common = std::lcm(x.conductor(), m);
  return restrict_conductor(lift_conductor(x, common), m);
}

std::string to_string(const Cyclotomic& x) {
  if (x.is_rational()) return to_string(x.coeffs()[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
    const Rational& c = x.coeffs()[j];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "");
    if (j == 0) {
      os << c.get_str();
    } else {
      if (c == -1) os << "-";
      else if (c != 1) os << c.get_str() << "*";
      os << "z" << x.conductor();
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << to_string(x); }

}  // namespace zgu
