#include "orbikit/cyclotomic.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace orbikit {

namespace {

std::atomic<long> g_max_conductor{10000};

// Exact division of integer polynomials, remainder must vanish.
std::vector<Integer> poly_divexact(std::vector<Integer> num, const std::vector<Integer>& den) {
  std::vector<Integer> quot(num.size() - den.size() + 1, Integer(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer q = num[k + den.size() - 1] / den.back();
    quot[k] = q;
    if (q != 0) {
      for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= q * den[j];
    }
  }
  for (const auto& c : num)
    if (c != 0) throw domain_error("cyclotomic polynomial division left a remainder");
  return quot;
}

// Phi_n(x) = (x^n - 1) / prod_{d | n, d < n} Phi_d(x).  Caller holds the lock.
const std::vector<Integer>& phi_poly_locked(long n, std::map<long, std::vector<Integer>>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Integer> result(static_cast<std::size_t>(n) + 1, Integer(0));
  result[0] = -1;
  result[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    result = poly_divexact(std::move(result), phi_poly_locked(d, cache));
  }
  return cache.emplace(n, std::move(result)).first->second;
}

// Coefficients of x at conductor n (a multiple of x's conductor), not reduced.
std::vector<Rational> lift_coeffs(const Cyclotomic& x, long n) {
  const long stride = n / x.conductor();
  const auto& c = x.coeffs();
  std::vector<Rational> lifted((c.size() - 1) * static_cast<std::size_t>(stride) + 1,
                               Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) lifted[i * static_cast<std::size_t>(stride)] = c[i];
  return lifted;
}

long lcm_conductor(long a, long b) {
  long g = std::gcd(a, b);
  long l = a / g * b;
  if (l > max_conductor())
    throw resource_error("lcm conductor " + std::to_string(l) + " exceeds cap " +
                         std::to_string(max_conductor()));
  return l;
}

}  // namespace

long max_conductor() { return g_max_conductor.load(); }

void set_max_conductor(long cap) {
  if (cap < 1) throw input_error("conductor cap must be positive");
  g_max_conductor.store(cap);
}

long euler_phi(long n) {
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

const std::vector<Integer>& cyclotomic_polynomial(long n) {
  if (n < 1) throw input_error("cyclotomic polynomial index must be positive");
  static std::mutex mu;
  static std::map<long, std::vector<Integer>> cache;
  std::lock_guard<std::mutex> lock(mu);
  return phi_poly_locked(n, cache);
}

void Cyclotomic::contract_if_rational() {
  if (conductor_ == 1) return;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return;
  coeffs_.resize(1);
  conductor_ = 1;
}

Cyclotomic Cyclotomic::from_coeffs(long conductor, std::vector<Rational> coeffs) {
  if (conductor < 1) throw input_error("conductor must be positive");
  if (conductor > max_conductor())
    throw resource_error("conductor " + std::to_string(conductor) + " exceeds cap " +
                         std::to_string(max_conductor()));
  const auto& phi_poly = cyclotomic_polynomial(conductor);
  const std::size_t deg = phi_poly.size() - 1;  // phi(conductor)
  for (std::size_t k = coeffs.size(); k-- > deg;) {
    Rational lead = coeffs[k];
    if (lead != 0) {
      coeffs[k] = 0;
      for (std::size_t j = 0; j < deg; ++j) {
        coeffs[k - deg + j] -= lead * Rational(phi_poly[j]);
        coeffs[k - deg + j].canonicalize();
      }
    }
  }
  coeffs.resize(deg, Rational(0));
  for (auto& c : coeffs) c.canonicalize();
  Cyclotomic result(conductor, std::move(coeffs));
  result.contract_if_rational();
  return result;
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n < 1) throw input_error("root of unity order must be positive");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1, Rational(0));
  coeffs[static_cast<std::size_t>(k)] = 1;
  return from_coeffs(n, std::move(coeffs));
}

Cyclotomic Cyclotomic::from_turn(const Rational& t) {
  Rational r = rat_mod1(t);
  if (!r.get_den().fits_slong_p()) throw resource_error("turn denominator too large");
  return root_of_unity(r.get_den().get_si(), r.get_num().get_si());
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_integer() const { return is_rational() && rat_is_integer(coeffs_[0]); }

Cyclotomic Cyclotomic::promoted(long n) const {
  if (n == conductor_) return *this;
  if (n < 1 || n % conductor_ != 0)
    throw input_error("promotion target is not a conductor multiple");
  return from_coeffs(n, lift_coeffs(*this, n));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long n = lcm_conductor(conductor_, o.conductor_);
  std::vector<Rational> sum = lift_coeffs(*this, n);
  std::vector<Rational> rhs = lift_coeffs(o, n);
  if (sum.size() < rhs.size()) sum.resize(rhs.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    sum[i] += rhs[i];
    sum[i].canonicalize();
  }
  return from_coeffs(n, std::move(sum));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> neg = coeffs_;
  for (auto& c : neg) c = -c;
  return Cyclotomic(conductor_, std::move(neg));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  long n = lcm_conductor(conductor_, o.conductor_);
  std::vector<Rational> a = lift_coeffs(*this, n);
  std::vector<Rational> b = lift_coeffs(o, n);
  std::vector<Rational> prod(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  return from_coeffs(n, std::move(prod));
}

Cyclotomic Cyclotomic::conj() const {
  if (conductor_ == 1) return *this;
  // substitute zeta^{n-1} for zeta
  std::vector<Rational> image(
      (coeffs_.size() - 1) * static_cast<std::size_t>(conductor_ - 1) + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    image[i * static_cast<std::size_t>(conductor_ - 1)] += coeffs_[i];
  }
  return from_coeffs(conductor_, std::move(image));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
  long n = lcm_conductor(conductor_, o.conductor_);
  Cyclotomic a = from_coeffs(n, lift_coeffs(*this, n));
  Cyclotomic b = from_coeffs(n, lift_coeffs(o, n));
  return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  const double tau = 2.0 * M_PI / static_cast<double>(conductor_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    acc += coeffs_[i].get_d() * std::complex<double>(std::cos(tau * static_cast<double>(i)),
                                                     std::sin(tau * static_cast<double>(i)));
  }
  return acc;
}

}  // namespace orbikit
