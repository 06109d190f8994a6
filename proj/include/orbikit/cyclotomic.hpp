#ifndef ORBIKIT_CYCLOTOMIC_HPP
#define ORBIKIT_CYCLOTOMIC_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "orbikit/rational.hpp"

namespace orbikit {

// Conductor cap guarding against accidental blowup in lcm promotion.
// Default 10^4; the CLI honours ORBK_MAX_CONDUCTOR.
long max_conductor();
void set_max_conductor(long cap);

// The n-th cyclotomic polynomial as its integer coefficient vector,
// index = degree, length phi(n)+1, monic.  Memoised, thread-safe.
const std::vector<Integer>& cyclotomic_polynomial(long n);

long euler_phi(long n);

// An exact element of a cyclotomic field Q(zeta_n).
//
// Stored in the power basis zeta_n^0 .. zeta_n^{phi(n)-1} after reduction
// modulo the n-th cyclotomic polynomial, which is the unique reduced
// normal form at that conductor.  Values that turn out rational contract
// to conductor 1.  Two values compare equal iff their normal forms agree
// after promotion to the lcm conductor.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& q) : conductor_(1), coeffs_(1, q) {}
  explicit Cyclotomic(long v) : conductor_(1), coeffs_(1, Rational(v)) {}

  // zeta_n^k
  static Cyclotomic root_of_unity(long n, long k);
  // e^{2 pi i t} for rational t
  static Cyclotomic from_turn(const Rational& t);
  // raw constructor; reduces the given power-basis coefficients mod Phi_n
  static Cyclotomic from_coeffs(long conductor, std::vector<Rational> coeffs);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;   // all non-constant coordinates vanish
  bool is_integer() const;    // rational with denominator 1
  // Constant coordinate of the normal form.  Equals the value when
  // is_rational(); in general it is the zeta^0 coordinate.
  const Rational& rational_part() const { return coeffs_[0]; }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  // Image under zeta_n -> zeta_n^{-1} (complex conjugation).
  Cyclotomic conj() const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Re-expresses the value at conductor n (current conductor must divide n).
  Cyclotomic promoted(long n) const;

  // Floating-point embedding with zeta_n = exp(2 pi i / n); for
  // cross-checks and the --approx rendering only.
  std::complex<double> to_complex() const;

 private:
  Cyclotomic(long conductor, std::vector<Rational> reduced)
      : conductor_(conductor), coeffs_(std::move(reduced)) {}
  void contract_if_rational();

  long conductor_;
  std::vector<Rational> coeffs_;  // length phi(conductor_)
};

inline Cyclotomic cyc_add(const Cyclotomic& a, const Cyclotomic& b) { return a + b; }
inline Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }
inline Cyclotomic cyc_conj(const Cyclotomic& a) { return a.conj(); }
inline bool cyc_is_integer(const Cyclotomic& a) { return a.is_integer(); }

}  // namespace orbikit

#endif
