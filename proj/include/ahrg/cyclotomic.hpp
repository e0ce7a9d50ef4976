#pragma once

#include "ahrg/rational.hpp"

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace ahrg {

/// Element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1} modulo the
/// N-th cyclotomic polynomial. The conductor is kept != 2 mod 4 and drops to 1
/// whenever the value is rational, so rational arithmetic stays cheap. Mixed
/// conductors are promoted to their lcm.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(const Rational& q);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long q);             // NOLINT(google-explicit-constructor)

  /// exp(2 pi i * turn).
  static Cyclotomic root_of_unity(const Rational& turn);
  /// zeta_n^k.
  static Cyclotomic zeta(long n, long k = 1);

  long conductor() const { return n_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return n_ == 1; }
  /// Throws unless is_rational().
  const Rational& rational_value() const;

  /// Complex conjugation, zeta -> zeta^{-1}.
  Cyclotomic conj() const;
  /// Galois automorphism zeta_N -> zeta_N^a, gcd(a, N) = 1.
  Cyclotomic galois(long a) const;
  /// Throws std::domain_error on zero.
  Cyclotomic inverse() const;
  /// Same value expressed with conductor m (a multiple of the current one).
  Cyclotomic promoted(long m) const;
  /// Same value in the smallest cyclotomic field containing it.
  Cyclotomic with_minimal_conductor() const;

  std::complex<double> to_complex() const;
  std::string str() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

 private:
  Cyclotomic(long n, std::vector<Rational> c);
  void normalize();

  long n_;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

long euler_phi(long n);
/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(long n);

}  // namespace ahrg
