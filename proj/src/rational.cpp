#include "ahrg/rational.hpp"

namespace ahrg {

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

BigInt floor_of(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac_mod1(const Rational& q) {
  Rational r = q - Rational(floor_of(q));
  r.canonicalize();
  return r;
}

namespace {

// Exact k-th root of a nonnegative integer, or false.
bool exact_root(const BigInt& n, unsigned long k, BigInt& out) {
  if (n < 0) return false;
  return mpz_root(out.get_mpz_t(), n.get_mpz_t(), k) != 0;
}

BigInt int_pow(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

Rational exact_power(const Rational& base, const Rational& e) {
  if (base <= 0) throw std::domain_error("exact_power needs a positive base");
  const BigInt& p = e.get_num();
  const BigInt& q = e.get_den();
  if (!q.fits_ulong_p() || !BigInt(abs(p)).fits_ulong_p())
    throw std::domain_error("exponent too large for exact_power");
  BigInt rn, rd;
  if (!exact_root(base.get_num(), q.get_ui(), rn) || !exact_root(base.get_den(), q.get_ui(), rd))
    throw std::domain_error("v^" + e.get_str() + " is irrational for v = " + base.get_str() +
                            "; choose a perfect-power v or generic mode");
  unsigned long a = BigInt(abs(p)).get_ui();
  Rational r(int_pow(rn, a), int_pow(rd, a));
  r.canonicalize();
  if (p < 0) r = 1 / r;
  return r;
}

}  // namespace ahrg
