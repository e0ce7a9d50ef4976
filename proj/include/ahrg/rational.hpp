#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ahrg {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "a", "-a", "a/b" into a canonical rational.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

/// Floor of a rational as a big integer.
BigInt floor_of(const Rational& q);
/// Representative of q modulo 1 in [0, 1).
Rational frac_mod1(const Rational& q);

/// Canonical a/b; mpq_class(a, b) alone does not reduce.
inline Rational ratio(const BigInt& a, const BigInt& b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Exact rational power base^e when it exists in Q; throws otherwise.
Rational exact_power(const Rational& base, const Rational& e);

using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rational>;

}  // namespace ahrg
