#pragma once

#include "ahrg/cyclotomic.hpp"

#include <map>
#include <string>

namespace ahrg {

/// exp(2 pi i * turn) * v^vexp, with turn kept in [0, 1).
struct PhaseMonomial {
  Rational turn;
  Rational vexp;

  PhaseMonomial() = default;
  PhaseMonomial(const Rational& t, const Rational& e);

  PhaseMonomial operator*(const PhaseMonomial& o) const { return {turn + o.turn, vexp + o.vexp}; }
  PhaseMonomial inverse() const { return {-turn, -vexp}; }
  PhaseMonomial conj_inverse() const { return {turn, -vexp}; }
  bool is_unitary() const { return vexp == 0; }
  bool operator==(const PhaseMonomial& o) const { return turn == o.turn && vexp == o.vexp; }
  bool operator!=(const PhaseMonomial& o) const { return !(*this == o); }
  bool operator<(const PhaseMonomial& o) const {
    return turn != o.turn ? turn < o.turn : vexp < o.vexp;
  }
  std::string str() const;
};

/// Evaluation mode for the formal variable v = q^{1/2}. A zero v means generic.
struct VMode {
  Rational v = 0;
  bool generic() const { return v == 0; }
  static VMode numeric(const Rational& value);
  bool operator==(const VMode& o) const { return v == o.v; }
};

/// Finite sum of Cyclotomic * v^e with rational exponents. Numeric-mode
/// values keep only the exponent 0 term; generic-mode values are Laurent
/// polynomials in v and zero means identically zero.
class QPower {
 public:
  QPower() = default;
  QPower(const Cyclotomic& c);  // NOLINT(google-explicit-constructor)
  QPower(const Rational& c) : QPower(Cyclotomic(c)) {}  // NOLINT
  QPower(long c) : QPower(Cyclotomic(c)) {}             // NOLINT

  static QPower vpow(const Rational& e, const VMode& mode);
  static QPower monomial(const PhaseMonomial& m, const VMode& mode);

  const VMode& mode() const { return mode_; }
  const std::map<Rational, Cyclotomic>& terms() const { return t_; }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }
  /// Value of a constant element; throws otherwise.
  Cyclotomic constant() const;
  /// Substitute v := value.
  Cyclotomic evaluate(const Rational& value) const;
  /// Same element under a numeric mode (substitution) or unchanged if generic.
  QPower in_mode(const VMode& m) const;

  QPower conj() const;
  /// Inverse of a single term, or of any nonzero numeric value.
  QPower inverse() const;

  QPower operator-() const;
  QPower& operator+=(const QPower& o);
  QPower& operator-=(const QPower& o) { return *this += -o; }
  QPower& operator*=(const QPower& o);
  QPower& operator/=(const QPower& o) { return *this *= o.inverse(); }
  friend QPower operator+(QPower a, const QPower& b) { return a += b; }
  friend QPower operator-(QPower a, const QPower& b) { return a -= b; }
  friend QPower operator*(QPower a, const QPower& b) { return a *= b; }
  friend QPower operator/(QPower a, const QPower& b) { return a /= b; }
  friend bool operator==(const QPower& a, const QPower& b);
  friend bool operator!=(const QPower& a, const QPower& b) { return !(a == b); }

  std::string str() const;

 private:
  void absorb_mode(const VMode& m);
  void add_term(const Rational& e, const Cyclotomic& c);

  VMode mode_;
  std::map<Rational, Cyclotomic> t_;
};

}  // namespace ahrg
