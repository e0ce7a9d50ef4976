#pragma once

#include "ahrg/qpower.hpp"

#include <map>
#include <string>

namespace ahrg {

/// Rational function of one variable z, written as
///   lead * z^shift * prod_rho (z - rho)^{mult(rho)}
/// where every root rho is a PhaseMonomial. Positive multiplicities belong
/// to the numerator. Equal roots cancel on construction, so the stored form
/// is automatically coprime and normalization is idempotent.
class RatFun {
 public:
  RatFun() = default;
  /// The factor 1 - c z^k, k != 0.
  static RatFun one_minus(const PhaseMonomial& c, long k);
  /// The factor 1 + c z^k, k != 0.
  static RatFun one_plus(const PhaseMonomial& c, long k);
  static RatFun constant(const PhaseMonomial& c);

  /// With v = 1 every root becomes unitary; call on results in that mode.
  RatFun collapsed_v() const;

  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  bool operator==(const RatFun& o) const {
    return lead_ == o.lead_ && shift_ == o.shift_ && roots_ == o.roots_;
  }

  /// Pole order at z0: order in the denominator minus order in the numerator.
  long pole_order(const PhaseMonomial& z0) const;
  /// Unitary points where the function has a pole, after cancellation.
  std::map<PhaseMonomial, long> unitary_poles() const;
  bool is_constant() const { return roots_.empty() && shift_ == 0; }
  long numerator_degree() const;
  long denominator_degree() const;

  const PhaseMonomial& lead() const { return lead_; }
  long shift() const { return shift_; }
  const std::map<PhaseMonomial, long>& roots() const { return roots_; }
  std::string str() const;

 private:
  void add_root(const PhaseMonomial& r, long m);

  PhaseMonomial lead_;
  long shift_ = 0;
  std::map<PhaseMonomial, long> roots_;
};

}  // namespace ahrg
