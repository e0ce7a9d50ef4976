#include "ahrg/ratfun.hpp"

#include <sstream>

namespace ahrg {

void RatFun::add_root(const PhaseMonomial& r, long m) {
  if (!m) return;
  auto it = roots_.find(r);
  if (it == roots_.end()) {
    roots_.emplace(r, m);
    return;
  }
  it->second += m;
  if (!it->second) roots_.erase(it);
}

RatFun RatFun::constant(const PhaseMonomial& c) {
  RatFun f;
  f.lead_ = c;
  return f;
}

RatFun RatFun::one_minus(const PhaseMonomial& c, long k) {
  if (!k) throw std::invalid_argument("one_minus: zero degree");
  RatFun f;
  if (k > 0) {
    // 1 - c z^k = -c * prod_j (z - rho_j) with rho_j^k = c^{-1}.
    f.lead_ = c * PhaseMonomial(ratio(1, 2), 0);
    for (long j = 0; j < k; ++j) f.add_root(PhaseMonomial((-c.turn + j) / k, -c.vexp / k), 1);
  } else {
    // 1 - c z^{-K} = z^{-K} prod_j (z - sigma_j) with sigma_j^K = c.
    long K = -k;
    f.shift_ = -K;
    for (long j = 0; j < K; ++j) f.add_root(PhaseMonomial((c.turn + j) / K, c.vexp / K), 1);
  }
  return f;
}

RatFun RatFun::one_plus(const PhaseMonomial& c, long k) {
  return one_minus(c * PhaseMonomial(ratio(1, 2), 0), k);
}

RatFun RatFun::collapsed_v() const {
  RatFun f;
  f.lead_ = PhaseMonomial(lead_.turn, 0);
  f.shift_ = shift_;
  for (const auto& [r, m] : roots_) f.add_root(PhaseMonomial(r.turn, 0), m);
  return f;
}

RatFun RatFun::operator*(const RatFun& o) const {
  RatFun f = *this;
  f.lead_ = lead_ * o.lead_;
  f.shift_ += o.shift_;
  for (const auto& [r, m] : o.roots_) f.add_root(r, m);
  return f;
}

RatFun RatFun::operator/(const RatFun& o) const {
  RatFun f = *this;
  f.lead_ = lead_ * o.lead_.inverse();
  f.shift_ -= o.shift_;
  for (const auto& [r, m] : o.roots_) f.add_root(r, -m);
  return f;
}

long RatFun::pole_order(const PhaseMonomial& z0) const {
  auto it = roots_.find(z0);
  return it == roots_.end() ? 0 : -it->second;
}

std::map<PhaseMonomial, long> RatFun::unitary_poles() const {
  std::map<PhaseMonomial, long> out;
  for (const auto& [r, m] : roots_)
    if (m < 0 && r.is_unitary()) out.emplace(r, -m);
  return out;
}

long RatFun::numerator_degree() const {
  long d = shift_ > 0 ? shift_ : 0;
  for (const auto& [r, m] : roots_)
    if (m > 0) d += m;
  return d;
}

long RatFun::denominator_degree() const {
  long d = shift_ < 0 ? -shift_ : 0;
  for (const auto& [r, m] : roots_)
    if (m < 0) d -= m;
  return d;
}

std::string RatFun::str() const {
  std::ostringstream os;
  os << "[" << lead_.str() << "]";
  if (shift_) os << "*z^" << shift_;
  for (const auto& [r, m] : roots_) os << "*(z - " << r.str() << ")^" << m;
  return os.str();
}

}  // namespace ahrg
