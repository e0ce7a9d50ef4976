#include "ahrg/qpower.hpp"

#include <sstream>

namespace ahrg {

PhaseMonomial::PhaseMonomial(const Rational& t, const Rational& e) : turn(frac_mod1(t)), vexp(e) {}

std::string PhaseMonomial::str() const {
  std::ostringstream os;
  os << "exp(2pi i*" << turn << ")*v^" << vexp;
  return os.str();
}

VMode VMode::numeric(const Rational& value) {
  if (value <= 0) throw std::invalid_argument("numeric v must be a positive rational");
  VMode m;
  m.v = value;
  return m;
}

QPower::QPower(const Cyclotomic& c) {
  if (!c.is_zero()) t_.emplace(Rational(0), c);
}

QPower QPower::vpow(const Rational& e, const VMode& mode) {
  QPower r;
  r.mode_ = mode;
  if (mode.generic()) r.t_.emplace(e, Cyclotomic(1));
  else r.t_.emplace(Rational(0), Cyclotomic(exact_power(mode.v, e)));
  return r;
}

QPower QPower::monomial(const PhaseMonomial& m, const VMode& mode) {
  QPower r = vpow(m.vexp, mode);
  if (m.turn != 0) r *= QPower(Cyclotomic::root_of_unity(m.turn));
  return r;
}

Cyclotomic QPower::constant() const {
  if (t_.empty()) return Cyclotomic(0);
  if (!is_constant()) throw std::domain_error("QPower is not constant: " + str());
  return t_.begin()->second;
}

Cyclotomic QPower::evaluate(const Rational& value) const {
  Cyclotomic s(0);
  for (const auto& [e, c] : t_) s += c * Cyclotomic(e == 0 ? Rational(1) : exact_power(value, e));
  return s;
}

QPower QPower::in_mode(const VMode& m) const {
  if (m.generic()) {
    if (!mode_.generic()) throw std::logic_error("cannot lift a numeric value to generic mode");
    return *this;
  }
  if (!mode_.generic()) {
    if (mode_.v != m.v) throw std::logic_error("mixed numeric v values");
    return *this;
  }
  QPower r(evaluate(m.v));
  r.mode_ = m;
  return r;
}

void QPower::absorb_mode(const VMode& m) {
  if (m == mode_ || m.generic()) return;
  *this = in_mode(m);
}

void QPower::add_term(const Rational& e, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

QPower QPower::conj() const {
  QPower r;
  r.mode_ = mode_;
  for (const auto& [e, c] : t_) r.t_.emplace(e, c.conj());
  return r;
}

QPower QPower::inverse() const {
  if (t_.empty()) throw std::domain_error("inverse of zero QPower");
  if (t_.size() != 1) throw std::domain_error("generic inverse of a non-monomial: " + str());
  QPower r;
  r.mode_ = mode_;
  r.t_.emplace(-t_.begin()->first, t_.begin()->second.inverse());
  return r;
}

QPower QPower::operator-() const {
  QPower r;
  r.mode_ = mode_;
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

QPower& QPower::operator+=(const QPower& o) {
  if (o.mode_ == mode_ || o.mode_.generic()) {
    absorb_mode(mode_);
    QPower b = o.mode_ == mode_ ? o : o.in_mode(mode_);
    for (const auto& [e, c] : b.t_) add_term(e, c);
  } else {
    absorb_mode(o.mode_);
    for (const auto& [e, c] : o.t_) add_term(e, c);
  }
  return *this;
}

QPower& QPower::operator*=(const QPower& o) {
  VMode m = mode_.generic() ? o.mode_ : mode_;
  QPower a = in_mode(m);
  QPower b = o.in_mode(m);
  QPower r;
  r.mode_ = m;
  for (const auto& [e1, c1] : a.t_)
    for (const auto& [e2, c2] : b.t_) r.add_term(e1 + e2, c1 * c2);
  return *this = std::move(r);
}

bool operator==(const QPower& a, const QPower& b) {
  if (a.mode_ == b.mode_) return a.t_ == b.t_;
  VMode m = a.mode_.generic() ? b.mode_ : a.mode_;
  return a.in_mode(m).t_ == b.in_mode(m).t_;
}

std::string QPower::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const std::string cs = it->second.str();
    if (it->first == 0) {
      os << cs;
      continue;
    }
    if (cs == "-1") os << "-";
    else if (cs != "1") os << "(" << cs << ")*";
    os << "v";
    if (it->first != 1) os << "^" << it->first;
  }
  return os.str();
}

}  // namespace ahrg
