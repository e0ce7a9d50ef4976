#include "ahrg/torus.hpp"

#include <sstream>

namespace ahrg {

TorusPoint::TorusPoint(RatVec tor, RatVec ex) : torsion(std::move(tor)), exponent(std::move(ex)) {
  if (torsion.size() != exponent.size()) throw std::invalid_argument("torus point: rank mismatch");
  for (auto& x : torsion) x = frac_mod1(x);
}

PhaseMonomial TorusPoint::eval(const IntVec& x) const {
  if ((int)x.size() != rank()) throw std::invalid_argument("torus point: character rank mismatch");
  Rational turn = 0, e = 0;
  for (int i = 0; i < rank(); ++i) {
    if (!x[i]) continue;
    turn += torsion[i] * x[i];
    e += exponent[i] * x[i];
  }
  return PhaseMonomial(turn, e);
}

TorusPoint TorusPoint::operator*(const TorusPoint& o) const {
  TorusPoint r(rank());
  for (int i = 0; i < rank(); ++i) {
    r.torsion[i] = frac_mod1(torsion[i] + o.torsion[i]);
    r.exponent[i] = exponent[i] + o.exponent[i];
  }
  return r;
}

TorusPoint TorusPoint::inverse() const {
  TorusPoint r(rank());
  for (int i = 0; i < rank(); ++i) {
    r.torsion[i] = frac_mod1(-torsion[i]);
    r.exponent[i] = -exponent[i];
  }
  return r;
}

bool TorusPoint::is_unitary() const {
  for (const auto& e : exponent)
    if (e != 0) return false;
  return true;
}

bool TorusPoint::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (torsion[i] != 0 || exponent[i] != 0) return false;
  return true;
}

TorusPoint TorusPoint::transformed(const IntMat& minv) const {
  // New value on e_j is t(minv e_j): coordinates are column j of minv.
  TorusPoint r(rank());
  for (int j = 0; j < rank(); ++j) {
    PhaseMonomial m = eval(minv.col(j));
    r.torsion[j] = m.turn;
    r.exponent[j] = m.vexp;
  }
  return r;
}

std::string TorusPoint::str() const {
  std::ostringstream os;
  os << "{torsion:[";
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << torsion[i];
  os << "],exponent:[";
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << exponent[i];
  os << "]}";
  return os.str();
}

}  // namespace ahrg
