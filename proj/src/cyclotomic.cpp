#include "ahrg/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ahrg {

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

std::vector<long> poly_divide(std::vector<long> num, const std::vector<long>& den) {
  std::vector<long> q(num.size() - den.size() + 1, 0);
  for (long k = (long)num.size() - 1; k >= (long)den.size() - 1; --k) {
    long c = num[k];
    q[k - den.size() + 1] = c;
    for (size_t j = 0; j < den.size(); ++j) num[k - den.size() + 1 + j] -= c * den[j];
  }
  return q;
}

const std::vector<long>& phi_locked(long n, std::map<long, std::vector<long>>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) num = poly_divide(num, phi_locked(d, cache));
  return cache[n] = num;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long n) {
  static std::mutex mu;
  static std::map<long, std::vector<long>> cache;
  std::lock_guard<std::mutex> lock(mu);
  return phi_locked(n, cache);
}

namespace {

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

// Exponent k of x^k reduced into coefficient vector of length phi(n), added
// with weight c.
void add_power(std::vector<Rational>& out, long n, long k, const Rational& c) {
  const auto& phi = cyclotomic_polynomial(n);
  long deg = (long)phi.size() - 1;
  k = mod(k, n);
  if (k < deg) {
    out[k] += c;
    return;
  }
  std::vector<Rational> tmp(k + 1);
  tmp[k] = c;
  for (long j = k; j >= deg; --j) {
    if (tmp[j] == 0) continue;
    Rational t = tmp[j];
    for (long i = 0; i <= deg; ++i) tmp[j - deg + i] -= t * phi[i];
  }
  for (long i = 0; i < deg; ++i) out[i] += tmp[i];
}

// Representation in conductor n of a coefficient polynomial of arbitrary degree.
std::vector<Rational> reduce(const std::vector<Rational>& p, long n) {
  const auto& phi = cyclotomic_polynomial(n);
  long deg = (long)phi.size() - 1;
  std::vector<Rational> tmp = p;
  for (long j = (long)tmp.size() - 1; j >= deg; --j) {
    if (tmp[j] == 0) continue;
    Rational t = tmp[j];
    for (long i = 0; i <= deg; ++i) tmp[j - deg + i] -= t * phi[i];
  }
  tmp.resize(deg);
  return tmp;
}

}  // namespace

Cyclotomic::Cyclotomic() : n_(1), c_(1) {}
Cyclotomic::Cyclotomic(const Rational& q) : n_(1), c_{q} {}
Cyclotomic::Cyclotomic(long q) : n_(1), c_{Rational(q)} {}

Cyclotomic::Cyclotomic(long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) { normalize(); }

void Cyclotomic::normalize() {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return;
  n_ = 1;
  c_.resize(1);
}

Cyclotomic Cyclotomic::zeta(long n, long k) {
  if (n <= 0) throw std::invalid_argument("zeta: conductor must be positive");
  long g = std::gcd(n, mod(k, n));
  if (mod(k, n) == 0) return Cyclotomic(1);
  n /= g;
  k = mod(k, n * g) / g;
  // zeta_{2m} = -zeta_m^{(m+1)/2} for m odd.
  Rational sign = 1;
  if (n % 4 == 2) {
    long m = n / 2;
    if (k % 2) sign = -1;
    k = mod(k * ((m + 1) / 2), m);
    n = m;
  }
  std::vector<Rational> c(euler_phi(n));
  add_power(c, n, k, sign);
  return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::root_of_unity(const Rational& turn) {
  Rational f = frac_mod1(turn);
  if (!f.get_den().fits_slong_p()) throw std::domain_error("root of unity order too large");
  return zeta(f.get_den().get_si(), f.get_num().get_si());
}

bool Cyclotomic::is_zero() const { return n_ == 1 && c_[0] == 0; }
bool Cyclotomic::is_one() const { return n_ == 1 && c_[0] == 1; }

const Rational& Cyclotomic::rational_value() const {
  if (n_ != 1) throw std::domain_error("cyclotomic value is not rational: " + str());
  return c_[0];
}

Cyclotomic Cyclotomic::promoted(long m) const {
  if (m == n_) return *this;
  if (m % n_) throw std::invalid_argument("promotion target is not a multiple of the conductor");
  if (m % 4 == 2) throw std::invalid_argument("conductor 2 mod 4 is not canonical");
  long step = m / n_;
  std::vector<Rational> c(euler_phi(m));
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) add_power(c, m, (long)i * step, c_[i]);
  Cyclotomic r;
  r.n_ = m;
  r.c_ = std::move(c);
  return r;
}

Cyclotomic Cyclotomic::galois(long a) const {
  if (n_ == 1) return *this;
  if (std::gcd(mod(a, n_), n_) != 1) throw std::invalid_argument("galois: exponent not a unit");
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) add_power(c, n_, (long)i * a, c_[i]);
  return Cyclotomic(n_, std::move(c));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic");
  if (n_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  // Product of the nontrivial Galois conjugates divided by the norm.
  Cyclotomic prod(1);
  for (long a = 2; a < n_; ++a)
    if (std::gcd(a, n_) == 1) prod *= galois(a);
  Cyclotomic norm = prod * *this;
  return prod * Cyclotomic(Rational(1) / norm.rational_value());
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

namespace {

long lcm_conductor(long a, long b) { return std::lcm(a, b); }

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.n_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  long m = lcm_conductor(n_, o.n_);
  Cyclotomic a = promoted(m);
  Cyclotomic b = o.promoted(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  a.normalize();
  return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.n_ == 1) {
    for (auto& x : c_) x *= o.c_[0];
    if (o.c_[0] == 0) normalize();
    return *this;
  }
  if (n_ == 1) {
    Rational s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    if (s == 0) normalize();
    return *this;
  }
  long m = lcm_conductor(n_, o.n_);
  Cyclotomic a = promoted(m);
  Cyclotomic b = o.promoted(m);
  std::vector<Rational> p(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) p[i + j] += a.c_[i] * b.c_[j];
  }
  *this = Cyclotomic(m, reduce(p, m));
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  if (a.n_ == 1 || b.n_ == 1) return false;  // normalized rationals have n = 1
  long m = std::lcm(a.n_, b.n_);
  return a.promoted(m).c_ == b.promoted(m).c_;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> s = 0;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    double ang = 2.0 * M_PI * (double)i / (double)n_;
    s += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

Cyclotomic Cyclotomic::with_minimal_conductor() const {
  if (n_ == 1) return *this;
  for (long d = 3; d < n_; ++d) {
    if (n_ % d || d % 4 == 2) continue;
    // Fixed by every automorphism zeta -> zeta^a with a = 1 mod d.
    bool fixed = true;
    for (long a = 1 + d; a < n_ && fixed; a += d)
      if (std::gcd(a, n_) == 1 && galois(a) != *this) fixed = false;
    if (!fixed) continue;
    // Trace down: x = (1/k) sum of conjugates over the fixing group, each in
    // Q(zeta_d); solve coefficients by matching images of the power basis.
    long ph = euler_phi(d);
    std::vector<std::vector<Rational>> cols;
    for (long i = 0; i < ph; ++i) cols.push_back(Cyclotomic::zeta(d, i).promoted(n_).c_);
    long rows = (long)c_.size();
    // Gaussian elimination on [cols | c_].
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(ph + 1));
    for (long r = 0; r < rows; ++r) {
      for (long i = 0; i < ph; ++i) m[r][i] = cols[i][r];
      m[r][ph] = c_[r];
    }
    long piv_row = 0;
    std::vector<long> piv_col;
    for (long col = 0; col < ph && piv_row < rows; ++col) {
      long p = -1;
      for (long r = piv_row; r < rows; ++r)
        if (m[r][col] != 0) { p = r; break; }
      if (p < 0) continue;
      std::swap(m[p], m[piv_row]);
      Rational inv = 1 / m[piv_row][col];
      for (auto& x : m[piv_row]) x *= inv;
      for (long r = 0; r < rows; ++r) {
        if (r == piv_row || m[r][col] == 0) continue;
        Rational f = m[r][col];
        for (long k = 0; k <= ph; ++k) m[r][k] -= f * m[piv_row][k];
      }
      piv_col.push_back(col);
      ++piv_row;
    }
    std::vector<Rational> sol(ph);
    for (size_t i = 0; i < piv_col.size(); ++i) sol[piv_col[i]] = m[i][ph];
    Cyclotomic r(d, sol);
    if (r == *this) return r;
  }
  return *this;
}

std::string Cyclotomic::str() const {
  Cyclotomic m = with_minimal_conductor();
  if (m.n_ == 1) return m.c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < m.c_.size(); ++i) {
    if (m.c_[i] == 0) continue;
    Rational c = m.c_[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (i == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "E(" << m.n_ << ")";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

}  // namespace ahrg
