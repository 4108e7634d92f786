#include "haarlab/cyclotomic.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace haarlab {

int euler_phi(int e) {
  int r = e, m = e;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  if (m > 1) r -= r / m;
  return r;
}

const std::vector<long long>& cyclotomic_polynomial(int e) {
  static std::map<int, std::vector<long long>> cache;
  static std::recursive_mutex mutex;
  std::lock_guard<std::recursive_mutex> lock(mutex);
  if (e < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  if (auto it = cache.find(e); it != cache.end()) return it->second;
  // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d, by exact division.
  std::vector<long long> num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (int d = 1; d < e; ++d) {
    if (e % d) continue;
    const std::vector<long long> den = cyclotomic_polynomial(d);
    const int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
    std::vector<long long> q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
      const long long c = num[i];  // den is monic
      q[i - dd] = c;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = q;
  }
  return cache.emplace(e, num).first->second;
}

Cyclotomic::Cyclotomic(int order) : order_(order), c_(order, mpq_class(0)) {
  if (order < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
}

Cyclotomic::Cyclotomic(int order, const mpq_class& rational) : Cyclotomic(order) { c_[0] = rational; }

Cyclotomic Cyclotomic::zeta(int order, int power) {
  Cyclotomic z(order);
  z.c_[((power % order) + order) % order] = 1;
  return z;
}

Cyclotomic Cyclotomic::lift(int new_order) const {
  if (new_order % order_) throw std::invalid_argument("Cyclotomic::lift: order must divide");
  const int k = new_order / order_;
  Cyclotomic r(new_order);
  for (int j = 0; j < order_; ++j) r.c_[j * k] = c_[j];
  return r;
}

namespace {
std::pair<Cyclotomic, Cyclotomic> common(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() == b.order()) return {a, b};
  const int l = std::lcm(a.order(), b.order());
  return {a.lift(l), b.lift(l)};
}
}  // namespace

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (o.order_ != order_) {
    auto [a, b] = common(*this, o);
    return a + b;
  }
  Cyclotomic r(*this);
  for (int j = 0; j < order_; ++j) r.c_[j] += o.c_[j];
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.order_ != order_) return *this = *this + o;
  for (int j = 0; j < order_; ++j) c_[j] += o.c_[j];
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (o.order_ != order_) {
    auto [a, b] = common(*this, o);
    return a * b;
  }
  Cyclotomic r(order_);
  for (int i = 0; i < order_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < order_; ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[(i + j) % order_] += c_[i] * o.c_[j];
    }
  }
  return r;
}

Cyclotomic Cyclotomic::operator*(const mpq_class& q) const {
  Cyclotomic r(*this);
  for (auto& c : r.c_) c *= q;
  return r;
}

Cyclotomic operator*(const mpq_class& q, const Cyclotomic& c) { return c * q; }

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::galois(int t) const {
  if (std::gcd(((t % order_) + order_) % order_, order_) != 1 && order_ > 1)
    throw std::invalid_argument("Cyclotomic::galois: exponent must be coprime to the order");
  Cyclotomic r(order_);
  for (int j = 0; j < order_; ++j) {
    const long long idx = (static_cast<long long>(j) * t) % order_;
    r.c_[(idx + order_) % order_] += c_[j];
  }
  return r;
}

std::vector<mpq_class> Cyclotomic::canonical() const {
  const std::vector<long long>& phi = cyclotomic_polynomial(order_);
  const int deg = static_cast<int>(phi.size()) - 1;
  std::vector<mpq_class> rem(c_);
  for (int i = order_ - 1; i >= deg; --i) {
    if (rem[i] == 0) continue;
    const mpq_class c = rem[i];
    for (int j = 0; j <= deg; ++j) rem[i - deg + j] -= c * static_cast<long>(phi[j]);
  }
  rem.resize(deg);
  return rem;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : canonical())
    if (c != 0) return false;
  return true;
}

std::optional<mpq_class> Cyclotomic::as_rational() const {
  const auto r = canonical();
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return std::nullopt;
  return r.empty() ? mpq_class(0) : r[0];
}

Complex Cyclotomic::to_complex() const {
  long double re = 0.0L, im = 0.0L;
  const long double two_pi = 2.0L * 3.141592653589793238462643383279502884L;
  for (int j = 0; j < order_; ++j) {
    if (c_[j] == 0) continue;
    const long double c = c_[j].get_d();
    re += c * std::cos(two_pi * j / order_);
    im += c * std::sin(two_pi * j / order_);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::vector<long long> Cyclotomic::minimal_polynomial() const {
  std::vector<Cyclotomic> conjugates;
  for (int t = 1; t <= order_; ++t) {
    if (std::gcd(t, order_) != 1) continue;
    const Cyclotomic g = galois(t);
    bool seen = false;
    for (const auto& c : conjugates)
      if (c == g) {
        seen = true;
        break;
      }
    if (!seen) conjugates.push_back(g);
  }
  // prod (x - v) with long double complex arithmetic; coefficients are integers
  // for algebraic integers.
  std::vector<std::complex<long double>> poly{1.0L};
  for (const auto& c : conjugates) {
    const Complex v = c.to_complex();
    const std::complex<long double> lv(v.real(), v.imag());
    std::vector<std::complex<long double>> next(poly.size() + 1, 0.0L);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= lv * poly[i];
    }
    poly = next;
  }
  std::vector<long long> out;
  for (const auto& c : poly) {
    const long double r = std::round(c.real());
    if (std::abs(c.real() - r) > 1e-6L || std::abs(c.imag()) > 1e-6L) return {};
    out.push_back(static_cast<long long>(r));
  }
  return out;
}

std::string Cyclotomic::to_string() const {
  if (const auto q = as_rational()) return q->get_str();
  const Complex v = to_complex();
  char buf[96];
  const double re = std::abs(v.real()) < 5e-13 ? 0.0 : v.real();
  if (std::abs(v.imag()) < 5e-13)
    std::snprintf(buf, sizeof buf, "%.12f", re);
  else
    std::snprintf(buf, sizeof buf, "%.12f%+.12fi", re, v.imag());
  return buf;
}

std::string polynomial_to_string(const std::vector<long long>& a, const std::string& var) {
  std::string s;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    const long long c = a[i];
    if (c == 0) continue;
    const long long m = c < 0 ? -c : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (m != 1 || i == 0) s += std::to_string(m);
    if (i >= 1) s += var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace haarlab
