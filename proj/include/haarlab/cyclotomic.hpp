#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "haarlab/types.hpp"

namespace haarlab {

/// Exact element of Q(zeta_e): sum_j c_j zeta_e^j with rational c_j,
/// zeta_e = exp(2 pi i / e). The representation is not unique; comparisons
/// reduce modulo the e-th cyclotomic polynomial.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int order);
  Cyclotomic(int order, const mpq_class& rational);

  static Cyclotomic zeta(int order, int power);

  int order() const { return order_; }
  const std::vector<mpq_class>& coefficients() const { return c_; }

  /// Same value written over zeta_{order * k}.
  Cyclotomic lift(int new_order) const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(const mpq_class& q) const;
  Cyclotomic& operator+=(const Cyclotomic& o);

  /// Complex conjugate: zeta -> zeta^{-1}.
  Cyclotomic conj() const;
  /// Galois automorphism zeta -> zeta^t, gcd(t, order) = 1.
  Cyclotomic galois(int t) const;

  /// Coefficients of the remainder modulo Phi_order, length phi(order).
  std::vector<mpq_class> canonical() const;
  bool is_zero() const;
  bool operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }
  std::optional<mpq_class> as_rational() const;

  Complex to_complex() const;
  /// Monic integer minimal polynomial, ascending coefficients, from the
  /// distinct Galois conjugates; empty if the coefficients are not
  /// integral (the value is then not an algebraic integer).
  std::vector<long long> minimal_polynomial() const;

  /// "a/b" when rational, otherwise the decimal value with 12 digits.
  std::string to_string() const;

 private:
  int order_;
  std::vector<mpq_class> c_;
};

Cyclotomic operator*(const mpq_class& q, const Cyclotomic& c);

/// Integer coefficients of Phi_e, ascending.
const std::vector<long long>& cyclotomic_polynomial(int e);
int euler_phi(int e);
std::string polynomial_to_string(const std::vector<long long>& ascending, const std::string& var = "x");

}  // namespace haarlab
