#pragma once

// Functions on a finite group under the averaged measure (1/h) sum_R.
// Everything is templated on the scalar: Complex for floating point,
// Cyclotomic for exact arithmetic.
//
// Normalizations (fixed, tested):
//   (x * y)(s)  = (1/h) sum_r x(s r^{-1}) y(r)
//   <x, y>      = (1/h) sum_s x(s) conj(y(s))
//   A(x)        = (1/h) sum_s x(s) conj(pi(s)),  so A(x * y) = A(x) A(y)
//   (K_x f)(s)  = (x * f)(s),  kernel K(s, r) = x(s r^{-1}) / h,  tr K_x = x(E)
//   P_chi f     = dim * (chi * f)
// The kernel is the right-commutant form x(u v^{-1}); the left form
// x(v^{-1} u) gives the same trace.

#include <stdexcept>
#include <utility>
#include <vector>

#include "haarlab/cyclotomic.hpp"
#include "haarlab/frobenius.hpp"

namespace haarlab {

template <class T>
using FiniteFunction = std::vector<T>;

template <class T>
struct SquareMatrix {
  int n = 0;
  std::vector<T> a;

  SquareMatrix() = default;
  SquareMatrix(int size, const T& zero) : n(size), a(static_cast<std::size_t>(size) * size, zero) {}
  T& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const T& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

template <class T>
struct MatrixRep {
  int dim = 0;
  std::vector<SquareMatrix<T>> at;  ///< one matrix per group element
};

namespace scalar {

inline Complex zero_like(const Complex&) { return 0.0; }
inline Cyclotomic zero_like(const Cyclotomic& x) { return Cyclotomic(x.order()); }
inline Complex from_int(long long v, const Complex&) { return static_cast<double>(v); }
inline Cyclotomic from_int(long long v, const Cyclotomic& x) {
  return Cyclotomic(x.order(), mpq_class(static_cast<long>(v)));
}
inline Complex divide(const Complex& z, long long d) { return z / static_cast<double>(d); }
inline Cyclotomic divide(const Cyclotomic& z, long long d) {
  return z * mpq_class(1L, static_cast<unsigned long>(d));
}
inline Complex conj(const Complex& z) { return std::conj(z); }
inline Cyclotomic conj(const Cyclotomic& z) { return z.conj(); }
inline Complex numeric(const Complex& z) { return z; }
inline Complex numeric(const Cyclotomic& z) { return z.to_complex(); }

}  // namespace scalar

template <class T>
void require_size(const FiniteGroup& g, const FiniteFunction<T>& x) {
  if (static_cast<int>(x.size()) != g.order())
    throw std::invalid_argument("finite function does not match the group order");
}

template <class T>
FiniteFunction<T> convolve(const FiniteGroup& g, const FiniteFunction<T>& x, const FiniteFunction<T>& y) {
  require_size(g, x);
  require_size(g, y);
  const int h = g.order();
  FiniteFunction<T> out(h, scalar::zero_like(x[0]));
  for (int s = 0; s < h; ++s) {
    T acc = scalar::zero_like(x[0]);
    for (int r = 0; r < h; ++r) acc += x[g.mul(s, g.inverse(r))] * y[r];
    out[s] = scalar::divide(acc, h);
  }
  return out;
}

/// x~(s) = conj(x(s^{-1})).
template <class T>
FiniteFunction<T> involution(const FiniteGroup& g, const FiniteFunction<T>& x) {
  require_size(g, x);
  FiniteFunction<T> out(x.size(), scalar::zero_like(x[0]));
  for (int s = 0; s < g.order(); ++s) out[s] = scalar::conj(x[g.inverse(s)]);
  return out;
}

template <class T>
T inner(const FiniteGroup& g, const FiniteFunction<T>& x, const FiniteFunction<T>& y) {
  require_size(g, x);
  require_size(g, y);
  T acc = scalar::zero_like(x[0]);
  for (int s = 0; s < g.order(); ++s) acc += x[s] * scalar::conj(y[s]);
  return scalar::divide(acc, g.order());
}

template <class T>
SquareMatrix<T> integral_operator(const FiniteGroup& g, const FiniteFunction<T>& x) {
  require_size(g, x);
  const int h = g.order();
  SquareMatrix<T> k(h, scalar::zero_like(x[0]));
  for (int s = 0; s < h; ++s)
    for (int r = 0; r < h; ++r) k(s, r) = scalar::divide(x[g.mul(s, g.inverse(r))], h);
  return k;
}

template <class T>
T trace(const SquareMatrix<T>& m) {
  T acc = scalar::zero_like(m.a.front());
  for (int i = 0; i < m.n; ++i) acc += m(i, i);
  return acc;
}

template <class T>
FiniteFunction<T> apply(const SquareMatrix<T>& m, const FiniteFunction<T>& f) {
  FiniteFunction<T> out(m.n, scalar::zero_like(f[0]));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) out[i] += m(i, j) * f[j];
  return out;
}

template <class T>
SquareMatrix<T> multiply(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
  SquareMatrix<T> r(a.n, scalar::zero_like(a.a.front()));
  for (int i = 0; i < a.n; ++i)
    for (int l = 0; l < a.n; ++l)
      for (int j = 0; j < a.n; ++j) r(i, j) += a(i, l) * b(l, j);
  return r;
}

template <class T>
SquareMatrix<T> fourier_matrix(const FiniteGroup& g, const FiniteFunction<T>& x, const MatrixRep<T>& rep) {
  require_size(g, x);
  SquareMatrix<T> out(rep.dim, scalar::zero_like(x[0]));
  for (int s = 0; s < g.order(); ++s)
    for (int i = 0; i < rep.dim; ++i)
      for (int k = 0; k < rep.dim; ++k) out(i, k) += x[s] * scalar::conj(rep.at[s](i, k));
  for (auto& v : out.a) v = scalar::divide(v, g.order());
  return out;
}

template <class T>
T fourier_coefficient(const FiniteGroup& g, const FiniteFunction<T>& x, const MatrixRep<T>& rep, int i, int k) {
  return fourier_matrix(g, x, rep)(i, k);
}

template <class T>
FiniteFunction<T> matrix_element(const MatrixRep<T>& rep, int i, int k) {
  FiniteFunction<T> f;
  for (const auto& m : rep.at) f.push_back(m(i, k));
  return f;
}

template <class T>
FiniteFunction<T> character_of(const MatrixRep<T>& rep) {
  FiniteFunction<T> f;
  for (const auto& m : rep.at) f.push_back(trace(m));
  return f;
}

/// (sum_E dim E * sum_{ik} |alpha_ik|^2, <x, x>).
template <class T>
std::pair<T, T> bessel(const FiniteGroup& g, const FiniteFunction<T>& x, const std::vector<MatrixRep<T>>& reps) {
  T lhs = scalar::zero_like(x[0]);
  for (const auto& r : reps) {
    const SquareMatrix<T> a = fourier_matrix(g, x, r);
    T s = scalar::zero_like(x[0]);
    for (const auto& v : a.a) s += v * scalar::conj(v);
    for (int d = 0; d < r.dim; ++d) lhs += s;
  }
  return {lhs, inner(g, x, x)};
}

template <class T>
FiniteFunction<T> character_projection(const FiniteGroup& g, const FiniteFunction<T>& chi, int dim,
                                       const FiniteFunction<T>& f) {
  FiniteFunction<T> out = convolve(g, chi, f);
  for (auto& v : out) {
    const T d = v;
    for (int i = 1; i < dim; ++i) v += d;
  }
  return out;
}

/// Character row of a table as a function on elements.
FiniteFunction<Cyclotomic> exact_character(const FiniteGroup& g, const ConjClasses& cls,
                                           const CharacterTable& t, int row);
FiniteFunction<Complex> numeric_character(const FiniteGroup& g, const ConjClasses& cls,
                                          const CharacterTable& t, int row);

/// Integer matrices of the permutation action on the sum-zero hyperplane,
/// basis e_i - e_{i+1}; requires a permutation group. rep(a) e_i = e_{a^{-1}(i)}.
MatrixRep<Cyclotomic> standard_rep(const FiniteGroup& g, int order = 1);
/// One-dimensional sign representation of a permutation group.
MatrixRep<Cyclotomic> sign_rep(const FiniteGroup& g, int order = 1);
MatrixRep<Complex> to_matrix_rep(const FiniteRep& r);
MatrixRep<Complex> numeric(const MatrixRep<Cyclotomic>& r);
FiniteFunction<Complex> numeric(const FiniteFunction<Cyclotomic>& f);

}  // namespace haarlab
