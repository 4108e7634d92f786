#include "doctest.h"

#include <random>

#include "haarlab/finite_functions.hpp"

using namespace haarlab;

namespace {

using Exact = FiniteFunction<Cyclotomic>;

bool equal(const Exact& a, const Exact& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool equal(const SquareMatrix<Cyclotomic>& a, const SquareMatrix<Cyclotomic>& b) {
  if (a.n != b.n) return false;
  for (std::size_t i = 0; i < a.a.size(); ++i)
    if (!(a.a[i] == b.a[i])) return false;
  return true;
}

Exact random_exact(int h, int order, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-5, 5);
  Exact f;
  for (int i = 0; i < h; ++i)
    f.push_back(Cyclotomic(order, mpq_class(d(rng))) + Cyclotomic::zeta(order, 1) * mpq_class(d(rng)));
  return f;
}

FiniteFunction<Complex> random_numeric(int h, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  FiniteFunction<Complex> f;
  for (int i = 0; i < h; ++i) f.emplace_back(n(rng), n(rng));
  return f;
}

}  // namespace

TEST_CASE("scaled delta at the identity is the convolution unit") {
  const FiniteGroup g = builtin_group("S3");
  std::mt19937_64 rng(1);
  const Exact y = random_exact(6, 3, rng);
  Exact unit(6, Cyclotomic(3));
  unit[0] = Cyclotomic(3, mpq_class(6));
  CHECK(equal(convolve(g, unit, y), y));
  CHECK(equal(convolve(g, y, unit), y));
}

TEST_CASE("characters of Z3 under convolution") {
  const FiniteGroup g = builtin_group("Z3");
  const ConjClasses cls = conjugacy_classes(g);
  const CharacterTable t = solve_character_equation(g);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Exact ci = exact_character(g, cls, t, i), cj = exact_character(g, cls, t, j);
      const Exact c = convolve(g, ci, cj);
      if (i == j) CHECK(equal(c, ci));
      else CHECK(equal(c, Exact(3, Cyclotomic(t.exponent))));
    }
}

TEST_CASE("irreducible characters satisfy chi * chi = chi / f") {
  for (const std::string name : {"S3", "Q8", "A4"}) {
    const FiniteGroup g = builtin_group(name);
    const ConjClasses cls = conjugacy_classes(g);
    const CharacterTable t = solve_character_equation(g);
    for (int i = 0; i < t.size(); ++i) {
      const Exact c = exact_character(g, cls, t, i);
      Exact expected = c;
      for (auto& v : expected) v = scalar::divide(v, t.degrees[i]);
      CHECK_MESSAGE(equal(convolve(g, c, c), expected), name << " row " << i);
      CHECK(inner(g, c, c) == Cyclotomic(t.exponent, mpq_class(1)));
    }
  }
}

TEST_CASE("convolution is associative") {
  const FiniteGroup g = builtin_group("S3");
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 5; ++trial) {
    const Exact x = random_exact(6, 3, rng), y = random_exact(6, 3, rng), z = random_exact(6, 3, rng);
    CHECK(equal(convolve(g, convolve(g, x, y), z), convolve(g, x, convolve(g, y, z))));
    const auto a = random_numeric(6, rng), b = random_numeric(6, rng), c = random_numeric(6, rng);
    const auto l = convolve(g, convolve(g, a, b), c), r = convolve(g, a, convolve(g, b, c));
    for (int s = 0; s < 6; ++s) CHECK(std::abs(l[s] - r[s]) < 1e-12);
  }
}

TEST_CASE("standard and sign representations of S3 are homomorphisms") {
  const FiniteGroup g = builtin_group("S3");
  for (const MatrixRep<Cyclotomic>& rep : {standard_rep(g, 3), sign_rep(g, 3)})
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) CHECK(equal(multiply(rep.at[a], rep.at[b]), rep.at[g.mul(a, b)]));
  const ConjClasses cls = conjugacy_classes(g);
  const CharacterTable t = solve_character_equation(g);
  CHECK(equal(character_of(standard_rep(g, t.exponent)), exact_character(g, cls, t, 2)));
  CHECK(equal(character_of(sign_rep(g, t.exponent)), exact_character(g, cls, t, 1)));
}

TEST_CASE("Fourier matrices are multiplicative: A(x * y) = A(x) A(y)") {
  const FiniteGroup g = builtin_group("S3");
  std::mt19937_64 rng(3);
  const MatrixRep<Cyclotomic> rep = standard_rep(g, 3);
  for (int trial = 0; trial < 5; ++trial) {
    const Exact x = random_exact(6, 3, rng), y = random_exact(6, 3, rng);
    CHECK(equal(fourier_matrix(g, convolve(g, x, y), rep),
                multiply(fourier_matrix(g, x, rep), fourier_matrix(g, y, rep))));
  }
  // the numeric oracle irreducibles obey the same rule
  const RegularDecomposition d = regular_rep_oracle(builtin_group("Q8"));
  const FiniteGroup q8 = builtin_group("Q8");
  const auto x = random_numeric(8, rng), y = random_numeric(8, rng);
  for (const FiniteRep& r : d.irreps) {
    const MatrixRep<Complex> m = to_matrix_rep(r);
    const auto lhs = fourier_matrix(q8, convolve(q8, x, y), m);
    const auto rhs = multiply(fourier_matrix(q8, x, m), fourier_matrix(q8, y, m));
    for (std::size_t i = 0; i < lhs.a.size(); ++i) CHECK(std::abs(lhs.a[i] - rhs.a[i]) < 1e-12);
  }
}

TEST_CASE("Fourier coefficients of matrix elements") {
  const FiniteGroup g = builtin_group("S3");
  const RegularDecomposition d = regular_rep_oracle(g);
  const MatrixRep<Complex> two = to_matrix_rep(d.irreps[2]);
  const auto e11 = matrix_element(two, 0, 0);
  const auto a = fourier_matrix(g, e11, two);
  CHECK(std::abs(a(0, 0) - 0.5) < 1e-12);
  CHECK(std::abs(a(0, 1)) + std::abs(a(1, 0)) + std::abs(a(1, 1)) < 1e-12);
  CHECK(std::abs(fourier_coefficient(g, FiniteFunction<Complex>(6, 1.0), two, 1, 1)) < 1e-12);
}

TEST_CASE("integral operator trace is x(E)") {
  for (const std::string name : {"S3", "Q8", "A4"}) {
    const FiniteGroup g = builtin_group(name);
    std::mt19937_64 rng(4);
    const Exact x = random_exact(g.order(), 3, rng);
    CHECK(trace(integral_operator(g, x)) == x[0]);
    const Exact f = random_exact(g.order(), 3, rng);
    CHECK(equal(haarlab::apply(integral_operator(g, x), f), convolve(g, x, f)));
  }
}

TEST_CASE("x * x~ gives a positive semidefinite Hermitian operator") {
  const FiniteGroup g = builtin_group("S3");
  std::mt19937_64 rng(5);
  const auto x = random_numeric(6, rng);
  const auto k = integral_operator(g, convolve(g, x, involution(g, x)));
  CMatrix m(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) = k(i, j);
  CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-13);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  CHECK(es.eigenvalues().minCoeff() > -1e-13);
}

TEST_CASE("Bessel inequality and completeness") {
  const FiniteGroup g = builtin_group("S3");
  const int e = 3;
  const MatrixRep<Cyclotomic> triv{1, std::vector<SquareMatrix<Cyclotomic>>(6, SquareMatrix<Cyclotomic>(1, Cyclotomic(e, 1)))};
  const std::vector<MatrixRep<Cyclotomic>> all{triv, sign_rep(g, e), standard_rep(g, e)};
  std::mt19937_64 rng(6);
  const Exact x = random_exact(6, e, rng);
  // standard_rep is not unitary, so use the numeric unitary irreducibles for the sum
  const RegularDecomposition d = regular_rep_oracle(g);
  std::vector<MatrixRep<Complex>> unitary;
  for (const FiniteRep& r : d.irreps) unitary.push_back(to_matrix_rep(r));
  const auto xn = numeric(x);
  const auto full = bessel(g, xn, unitary);
  CHECK(std::abs(full.first - full.second) < 1e-12);
  const auto partial = bessel(g, xn, std::vector<MatrixRep<Complex>>{unitary[0], unitary[1]});
  CHECK(partial.first.real() <= partial.second.real() + 1e-12);
  // exact one-dimensional terms
  const auto ex = bessel(g, x, std::vector<MatrixRep<Cyclotomic>>{all[0], all[1]});
  CHECK(std::abs(ex.first.to_complex() - partial.first) < 1e-12);
}

TEST_CASE("character projections") {
  const FiniteGroup g = builtin_group("S3");
  const ConjClasses cls = conjugacy_classes(g);
  const CharacterTable t = solve_character_equation(g);
  const MatrixRep<Cyclotomic> std2 = standard_rep(g, t.exponent);
  const Exact chi = exact_character(g, cls, t, 2);
  const Exact m01 = matrix_element(std2, 0, 1);
  CHECK(equal(character_projection(g, chi, 2, m01), m01));
  const Exact sgn = matrix_element(sign_rep(g, t.exponent), 0, 0);
  CHECK(equal(character_projection(g, chi, 2, sgn), Exact(6, Cyclotomic(t.exponent))));
  std::mt19937_64 rng(7);
  const Exact f = random_exact(6, t.exponent, rng);
  const Exact p = character_projection(g, chi, 2, f);
  CHECK(equal(character_projection(g, chi, 2, p), p));
  // self-adjoint: <P f, h> = <f, P h>
  const Exact h = random_exact(6, t.exponent, rng);
  CHECK(inner(g, p, h) == inner(g, f, character_projection(g, chi, 2, h)));
  // the projections over all irreducibles sum to the identity
  Exact sum(6, Cyclotomic(t.exponent));
  for (int i = 0; i < t.size(); ++i) {
    const Exact q = character_projection(g, exact_character(g, cls, t, i), t.degrees[i], f);
    for (int s = 0; s < 6; ++s) sum[s] += q[s];
  }
  CHECK(equal(sum, f));
}

TEST_CASE("size mismatches are rejected") {
  const FiniteGroup g = builtin_group("S3");
  CHECK_THROWS_AS(convolve(g, FiniteFunction<Complex>(5, 1.0), FiniteFunction<Complex>(6, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(standard_rep(FiniteGroup({{0, 1}, {1, 0}})), std::invalid_argument);  // no permutation realization
}
