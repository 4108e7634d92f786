#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "haarlab/cyclotomic.hpp"
#include "haarlab/finite_group.hpp"
#include "haarlab/types.hpp"

namespace haarlab {

struct RationalMatrix {
  int n = 0;
  std::vector<mpq_class> a;

  RationalMatrix() = default;
  explicit RationalMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}
  mpq_class& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const mpq_class& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  RationalMatrix operator*(const RationalMatrix& o) const;
  bool operator==(const RationalMatrix& o) const { return n == o.n && a == o.a; }
  bool is_identity() const;
  CMatrix to_complex() const;
};

/// (M_a)_{cb} = h_{c'ab} / (h_a h_b): multiplication by e_a = X_a / h_a on
/// the basis e_b of the class algebra, column b holding the image of e_b.
/// A normalized character F (F_a = chi_a / f) satisfies F M_a = F_a F.
std::vector<RationalMatrix> class_matrices(const FiniteGroup& g, const ConjClasses& cls,
                                           const StructureConstants& sc);

/// Rows are characters, columns are classes in ConjClasses order.
struct CharacterTable {
  std::vector<int> class_sizes;
  std::vector<int> representatives;
  std::vector<int> degrees;
  CMatrix values;
  /// Exact entries over Q(zeta_exponent); empty for purely numeric tables.
  std::vector<std::vector<Cyclotomic>> exact;
  int exponent = 1;

  int size() const { return static_cast<int>(degrees.size()); }
  bool has_exact() const { return !exact.empty(); }
};

class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rows sorted by degree, then by entries compared class by class with larger
/// real part first, then larger imaginary part first.
void canonicalize_rows(CharacterTable& t);

/// Simultaneous left eigenvectors of the class matrices, found in floating
/// point, then lifted to exact cyclotomic values through the eigenvalue
/// multiplicities of each class representative. The result is verified
/// exactly against the character equation before it is returned.
CharacterTable solve_character_equation(const FiniteGroup& g, std::uint64_t seed = 1);

/// Irreducible matrix representation, one matrix per group element.
struct FiniteRep {
  int dim = 0;
  std::vector<CMatrix> at;
};

struct RegularDecomposition {
  CharacterTable table;        ///< numeric only, canonical row order
  std::vector<FiniteRep> irreps;  ///< aligned with table rows
};

/// Splits the left regular representation with the eigenspaces of a random
/// Hermitian element of its commutant (right translations). Throws
/// std::length_error when the order exceeds `cap`.
RegularDecomposition regular_rep_oracle(const FiniteGroup& g, std::uint64_t seed = 2024, int cap = 64);

/// Largest entry difference under the best row matching; +inf if some row has
/// no partner within `tol`.
double tables_match(const CharacterTable& a, const CharacterTable& b, double tol = 1e-8);

/// det of the h x h matrix with (P, Q) entry x_{PQ^{-1}}.
Complex group_determinant(const FiniteGroup& g, const std::vector<Complex>& x);

struct FactorizationReport {
  int trials = 0;
  double general_residual = 0.0;         ///< Theta vs prod det(sum pi(R) x_R)^f
  double class_constant_residual = 0.0;  ///< Theta vs prod xi^{f^2}
  double class_algebra_residual = 0.0;   ///< det(sum y_b h_b M_b) vs prod xi
  std::vector<int> expected_exponents;   ///< f^2 per irreducible
  std::vector<double> fitted_exponents;  ///< least squares on log|.|, needs trials >= k
  double exponent_defect = 0.0;
  bool pass = true;
};

FactorizationReport verify_factorization(const FiniteGroup& g, const RegularDecomposition& irreps,
                                         int trials, std::uint64_t seed = 1, double tol = 1e-8);

struct CheckReport {
  bool exact = false;        ///< evaluated in cyclotomic arithmetic
  double max_residual = 0.0; ///< magnitude of the worst defect
  bool pass = true;
};

struct AxiomReport {
  bool exact = false;
  double identity_degree = 0.0;  ///< chi(E) = f
  double class_function = 0.0;   ///< chi(AB) = chi(BA)
  double product_rule = 0.0;     ///< h chi(A) chi(B) = f sum_R chi(A R^{-1} B R)
  double norm = 0.0;             ///< h = sum_R chi(R) chi(R^{-1})
  bool pass = true;
};

struct OrthogonalityReport {
  bool exact = false;
  double rows = 0.0;
  double columns = 0.0;
  bool degree_sum = true;  ///< sum f^2 = h
  bool divisibility = true;  ///< every f divides h
  bool nonsingular = true;
  bool pass = true;
};

/// Numeric tables are checked to `tol` times the natural scale h; exact
/// tables must satisfy every identity exactly.
CheckReport character_equation_check(const FiniteGroup& g, const ConjClasses& cls,
                                      const StructureConstants& sc, const CharacterTable& t,
                                      double tol = 1e-10);
AxiomReport frobenius_axiom_check(const FiniteGroup& g, const ConjClasses& cls,
                                  const CharacterTable& t, double tol = 1e-10);
OrthogonalityReport orthogonality_check(const ConjClasses& cls, const CharacterTable& t,
                                        double tol = 1e-10);

/// "a/b" for rationals, otherwise the 12-digit decimal value.
std::string render_entry(const CharacterTable& t, int row, int col);
/// Minimal polynomial of an irrational exact entry, e.g. "x^2 + x + 1"; empty otherwise.
std::string entry_annotation(const CharacterTable& t, int row, int col);

}  // namespace haarlab
