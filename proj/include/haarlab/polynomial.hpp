#pragma once

#include <map>
#include <string>
#include <vector>

#include "haarlab/charts.hpp"
#include "haarlab/group_element.hpp"
#include "haarlab/quadrature.hpp"

namespace haarlab {

using Exponent = std::vector<int>;

/// Graded lexicographic order: lower total degree first; within a degree,
/// larger leading exponents first (x1^2, x1 x2, x2^2, ...).
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// All exponent vectors of total degree `degree` in `nvars` variables, in
/// graded-lex order.
std::vector<Exponent> monomials(int nvars, int degree);
/// All exponent vectors of degree <= max_degree, ascending degree.
std::vector<Exponent> monomials_up_to(int nvars, int max_degree);
/// (n+p-1)! / (p! (n-1)!)
int monomial_count(int nvars, int degree);

/// Sparse polynomial with complex coefficients over a fixed variable count.
class Polynomial {
 public:
  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, Complex c);
  static Polynomial variable(int nvars, int index);
  static Polynomial monomial(const Exponent& e, Complex c = 1.0);

  int nvars() const { return nvars_; }
  int degree() const;
  const std::map<Exponent, Complex, GradedLex>& terms() const { return terms_; }
  Complex coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, Complex c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(Complex c) const;

  Complex evaluate(const std::vector<Complex>& x) const;
  /// Replace each variable x_j by sum_k m(j, k) x_k.
  Polynomial substitute_linear(const CMatrix& m) const;
  /// Dense coefficients on monomials_up_to(nvars, max_degree).
  std::vector<Complex> dense(int max_degree) const;
  static Polynomial from_dense(int nvars, int max_degree, const std::vector<Complex>& c,
                               double drop_below = 0.0);

  /// Coefficientwise comparison.
  double max_difference(const Polynomial& o) const;
  std::string to_string(const std::vector<std::string>& names = {}, int digits = 10) const;

 private:
  int nvars_;
  std::map<Exponent, Complex, GradedLex> terms_;
};

/// Phi(a; x) = sum_j a_j p_j(x) over the degree-p monomials p_j in n
/// variables, graded-lex order.
struct PolyForm {
  int n = 2;
  int p = 2;
  std::vector<Complex> a;

  PolyForm(int n, int p);
  PolyForm(int n, int p, std::vector<Complex> a);
  int size() const { return static_cast<int>(a.size()); }
  Complex evaluate(const std::vector<Complex>& x) const;
  /// Names a_{e} for the coefficient variables, e.g. "a[2,0,0]".
  std::vector<std::string> coefficient_names() const;
};

/// P_g with p_j(g x) = sum_k P_g(j, k) p_k(x).
CMatrix symmetric_power_action(const CMatrix& g, int p);
CMatrix symmetric_power_action(const GroupElement& g, int p);

/// Action on form coefficients: a' = (P_g^T)^{-1} a = P_{g^{-1}}^T a, so that
/// Phi(a'; x) = Phi(a; g^{-1} x).
CMatrix coefficient_action(const CMatrix& g, int p);

/// J(a) = integral of F(a') dg. F is a polynomial in form.size() variables.
Polynomial invariant_project(const Polynomial& F, const PolyForm& form, const ChartSpec& chart,
                             const QuadratureSpec& q = {});
std::vector<Polynomial> invariant_project_many(const std::vector<Polynomial>& Fs, int p,
                                               const ChartSpec& chart,
                                               const QuadratureSpec& q = {});

struct InvariantCount {
  double value = 0.0;
  long long nearest = 0;
  double distance = 0.0;
};

/// Integral of the character of S^r(coefficient action) on degree-p forms,
/// the number of linearly independent degree-r invariants. Throws
/// ResolutionError if the value is farther than `threshold` from an integer.
InvariantCount invariant_dimension(int p, int r, const ChartSpec& chart,
                                   const QuadratureSpec& q = {}, double threshold = 1e-3);

/// A basis of degree-r invariants of degree-p forms: projections of every
/// degree-r monomial, reduced to row echelon form.
std::vector<Polynomial> invariant_basis(int p, int r, const ChartSpec& chart,
                                        const QuadratureSpec& q = {}, double tol = 1e-8);

}  // namespace haarlab
