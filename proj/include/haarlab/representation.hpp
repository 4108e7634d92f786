#pragma once

#include <functional>
#include <string>
#include <vector>

#include "haarlab/haar.hpp"

namespace haarlab {

/// A finite-dimensional matrix representation of a compact matrix group.
/// `evaluate` must be safe to call concurrently.
struct Representation {
  int dim = 1;
  std::function<CMatrix(const CMatrix&)> evaluate;
  std::string label;

  Complex character(const CMatrix& g) const { return evaluate(g).trace(); }
};

Representation trivial_rep();
Representation defining_rep(int n);
/// Action on degree-p polynomials via symmetric_power_action (dimension
/// C(n+p-1, p)). Not unitary for p >= 2 in the monomial basis.
Representation sym_power_rep(int n, int p);
Representation direct_sum(const Representation& a, const Representation& b);
/// s * rep(g) * s^{-1}
Representation conjugated(const Representation& rep, const CMatrix& s);

/// Largest |rep(gh) - rep(g) rep(h)| entry and |rep(I) - I| over `pairs`
/// Haar-random pairs.
double multiplicativity_defect(const Representation& rep, const ChartSpec& chart, int pairs,
                               std::uint64_t seed = 3);
/// Largest |rep(g)^* rep(g) - I| entry over `samples` random elements.
double unitarity_defect(const Representation& rep, const ChartSpec& chart, int samples,
                        std::uint64_t seed = 5);

/// G = integral of rep(g)^* rep(g); with G = S^* S (Cholesky) returns
/// S rep(g) S^{-1}, which is unitary. Throws std::runtime_error if G is not
/// numerically positive definite.
Representation unitarize(const Representation& rep, const ChartSpec& chart,
                         const QuadratureSpec& q = {});

struct SchurAverage {
  CMatrix V;
  /// |V - (tr V / dim) I| entry max; zero for irreducible reps.
  double deviation_from_scalar = 0.0;
};

/// V = integral of rep(g^{-1}) U rep(g).
SchurAverage schur_average(const Representation& rep, const CMatrix& U, const ChartSpec& chart,
                           const QuadratureSpec& q = {});

/// Integral of t1_{ab}(g) conj(t2_{cd}(g)); indices 0-based.
Complex matrix_element_inner(const Representation& rep1, int a, int b, const Representation& rep2,
                             int c, int d, const ChartSpec& chart, const QuadratureSpec& q = {});

/// Gram matrix of all matrix elements of the listed representations, in the
/// order (rep, row, col) with col fastest.
CMatrix matrix_element_gram(const std::vector<Representation>& reps, const ChartSpec& chart,
                            const QuadratureSpec& q = {});
/// The ideal pattern for pairwise inequivalent irreducibles:
/// delta_{ac} delta_{bd} / dim within a block, zero across blocks.
CMatrix schur_pattern(const std::vector<Representation>& reps);

/// <chi1, chi2> = integral of chi1 conj(chi2); Hermitian matrix for a list.
CMatrix character_gram(const std::vector<Representation>& reps, const ChartSpec& chart,
                       const QuadratureSpec& q = {});
Complex character_inner(const Representation& a, const Representation& b, const ChartSpec& chart,
                        const QuadratureSpec& q = {});

/// A(x) = integral of x(s) conj(rep(s)) ds.
CMatrix fourier_matrix(const GroupFunction& x, const Representation& rep, const ChartSpec& chart,
                       const QuadratureSpec& q = {});

struct BesselCheck {
  double lhs = 0.0;  ///< sum over reps of dim * sum |alpha_ik|^2
  double rhs = 0.0;  ///< integral of |x|^2
};

BesselCheck bessel_check(const GroupFunction& x, const std::vector<Representation>& reps,
                         const ChartSpec& chart, const QuadratureSpec& q = {});

/// (P f)(u) = dim * integral of chi(u s^{-1}) f(s) ds for the irreducible
/// `rep`. The returned function integrates on each call.
GroupFunction character_projection(const Representation& rep, const GroupFunction& f,
                                   const ChartSpec& chart, const QuadratureSpec& q = {});

}  // namespace haarlab
