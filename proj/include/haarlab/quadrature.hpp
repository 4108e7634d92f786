#pragma once

#include <string>
#include <vector>

#include "haarlab/types.hpp"

namespace haarlab {

/// Shape of the one-dimensional weight attached to a chart angle.
enum class WeightKind {
  Uniform,      ///< 1
  SinPower,     ///< sin(t)^p, used on ranges where sin >= 0
  AbsSinPower,  ///< |sin(t)|^p
  CosSinPower,  ///< cos(t) sin(t)^p
  AbsCosSinPower,  ///< |cos(t)| sin(t)^p
};

/// A chart angle's range together with its weight. Integrals over a chart
/// box factor into a product of these one-dimensional measures.
struct AngleMeasure {
  double lo = 0.0;
  double hi = 2.0 * kPi;
  WeightKind kind = WeightKind::Uniform;
  int power = 0;

  double weight(double t) const;
  /// Integral of the weight over [lo, x], in closed form.
  double cdf(double x) const;
  double total() const { return cdf(hi); }

  bool full_period() const;
  /// Uniform weight over a whole period: the trapezoid rule is exact there.
  bool periodic_uniform() const;
  /// Weight symmetric about the midpoint of a proper sub-period.
  bool even_subinterval() const;
};

enum class QuadratureRule {
  TrigGauss,      ///< exact for trigonometric polynomials, weight folded in
  GaussLegendre,  ///< Gauss-Legendre nodes, weight multiplied in
  Midpoint,
};

std::string to_string(QuadratureRule rule);
QuadratureRule parse_quadrature_rule(const std::string& name);

struct QuadratureSpec {
  /// For TrigGauss: each angle's rule integrates trigonometric polynomials
  /// of degree < nodes_per_angle exactly against the angle's weight.
  int nodes_per_angle = 9;
  QuadratureRule rule = QuadratureRule::TrigGauss;

  void check() const;
};

/// Nodes and weights of a one-dimensional rule. Weights already include the
/// angle's weight function.
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
  double weight_sum() const;
};

/// Rule for one chart angle.
///
/// TrigGauss picks, per measure: the trapezoid rule for uniform full-period
/// angles; a K-node Gaussian rule for weights even on a sub-period; two
/// mirrored halves for |sin|^p over a full period. CosSinPower on [0, pi/2)
/// (the SU(n) phi angles) is folded onto |cos| sin^p over [0, pi) with
/// halved weights. This is exact only jointly with the uniform psi angle of
/// the same SU(2) block: phi -> pi - phi has the same effect as psi -> psi + pi,
/// so once psi is integrated the phi integrand is symmetric about pi/2.
Rule1D make_rule(const AngleMeasure& measure, const QuadratureSpec& spec);

/// Plain Gauss-Legendre rule on [a, b] (unit weight), via Golub-Welsch.
Rule1D gauss_legendre(int count, double a, double b);

/// Gauss rule for the discrete measure {(x_i, w_i)} computed with the
/// Stieltjes procedure and Golub-Welsch.
Rule1D gauss_from_discrete_measure(const std::vector<double>& x, const std::vector<double>& w,
                                   int count);

/// Gaussian rule with `count` nodes on [lo, hi] (hi - lo < 2 pi) for a weight
/// even about the midpoint: exact for trigonometric polynomials of degree
/// < count. Uses the half-angle substitution x = sin(theta/2) / sin(omega/2).
Rule1D trig_gauss_subinterval(const AngleMeasure& measure, int count);

/// Interpolatory rule on equispaced nodes over a full period, exact for
/// trigonometric polynomials of degree < count against the weight restricted
/// to [lo, hi]. Nodes may fall outside [lo, hi]; weights may be negative.
Rule1D trig_interpolatory(const AngleMeasure& measure, int count);

}  // namespace haarlab
