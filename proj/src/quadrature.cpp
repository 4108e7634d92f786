#include "haarlab/quadrature.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace haarlab {

namespace {

// Integral of sin^p over [0, x] by the standard reduction formula.
double sin_power_integral(int p, double x) {
  if (p == 0) return x;
  if (p == 1) return 1.0 - std::cos(x);
  const double s = std::sin(x), c = std::cos(x);
  return -std::pow(s, p - 1) * c / p + (p - 1.0) / p * sin_power_integral(p - 2, x);
}

// Integral of |sin|^p over [0, x] for x in [0, 2 pi].
double abs_sin_power_integral(int p, double x) {
  if (x <= kPi) return sin_power_integral(p, x);
  return sin_power_integral(p, kPi) + sin_power_integral(p, x - kPi);
}

double primitive(const AngleMeasure& m, double x) {
  switch (m.kind) {
    case WeightKind::Uniform:
      return x;
    case WeightKind::SinPower:
      return sin_power_integral(m.power, x);
    case WeightKind::AbsSinPower:
      return abs_sin_power_integral(m.power, x);
    case WeightKind::CosSinPower:
      return std::pow(std::sin(x), m.power + 1) / (m.power + 1);
    case WeightKind::AbsCosSinPower: {
      const double half = std::pow(std::sin(x), m.power + 1) / (m.power + 1);
      return x <= kPi / 2 ? half : 2.0 / (m.power + 1) - half;
    }
  }
  return 0.0;
}

constexpr double kAngleSlack = 1e-14;

}  // namespace

double AngleMeasure::weight(double t) const {
  switch (kind) {
    case WeightKind::Uniform:
      return 1.0;
    case WeightKind::SinPower:
      return power == 0 ? 1.0 : std::pow(std::sin(t), power);
    case WeightKind::AbsSinPower:
      return power == 0 ? 1.0 : std::pow(std::abs(std::sin(t)), power);
    case WeightKind::CosSinPower:
      return std::cos(t) * std::pow(std::sin(t), power);
    case WeightKind::AbsCosSinPower:
      return std::abs(std::cos(t)) * std::pow(std::sin(t), power);
  }
  return 0.0;
}

double AngleMeasure::cdf(double x) const {
  if (lo != 0.0 && kind != WeightKind::Uniform)
    throw std::logic_error("AngleMeasure: weighted ranges must start at 0");
  return primitive(*this, x) - primitive(*this, lo);
}

bool AngleMeasure::full_period() const { return std::abs(hi - lo - 2.0 * kPi) < kAngleSlack; }

bool AngleMeasure::periodic_uniform() const {
  const bool flat = kind == WeightKind::Uniform ||
                    ((kind == WeightKind::SinPower || kind == WeightKind::AbsSinPower) && power == 0);
  return flat && full_period();
}

bool AngleMeasure::even_subinterval() const {
  if (hi - lo >= 2.0 * kPi - kAngleSlack) return false;
  switch (kind) {
    case WeightKind::Uniform:
      return true;
    case WeightKind::SinPower:
    case WeightKind::AbsSinPower:
    case WeightKind::AbsCosSinPower:
      // sin and |cos| are symmetric about pi/2 on [0, pi].
      if (kind != WeightKind::AbsCosSinPower && power == 0) return true;
      return std::abs(lo) < kAngleSlack && std::abs(hi - kPi) < kAngleSlack;
    case WeightKind::CosSinPower:
      return false;
  }
  return false;
}

std::string to_string(QuadratureRule rule) {
  switch (rule) {
    case QuadratureRule::TrigGauss:
      return "trig-gauss";
    case QuadratureRule::GaussLegendre:
      return "gauss-legendre";
    case QuadratureRule::Midpoint:
      return "midpoint";
  }
  return "?";
}

QuadratureRule parse_quadrature_rule(const std::string& name) {
  if (name == "trig-gauss") return QuadratureRule::TrigGauss;
  if (name == "gauss-legendre") return QuadratureRule::GaussLegendre;
  if (name == "midpoint") return QuadratureRule::Midpoint;
  throw std::invalid_argument("unknown quadrature rule '" + name + "'");
}

void QuadratureSpec::check() const {
  if (nodes_per_angle < 2) throw std::invalid_argument("quadrature: nodes_per_angle must be >= 2");
}

double Rule1D::weight_sum() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

Rule1D gauss_legendre(int count, double a, double b) {
  if (count < 1) throw std::invalid_argument("gauss_legendre: count must be positive");
  RMatrix jac = RMatrix::Zero(count, count);
  for (int k = 1; k < count; ++k) {
    const double beta = k / std::sqrt(4.0 * k * k - 1.0);
    jac(k, k - 1) = jac(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<RMatrix> es(jac);
  Rule1D rule;
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  for (int i = 0; i < count; ++i) {
    const double v0 = es.eigenvectors()(0, i);
    rule.nodes.push_back(mid + half * es.eigenvalues()(i));
    rule.weights.push_back(2.0 * v0 * v0 * half);
  }
  return rule;
}

Rule1D gauss_from_discrete_measure(const std::vector<double>& x, const std::vector<double>& w,
                                   int count) {
  const std::size_t m = x.size();
  if (w.size() != m || static_cast<std::size_t>(count) > m)
    throw std::invalid_argument("gauss_from_discrete_measure: bad sizes");
  // Stieltjes procedure on orthonormal polynomials evaluated at the support.
  std::vector<double> alpha(count), beta(count);
  std::vector<double> p_prev(m, 0.0), p_cur(m), p_next(m);
  const double mu0 = std::accumulate(w.begin(), w.end(), 0.0);
  for (std::size_t i = 0; i < m; ++i) p_cur[i] = 1.0 / std::sqrt(mu0);
  beta[0] = mu0;
  for (int k = 0; k < count; ++k) {
    double a = 0.0;
    for (std::size_t i = 0; i < m; ++i) a += w[i] * x[i] * p_cur[i] * p_cur[i];
    alpha[k] = a;
    if (k + 1 == count) break;
    const double sb = k == 0 ? 0.0 : std::sqrt(beta[k]);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      p_next[i] = (x[i] - a) * p_cur[i] - sb * p_prev[i];
      norm2 += w[i] * p_next[i] * p_next[i];
    }
    beta[k + 1] = norm2;
    const double nrm = std::sqrt(norm2);
    for (std::size_t i = 0; i < m; ++i) p_next[i] /= nrm;
    std::swap(p_prev, p_cur);
    std::swap(p_cur, p_next);
  }
  RMatrix jac = RMatrix::Zero(count, count);
  for (int k = 0; k < count; ++k) jac(k, k) = alpha[k];
  for (int k = 1; k < count; ++k) jac(k, k - 1) = jac(k - 1, k) = std::sqrt(beta[k]);
  Eigen::SelfAdjointEigenSolver<RMatrix> es(jac);
  Rule1D rule;
  for (int i = 0; i < count; ++i) {
    const double v0 = es.eigenvectors()(0, i);
    rule.nodes.push_back(es.eigenvalues()(i));
    rule.weights.push_back(mu0 * v0 * v0);
  }
  return rule;
}

Rule1D trig_gauss_subinterval(const AngleMeasure& measure, int count) {
  if (!measure.even_subinterval())
    throw std::invalid_argument("trig_gauss_subinterval: weight must be even on a sub-period");
  const double omega = 0.5 * (measure.hi - measure.lo);
  const double centre = 0.5 * (measure.hi + measure.lo);
  const double s = std::sin(0.5 * omega);
  // In x = sin(theta/2)/s the weight becomes w(theta(x)) * 2 s / sqrt(1 - s^2 x^2),
  // smooth on each half of [-1, 1] because s < 1 (the halves absorb a kink of
  // |.| at the centre). Discretize it with fine Gauss-Legendre rules.
  const int fine = std::max(120, 4 * count);
  std::vector<double> xs, ws;
  for (const Rule1D& gl : {gauss_legendre(fine, -1.0, 0.0), gauss_legendre(fine, 0.0, 1.0)})
    for (std::size_t i = 0; i < gl.size(); ++i) {
      const double x = gl.nodes[i];
      const double theta = 2.0 * std::asin(s * x);
      xs.push_back(x);
      ws.push_back(gl.weights[i] * measure.weight(centre + theta) * 2.0 * s /
                   std::sqrt(1.0 - s * s * x * x));
    }
  Rule1D rule = gauss_from_discrete_measure(xs, ws, count);
  for (double& x : rule.nodes) x = centre + 2.0 * std::asin(s * x);
  return rule;
}

Rule1D trig_interpolatory(const AngleMeasure& measure, int count) {
  const int m = 2 * count - 1;
  const int degree = count - 1;
  // Moments of e^{ik t} against the weight on [lo, hi]; the weight is a
  // trigonometric polynomial of modest degree so a fine Gauss rule is exact.
  const Rule1D gl = gauss_legendre(std::max(256, 4 * count + 4 * measure.power), measure.lo,
                                   measure.hi);
  std::vector<Complex> moments(degree + 1, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < gl.size(); ++i) {
    const double wt = gl.weights[i] * measure.weight(gl.nodes[i]);
    for (int k = 0; k <= degree; ++k) moments[k] += wt * std::polar(1.0, k * gl.nodes[i]);
  }
  Rule1D rule;
  for (int j = 0; j < m; ++j) {
    const double t = 2.0 * kPi * j / m;
    // (1/m) sum_{|k|<=d} e^{-ikt} I_k with I_{-k} = conj(I_k).
    double acc = moments[0].real();
    for (int k = 1; k <= degree; ++k) acc += 2.0 * (std::polar(1.0, -k * t) * moments[k]).real();
    rule.nodes.push_back(t);
    rule.weights.push_back(acc / m);
  }
  return rule;
}

Rule1D make_rule(const AngleMeasure& measure, const QuadratureSpec& spec) {
  spec.check();
  const int k = spec.nodes_per_angle;
  Rule1D rule;
  switch (spec.rule) {
    case QuadratureRule::TrigGauss: {
      if (measure.periodic_uniform()) {
        const double h = (measure.hi - measure.lo) / k;
        for (int j = 0; j < k; ++j) {
          rule.nodes.push_back(measure.lo + j * h);
          rule.weights.push_back(h);
        }
        return rule;
      }
      if (measure.even_subinterval()) return trig_gauss_subinterval(measure, k);
      if (measure.kind == WeightKind::AbsSinPower && measure.full_period()) {
        // Two mirror halves, each with an even weight.
        // |sin| on [pi, 2 pi] is the translate of its restriction to [0, pi].
        AngleMeasure left = measure;
        left.hi = kPi;
        const Rule1D a = trig_gauss_subinterval(left, k);
        for (std::size_t i = 0; i < a.size(); ++i) {
          rule.nodes.push_back(a.nodes[i]);
          rule.weights.push_back(a.weights[i]);
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
          rule.nodes.push_back(a.nodes[i] + kPi);
          rule.weights.push_back(a.weights[i]);
        }
        return rule;
      }
      if (measure.kind == WeightKind::CosSinPower && measure.lo == 0.0 &&
          std::abs(measure.hi - kPi / 2) < kAngleSlack) {
        const AngleMeasure folded{0.0, kPi, WeightKind::AbsCosSinPower, measure.power};
        rule = trig_gauss_subinterval(folded, k);
        for (double& w : rule.weights) w *= 0.5;
        return rule;
      }
      return trig_interpolatory(measure, k);
    }
    case QuadratureRule::GaussLegendre: {
      rule = gauss_legendre(k, measure.lo, measure.hi);
      for (std::size_t i = 0; i < rule.size(); ++i) rule.weights[i] *= measure.weight(rule.nodes[i]);
      return rule;
    }
    case QuadratureRule::Midpoint: {
      const double h = (measure.hi - measure.lo) / k;
      for (int j = 0; j < k; ++j) {
        const double t = measure.lo + (j + 0.5) * h;
        rule.nodes.push_back(t);
        rule.weights.push_back(h * measure.weight(t));
      }
      return rule;
    }
  }
  return rule;
}

}  // namespace haarlab
