#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "haarlab/charts.hpp"
#include "haarlab/quadrature.hpp"

namespace haarlab {

using GroupFunction = std::function<Complex(const CMatrix&)>;
/// Evaluates several functions at once; writes values.size() results.
using BatchFunction = std::function<void(const CMatrix&, std::span<Complex> values)>;

enum class Kernel {
  Fast,       ///< prefix products over the chart factors, OpenMP over outer nodes
  Reference,  ///< full chart map at every node, single thread
};

/// Tensor-product rule over a chart box. Node blocks are precomputed per
/// chart factor so the fast kernel only updates two columns per level.
class ProductQuadrature {
 public:
  ProductQuadrature(const ChartSpec& chart, const QuadratureSpec& q);

  const Chart& chart() const { return chart_; }
  const QuadratureSpec& spec() const { return spec_; }
  const std::vector<Rule1D>& rules() const { return rules_; }
  /// Total number of tensor nodes.
  std::size_t node_count() const;
  /// Sum of all node weights (the quadrature value of the box volume,
  /// without the density constant).
  double weight_total() const;

  /// Unnormalized weighted sums of f at every node.
  std::vector<Complex> sum(const BatchFunction& f, std::size_t count, Kernel kernel) const;

 private:
  struct FactorNodes {
    int a = 0;
    std::vector<Eigen::Matrix2cd> blocks;
    std::vector<double> weights;
  };

  std::vector<Complex> sum_fast(const BatchFunction& f, std::size_t count) const;
  std::vector<Complex> sum_reference(const BatchFunction& f, std::size_t count) const;

  Chart chart_;
  QuadratureSpec spec_;
  std::vector<Rule1D> rules_;
  std::vector<FactorNodes> factors_;
};

/// Normalized Haar integral: sum f w / sum w over the tensor nodes.
/// Throws std::domain_error if f is non-finite at some node.
Complex integrate(const GroupFunction& f, const ChartSpec& chart, const QuadratureSpec& q = {},
                  Kernel kernel = Kernel::Fast);
std::vector<Complex> integrate_batch(const BatchFunction& f, std::size_t count,
                                     const ChartSpec& chart, const QuadratureSpec& q = {},
                                     Kernel kernel = Kernel::Fast);

/// Largest nodes_per_angle (at most `cap`, at least `floor`) whose tensor
/// grid for this chart stays within `budget` nodes.
int nodes_within_budget(const ChartSpec& chart, std::size_t budget, int cap = 9, int floor = 2);

/// Haar-distributed elements via independent per-angle inverse-CDF draws.
///
/// Streams: a sampler is seeded with std::seed_seq over the 32-bit halves
/// of (seed, stream) feeding std::mt19937_64. Parallel work uses
/// split(i) for chunk i, so results do not depend on the worker count.
class HaarSampler {
 public:
  HaarSampler(const ChartSpec& chart, std::uint64_t seed, std::uint64_t stream = 0);

  const ChartSpec& chart() const { return chart_.spec(); }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  HaarSampler split(std::uint64_t stream) const { return {chart_.spec(), seed_, stream}; }

  std::vector<double> next_angles();
  GroupElement next();

  /// Inverse CDF of a single angle's marginal by bisection to 1e-12.
  static double invert(const AngleMeasure& m, double u);

 private:
  double uniform01();

  Chart chart_;
  std::uint64_t seed_, stream_;
  std::mt19937_64 rng_;
};

struct MonteCarloEstimate {
  Complex mean;
  double std_error = 0.0;  ///< sqrt(E|f - mean|^2 / N)
  std::size_t samples = 0;
};

/// Mean of f over `samples` Haar draws. Work is cut into chunks of 4096
/// draws, chunk i using stream i of the root seed.
MonteCarloEstimate monte_carlo(const GroupFunction& f, const ChartSpec& chart,
                               std::size_t samples, std::uint64_t seed);
std::vector<MonteCarloEstimate> monte_carlo_batch(const BatchFunction& f, std::size_t count,
                                                  const ChartSpec& chart, std::size_t samples,
                                                  std::uint64_t seed);

/// f°(g) = integral of f(v g v^{-1}) dv.
Complex conjugation_average(const GroupFunction& f, const GroupElement& g, const ChartSpec& chart,
                            const QuadratureSpec& q = {});

struct TestFunction {
  std::string name;
  GroupFunction f;
};

/// Entry polynomials of degree <= 4 used by the mean-axiom checks.
std::vector<TestFunction> polynomial_battery(int n);

struct AxiomResidual {
  int axiom = 0;  ///< 1..7
  std::string description;
  double residual = 0.0;
};

struct MeanAxiomReport {
  std::vector<AxiomResidual> axioms;
  /// Largest |hurwitz - alternate| over the family (SO(n) only; NaN otherwise).
  double chart_agreement = 0.0;
  double max_residual() const;
};

/// Checks linearity (1, 2), positivity (3), normalization (4), right and
/// left invariance (5, 6) and inversion invariance (7) of integrate on the
/// given family, with `translates` random group elements drawn from `seed`.
MeanAxiomReport mean_axioms_report(const ChartSpec& chart, const QuadratureSpec& q,
                                   const std::vector<TestFunction>& functions,
                                   std::uint64_t seed = 1, int translates = 3);

}  // namespace haarlab
