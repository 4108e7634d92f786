#include "haarlab/haar.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>

#include <omp.h>

namespace haarlab {

ProductQuadrature::ProductQuadrature(const ChartSpec& chart, const QuadratureSpec& q)
    : chart_(chart), spec_(q) {
  q.check();
  for (const AngleMeasure& m : chart_.angles()) rules_.push_back(make_rule(m, q));

  std::vector<int> uses(chart_.dimension(), 0);
  for (const ChartFactor& f : chart_.factors()) {
    std::vector<int> ids{f.phi};
    if (f.psi >= 0) ids.push_back(f.psi);
    if (f.chi >= 0) ids.push_back(f.chi);
    for (int id : ids) ++uses[id];

    FactorNodes fn;
    fn.a = f.a;
    std::vector<std::size_t> idx(ids.size(), 0);
    std::vector<double> t(chart_.dimension(), 0.0);
    while (true) {
      double w = 1.0;
      for (std::size_t k = 0; k < ids.size(); ++k) {
        t[ids[k]] = rules_[ids[k]].nodes[idx[k]];
        w *= rules_[ids[k]].weights[idx[k]];
      }
      fn.blocks.push_back(f.block(t));
      fn.weights.push_back(w);
      std::size_t k = 0;
      while (k < ids.size() && ++idx[k] == rules_[ids[k]].size()) idx[k++] = 0;
      if (k == ids.size()) break;
    }
    factors_.push_back(std::move(fn));
  }
  for (int u : uses)
    if (u != 1) throw std::logic_error("chart factors must use every angle exactly once");
}

std::size_t ProductQuadrature::node_count() const {
  std::size_t c = 1;
  for (const Rule1D& r : rules_) c *= r.size();
  return c;
}

double ProductQuadrature::weight_total() const {
  double w = 1.0;
  for (const Rule1D& r : rules_) w *= r.weight_sum();
  return w;
}

std::vector<Complex> ProductQuadrature::sum(const BatchFunction& f, std::size_t count,
                                            Kernel kernel) const {
  return kernel == Kernel::Fast ? sum_fast(f, count) : sum_reference(f, count);
}

namespace {

inline void apply_block(const CMatrix& in, CMatrix& out, int a, const Eigen::Matrix2cd& b) {
  out = in;
  out.col(a) = in.col(a) * b(0, 0) + in.col(a + 1) * b(1, 0);
  out.col(a + 1) = in.col(a) * b(0, 1) + in.col(a + 1) * b(1, 1);
}

}  // namespace

std::vector<Complex> ProductQuadrature::sum_fast(const BatchFunction& f, std::size_t count) const {
  const int levels = static_cast<int>(factors_.size());
  const int n = chart_.n();
  // Parallelize over the first factor's nodes, or the first two when the
  // first alone gives too little work to share.
  const int outer_levels = (levels >= 2 && factors_[0].blocks.size() < 64) ? 2 : 1;
  const std::size_t n0 = factors_[0].blocks.size();
  const std::size_t n1 = outer_levels == 2 ? factors_[1].blocks.size() : 1;
  const std::size_t outer = n0 * n1;

  std::vector<std::vector<Complex>> partial(outer);
  std::exception_ptr failure;

#pragma omp parallel
  {
    std::vector<CMatrix> stack(levels + 1, CMatrix::Identity(n, n));
    std::vector<Complex> buf(count);

#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t o = 0; o < static_cast<std::ptrdiff_t>(outer); ++o) {
      std::vector<Complex> acc(count, Complex(0.0, 0.0));
      try {
        const std::size_t i0 = static_cast<std::size_t>(o) / n1;
        const std::size_t i1 = static_cast<std::size_t>(o) % n1;
        double w = factors_[0].weights[i0];
        apply_block(stack[0], stack[1], factors_[0].a, factors_[0].blocks[i0]);
        if (outer_levels == 2) {
          w *= factors_[1].weights[i1];
          apply_block(stack[1], stack[2], factors_[1].a, factors_[1].blocks[i1]);
        }
        // Iterative depth-first walk over the remaining factors.
        std::vector<std::size_t> idx(levels, 0);
        std::vector<double> wstack(levels + 1, 0.0);
        wstack[outer_levels] = w;
        int level = outer_levels;
        if (level == levels) {
          f(stack[levels], buf);
          for (std::size_t c = 0; c < count; ++c) acc[c] += w * buf[c];
        } else {
          idx[level] = 0;
          while (level >= outer_levels) {
            const FactorNodes& fn = factors_[level];
            if (idx[level] == fn.blocks.size()) {
              --level;
              if (level >= outer_levels) ++idx[level];
              continue;
            }
            const std::size_t i = idx[level];
            const double wl = wstack[level] * fn.weights[i];
            apply_block(stack[level], stack[level + 1], fn.a, fn.blocks[i]);
            if (level + 1 == levels) {
              f(stack[levels], buf);
              for (std::size_t c = 0; c < count; ++c) acc[c] += wl * buf[c];
              ++idx[level];
            } else {
              wstack[level + 1] = wl;
              ++level;
              idx[level] = 0;
            }
          }
        }
      } catch (...) {
#pragma omp critical(haarlab_quadrature_failure)
        if (!failure) failure = std::current_exception();
      }
      partial[o] = std::move(acc);
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Complex> total(count, Complex(0.0, 0.0));
  for (const auto& p : partial)
    for (std::size_t c = 0; c < count; ++c) total[c] += p[c];
  return total;
}

std::vector<Complex> ProductQuadrature::sum_reference(const BatchFunction& f,
                                                      std::size_t count) const {
  const int d = chart_.dimension();
  std::vector<std::size_t> idx(d, 0);
  std::vector<double> t(d);
  std::vector<Complex> buf(count), total(count, Complex(0.0, 0.0));
  while (true) {
    double w = 1.0;
    for (int k = 0; k < d; ++k) {
      t[k] = rules_[k].nodes[idx[k]];
      w *= rules_[k].weights[idx[k]];
    }
    f(chart_.map_unchecked(t), buf);
    for (std::size_t c = 0; c < count; ++c) total[c] += w * buf[c];
    int k = 0;
    while (k < d && ++idx[k] == rules_[k].size()) idx[k++] = 0;
    if (k == d) break;
  }
  return total;
}

std::vector<Complex> integrate_batch(const BatchFunction& f, std::size_t count,
                                     const ChartSpec& chart, const QuadratureSpec& q,
                                     Kernel kernel) {
  const ProductQuadrature pq(chart, q);
  // The constant 1 rides along as an extra output so the normalizing sum
  // is accumulated in the same order as the others: M(1) = 1 exactly.
  const BatchFunction with_one = [&f, count](const CMatrix& g, std::span<Complex> out) {
    f(g, out.first(count));
    out[count] = 1.0;
  };
  std::vector<Complex> s = pq.sum(with_one, count + 1, kernel);
  const double w = s.back().real();
  s.pop_back();
  for (Complex& v : s) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::domain_error("integrate: integrand is not finite at some node");
    v /= w;
  }
  return s;
}

Complex integrate(const GroupFunction& f, const ChartSpec& chart, const QuadratureSpec& q,
                  Kernel kernel) {
  const BatchFunction batch = [&f](const CMatrix& g, std::span<Complex> out) { out[0] = f(g); };
  return integrate_batch(batch, 1, chart, q, kernel)[0];
}

int nodes_within_budget(const ChartSpec& chart, std::size_t budget, int cap, int floor) {
  for (int k = cap; k > floor; --k) {
    QuadratureSpec q;
    q.nodes_per_angle = k;
    const Chart c(chart);
    double count = 1.0;
    for (const AngleMeasure& m : c.angles()) count *= static_cast<double>(make_rule(m, q).size());
    if (count <= static_cast<double>(budget)) return k;
  }
  return floor;
}

HaarSampler::HaarSampler(const ChartSpec& chart, std::uint64_t seed, std::uint64_t stream)
    : chart_(chart), seed_(seed), stream_(stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  rng_.seed(seq);
}

double HaarSampler::uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

double HaarSampler::invert(const AngleMeasure& m, double u) {
  const bool flat = m.kind == WeightKind::Uniform ||
                    ((m.kind == WeightKind::SinPower || m.kind == WeightKind::AbsSinPower) &&
                     m.power == 0);
  if (flat) return m.lo + u * (m.hi - m.lo);
  const double target = u * m.total();
  double lo = m.lo, hi = m.hi;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (m.cdf(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> HaarSampler::next_angles() {
  std::vector<double> t;
  t.reserve(chart_.dimension());
  for (const AngleMeasure& m : chart_.angles()) t.push_back(invert(m, uniform01()));
  return t;
}

GroupElement HaarSampler::next() {
  const std::vector<double> t = next_angles();
  return GroupElement(chart_.map_unchecked(t), chart_.spec().tag());
}

std::vector<MonteCarloEstimate> monte_carlo_batch(const BatchFunction& f, std::size_t count,
                                                  const ChartSpec& chart, std::size_t samples,
                                                  std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("monte_carlo: need at least one sample");
  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::vector<Complex>> sums(chunks);
  std::vector<std::vector<double>> squares(chunks);
  std::exception_ptr failure;
  const HaarSampler root(chart, seed);

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
    try {
      HaarSampler s = root.split(static_cast<std::uint64_t>(c));
      const std::size_t begin = static_cast<std::size_t>(c) * kChunk;
      const std::size_t end = std::min(samples, begin + kChunk);
      std::vector<Complex> sum(count, Complex(0.0, 0.0)), buf(count);
      std::vector<double> sq(count, 0.0);
      for (std::size_t i = begin; i < end; ++i) {
        f(s.next().entries(), buf);
        for (std::size_t j = 0; j < count; ++j) {
          sum[j] += buf[j];
          sq[j] += std::norm(buf[j]);
        }
      }
      sums[c] = std::move(sum);
      squares[c] = std::move(sq);
    } catch (...) {
#pragma omp critical(haarlab_mc_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  const double N = static_cast<double>(samples);
  std::vector<MonteCarloEstimate> out(count);
  for (std::size_t j = 0; j < count; ++j) {
    Complex sum(0.0, 0.0);
    double sq = 0.0;
    for (std::size_t c = 0; c < chunks; ++c) {
      sum += sums[c][j];
      sq += squares[c][j];
    }
    MonteCarloEstimate& est = out[j];
    est.samples = samples;
    est.mean = sum / N;
    const double var =
        samples > 1 ? std::max(0.0, (sq - N * std::norm(est.mean)) / (N - 1.0)) : 0.0;
    est.std_error = std::sqrt(var / N);
  }
  return out;
}

MonteCarloEstimate monte_carlo(const GroupFunction& f, const ChartSpec& chart, std::size_t samples,
                               std::uint64_t seed) {
  const BatchFunction batch = [&f](const CMatrix& g, std::span<Complex> out) { out[0] = f(g); };
  return monte_carlo_batch(batch, 1, chart, samples, seed)[0];
}

Complex conjugation_average(const GroupFunction& f, const GroupElement& g, const ChartSpec& chart,
                            const QuadratureSpec& q) {
  if (!(g.tag() == chart.tag()))
    throw std::invalid_argument("conjugation_average: element is not in " + chart.tag().name());
  const CMatrix& m = g.entries();
  return integrate([&](const CMatrix& v) { return f(v * m * v.adjoint()); }, chart, q);
}

std::vector<TestFunction> polynomial_battery(int n) {
  if (n < 2) throw std::invalid_argument("polynomial_battery: n must be >= 2");
  return {
      {"g11", [](const CMatrix& g) { return g(0, 0); }},
      {"g12*g21", [](const CMatrix& g) { return g(0, 1) * g(1, 0); }},
      {"tr", [](const CMatrix& g) { return g.trace(); }},
      {"tr^2", [](const CMatrix& g) { return g.trace() * g.trace(); }},
      {"|g11|^2", [](const CMatrix& g) { return Complex(std::norm(g(0, 0)), 0.0); }},
      {"|tr|^2", [](const CMatrix& g) { return Complex(std::norm(g.trace()), 0.0); }},
      {"g11^2*conj(g22)", [](const CMatrix& g) { return g(0, 0) * g(0, 0) * std::conj(g(1, 1)); }},
      {"|g12|^4",
       [](const CMatrix& g) { return Complex(std::norm(g(0, 1)) * std::norm(g(0, 1)), 0.0); }},
      {"tr^3", [](const CMatrix& g) { return g.trace() * g.trace() * g.trace(); }},
      {"Re(g11)*|g21|^2+g22^4",
       [](const CMatrix& g) {
         const Complex g22 = g(1, 1);
         return Complex(g(0, 0).real() * std::norm(g(1, 0)), 0.0) + g22 * g22 * g22 * g22;
       }},
  };
}

double MeanAxiomReport::max_residual() const {
  double m = 0.0;
  for (const AxiomResidual& a : axioms) m = std::max(m, a.residual);
  return m;
}

MeanAxiomReport mean_axioms_report(const ChartSpec& chart, const QuadratureSpec& q,
                                   const std::vector<TestFunction>& functions, std::uint64_t seed,
                                   int translates) {
  if (functions.empty()) throw std::invalid_argument("mean_axioms_report: no test functions");
  const std::size_t k = functions.size();
  HaarSampler sampler(chart, seed);
  std::vector<CMatrix> shifts;
  for (int i = 0; i < translates; ++i) shifts.push_back(sampler.next().entries());
  const Complex alpha(1.7, -0.4);

  // One batch per node: every variant of every function needed by the axioms.
  const std::size_t per = 6 + 2 * shifts.size();
  const BatchFunction batch = [&](const CMatrix& g, std::span<Complex> out) {
    const CMatrix ginv = g.adjoint();
    for (std::size_t i = 0; i < k; ++i) {
      Complex* o = out.data() + i * per;
      const Complex v = functions[i].f(g);
      o[0] = v;
      o[1] = alpha * v;
      o[2] = v + functions[(i + 1) % k].f(g);
      o[3] = std::norm(v);
      o[4] = 1.0;
      o[5] = functions[i].f(ginv);
      for (std::size_t s = 0; s < shifts.size(); ++s) {
        o[6 + 2 * s] = functions[i].f(g * shifts[s]);
        o[7 + 2 * s] = functions[i].f(shifts[s] * g);
      }
    }
  };
  const std::vector<Complex> r = integrate_batch(batch, k * per, chart, q);

  double res[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  for (std::size_t i = 0; i < k; ++i) {
    const Complex* o = r.data() + i * per;
    const Complex mi = o[0];
    const Complex mj = r[((i + 1) % k) * per];
    res[1] = std::max(res[1], std::abs(o[1] - alpha * mi));
    res[2] = std::max(res[2], std::abs(o[2] - mi - mj));
    res[3] = std::max(res[3], std::max(0.0, -o[3].real()) + std::abs(o[3].imag()));
    res[4] = std::max(res[4], std::abs(o[4] - 1.0));
    for (std::size_t s = 0; s < shifts.size(); ++s) {
      res[5] = std::max(res[5], std::abs(o[6 + 2 * s] - mi));
      res[6] = std::max(res[6], std::abs(o[7 + 2 * s] - mi));
    }
    res[7] = std::max(res[7], std::abs(o[5] - mi));
  }
  static const char* names[8] = {"",
                                 "homogeneity M(af) = aM(f)",
                                 "additivity M(f+g) = M(f)+M(g)",
                                 "positivity M(|f|^2) >= 0",
                                 "normalization M(1) = 1",
                                 "right invariance M(f(xa)) = M(f)",
                                 "left invariance M(f(ax)) = M(f)",
                                 "inversion M(f(x^-1)) = M(f)"};
  MeanAxiomReport report;
  for (int a = 1; a <= 7; ++a) report.axioms.push_back({a, names[a], res[a]});

  if (chart.group == GroupKind::SO) {
    const ChartSpec other =
        ChartSpec::so(chart.n, chart.kind == ChartKind::Hurwitz ? ChartKind::Alternate
                                                                : ChartKind::Hurwitz);
    const BatchFunction plain = [&](const CMatrix& g, std::span<Complex> out) {
      for (std::size_t i = 0; i < k; ++i) out[i] = functions[i].f(g);
    };
    const std::vector<Complex> a = integrate_batch(plain, k, other, q);
    double agree = 0.0;
    for (std::size_t i = 0; i < k; ++i) agree = std::max(agree, std::abs(a[i] - r[i * per]));
    report.chart_agreement = agree;
  } else {
    report.chart_agreement = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

}  // namespace haarlab
