#include "doctest.h"

#include <cmath>

#include "haarlab/haar.hpp"
#include "haarlab/polynomial.hpp"

using namespace haarlab;

namespace {

Complex g11(const CMatrix& g) { return g(0, 0); }
Complex tr2(const CMatrix& g) { return g.trace() * g.trace(); }

}  // namespace

TEST_CASE("integrate: basic SO(3) values") {
  const ChartSpec so3 = ChartSpec::so(3);
  CHECK(std::abs(integrate([](const CMatrix&) { return Complex(1.0); }, so3) - 1.0) < 1e-14);
  CHECK(std::abs(integrate(g11, so3)) < 1e-10);
  CHECK(std::abs(integrate(tr2, so3) - 1.0) < 1e-8);
}

TEST_CASE("integrate: SU(2) matrix elements") {
  const ChartSpec su2 = ChartSpec::su(2);
  CHECK(std::abs(integrate([](const CMatrix& g) { return Complex(std::norm(g(0, 0))); }, su2) - 0.5) < 1e-12);
  CHECK(std::abs(integrate([](const CMatrix& g) { return Complex(std::norm(g.trace())); }, su2) - 1.0) < 1e-12);
  CHECK(std::abs(integrate(tr2, su2) - 1.0) < 1e-12);
  CHECK(std::abs(integrate([](const CMatrix& g) { return std::pow(g.trace(), 3); }, su2)) < 1e-12);
}

TEST_CASE("integrate rejects non-finite integrands") {
  CHECK_THROWS_AS(integrate([](const CMatrix&) { return Complex(std::nan("")); }, ChartSpec::so(2)), std::domain_error);
}

TEST_CASE("fast and reference kernels agree") {
  const BatchFunction f = [](const CMatrix& g, std::span<Complex> out) {
    out[0] = std::pow(g.trace(), 3);
    out[1] = g(0, 1) * std::conj(g(1, 0)) * g(2, 2);
  };
  for (const ChartSpec& spec : {ChartSpec::so(4), ChartSpec::so(4, ChartKind::Alternate), ChartSpec::su(3)}) {
    const QuadratureSpec q{4, QuadratureRule::TrigGauss};
    const auto a = integrate_batch(f, 2, spec, q, Kernel::Fast);
    const auto b = integrate_batch(f, 2, spec, q, Kernel::Reference);
    CHECK_MESSAGE(std::abs(a[0] - b[0]) < 1e-11, spec.name());
    CHECK_MESSAGE(std::abs(a[1] - b[1]) < 1e-11, spec.name());
  }
}

TEST_CASE("chart independence: Hurwitz and alternate charts agree") {
  for (int n : {3, 4}) {
    const auto battery = polynomial_battery(n);
    const BatchFunction f = [&](const CMatrix& g, std::span<Complex> out) {
      for (std::size_t i = 0; i < battery.size(); ++i) out[i] = battery[i].f(g);
    };
    const QuadratureSpec q{6, QuadratureRule::TrigGauss};
    const auto a = integrate_batch(f, battery.size(), ChartSpec::so(n), q);
    const auto b = integrate_batch(f, battery.size(), ChartSpec::so(n, ChartKind::Alternate), q);
    for (std::size_t i = 0; i < battery.size(); ++i) CHECK_MESSAGE(std::abs(a[i] - b[i]) < 1e-7, battery[i].name);
  }
}

TEST_CASE("Gauss-Legendre and trig-gauss agree on SO(3)") {
  const QuadratureSpec gl{16, QuadratureRule::GaussLegendre};
  CHECK(std::abs(integrate(tr2, ChartSpec::so(3), gl) - 1.0) < 1e-8);
}

TEST_CASE("node budget") {
  CHECK(nodes_within_budget(ChartSpec::so(3), 1000, 9, 2) == 9);
  CHECK(nodes_within_budget(ChartSpec::so(5), 1000000, 9, 2) == 3);
  CHECK(nodes_within_budget(ChartSpec::su(3), 10, 9, 2) == 2);
}

TEST_CASE("sampler determinism and streams") {
  HaarSampler a(ChartSpec::so(4), 123), b(ChartSpec::so(4), 123);
  for (int i = 0; i < 5; ++i) CHECK(a.next_angles() == b.next_angles());
  HaarSampler c = a.split(1), d = a.split(1), e = a.split(2);
  const auto x = c.next_angles();
  CHECK(x == d.next_angles());
  CHECK(x != e.next_angles());
  CHECK(validate(HaarSampler(ChartSpec::su(3), 9).next()));
}

TEST_CASE("inverse cdf") {
  const AngleMeasure m{0.0, kPi, WeightKind::SinPower, 1};
  CHECK(HaarSampler::invert(m, 0.5) == doctest::Approx(kPi / 2).epsilon(1e-11));
  CHECK(HaarSampler::invert(m, 0.0) == doctest::Approx(0.0));
  const AngleMeasure u{0.0, 2 * kPi, WeightKind::Uniform, 0};
  CHECK(HaarSampler::invert(u, 0.25) == doctest::Approx(kPi / 2).epsilon(1e-11));
}

TEST_CASE("Monte Carlo (10^5 samples) within three standard errors") {
  const MonteCarloEstimate so = monte_carlo(g11, ChartSpec::so(3), 100000, 1);
  CHECK(so.samples == 100000);
  CHECK(std::abs(so.mean) <= 3.0 * so.std_error);
  const MonteCarloEstimate su =
      monte_carlo([](const CMatrix& g) { return Complex(std::norm(g(0, 0))); }, ChartSpec::su(2), 100000, 2);
  CHECK(std::abs(su.mean - 0.5) <= 3.0 * su.std_error);
  const MonteCarloEstimate again =
      monte_carlo([](const CMatrix& g) { return Complex(std::norm(g(0, 0))); }, ChartSpec::su(2), 100000, 2);
  CHECK(again.mean == su.mean);
}

TEST_CASE("conjugation average") {
  const ChartSpec so3 = ChartSpec::so(3);
  HaarSampler s(so3, 4);
  const GroupElement g = s.next();
  CHECK(std::abs(conjugation_average(tr2, g, so3) - tr2(g.entries())) < 1e-8);
  CHECK(std::abs(conjugation_average(g11, g, so3) - g.entries().trace() / 3.0) < 1e-8);

  const ChartSpec su2 = ChartSpec::su(2);
  const GroupElement u = HaarSampler(su2, 5).next();
  const auto f = [](const CMatrix& m) { return Complex(std::norm(m(0, 0))); };
  const Complex avg = conjugation_average(f, u, su2);
  const CMatrix ue = u.entries();
  const MonteCarloEstimate mc = monte_carlo(
      [&](const CMatrix& v) { return f(v * ue * v.adjoint()); }, su2, 1000000, 6);
  CHECK(std::abs(avg - mc.mean) <= 3.0 * mc.std_error);
}

TEST_CASE("symmetric power action") {
  CHECK((symmetric_power_action(CMatrix::Identity(3, 3), 2) - CMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() == 0.0);
  // (x, y) -> (-y, x): x^2 -> y^2, xy -> -xy, y^2 -> x^2
  const CMatrix p = symmetric_power_action(planar_rotation(1, 2, kPi / 2, 2), 2);
  CMatrix expected = CMatrix::Zero(3, 3);
  expected(0, 2) = 1.0;
  expected(1, 1) = -1.0;
  expected(2, 0) = 1.0;
  CHECK((p - expected).cwiseAbs().maxCoeff() < 1e-15);
  HaarSampler s(ChartSpec::so(3), 8);
  for (int i = 0; i < 20; ++i) {
    const CMatrix a = s.next().entries(), b = s.next().entries();
    for (int deg : {1, 2, 3})
      CHECK((symmetric_power_action(a, deg) * symmetric_power_action(b, deg) - symmetric_power_action(a * b, deg))
                .cwiseAbs()
                .maxCoeff() < 1e-10);
  }
}

TEST_CASE("monomials") {
  const auto m = monomials(3, 2);
  REQUIRE(m.size() == 6);
  CHECK(m[0] == Exponent{2, 0, 0});
  CHECK(m[1] == Exponent{1, 1, 0});
  CHECK(m[3] == Exponent{0, 2, 0});
  CHECK(m[5] == Exponent{0, 0, 2});
  CHECK(monomial_count(3, 2) == 6);
  CHECK(monomial_count(2, 5) == 6);
}

TEST_CASE("invariant_project") {
  const ChartSpec so3 = ChartSpec::so(3);
  const PolyForm form(3, 2);
  const Polynomial a11 = Polynomial::variable(6, 0);
  const Polynomial trace3 =
      (Polynomial::variable(6, 0) + Polynomial::variable(6, 3) + Polynomial::variable(6, 5)) * Complex(1.0 / 3.0);
  const Polynomial j = invariant_project(a11, form, so3);
  CHECK(j.max_difference(trace3) < 1e-8);

  const Polynomial c = Polynomial::constant(6, 2.5);
  CHECK(invariant_project(c, form, so3).max_difference(c) < 1e-12);

  // any linear functional lands on a multiple of the trace
  Polynomial lin(6);
  for (int k = 0; k < 6; ++k) lin = lin + Polynomial::variable(6, k) * Complex(0.3 * k - 0.5);
  const Polynomial jl = invariant_project(lin, form, so3);
  const Complex scale = jl.coefficient(Exponent{1, 0, 0, 0, 0, 0});
  CHECK(jl.max_difference(trace3 * (3.0 * scale)) < 1e-8);

  // fixed point and invariance under the coefficient action
  const Polynomial quad = Polynomial::variable(6, 0) * Polynomial::variable(6, 1) + Polynomial::variable(6, 3) *
                                                                                        Polynomial::variable(6, 3);
  const Polynomial jq = invariant_project(quad, form, so3);
  CHECK(invariant_project(jq, form, so3).max_difference(jq) < 1e-7);
  const CMatrix g = HaarSampler(so3, 2).next().entries();
  CHECK(jq.substitute_linear(coefficient_action(g, 2)).max_difference(jq) < 1e-7);
}

TEST_CASE("invariant_dimension and basis") {
  const ChartSpec so3 = ChartSpec::so(3);
  CHECK(invariant_dimension(2, 1, so3).nearest == 1);
  CHECK(invariant_dimension(1, 1, so3).nearest == 0);
  CHECK(invariant_dimension(1, 2, so3).nearest == 1);
  const InvariantCount k = invariant_dimension(2, 2, so3);
  CHECK(k.nearest == 2);
  CHECK(k.distance < 1e-3);
  CHECK(invariant_basis(2, 2, so3).size() == 2);
  CHECK(invariant_basis(1, 2, so3).size() == 1);
  // too coarse a rule cannot resolve a degree-4 integrand
  CHECK_THROWS_AS(invariant_dimension(2, 2, so3, QuadratureSpec{2, QuadratureRule::GaussLegendre}), ResolutionError);
}

TEST_CASE("mean axioms") {
  for (const ChartSpec& spec : {ChartSpec::so(3), ChartSpec::su(2)}) {
    const MeanAxiomReport r = mean_axioms_report(spec, QuadratureSpec{}, polynomial_battery(spec.n));
    REQUIRE(r.axioms.size() == 7);
    for (const AxiomResidual& a : r.axioms) CHECK_MESSAGE(a.residual < 1e-8, spec.name() << " axiom " << a.axiom);
    CHECK(r.axioms[3].axiom == 4);
    CHECK(r.axioms[3].residual == 0.0);
    if (spec.group == GroupKind::SO) CHECK(r.chart_agreement < 1e-8);
    else CHECK(std::isnan(r.chart_agreement));
  }
  CHECK_THROWS(mean_axioms_report(ChartSpec::so(3), {}, {}));
}
