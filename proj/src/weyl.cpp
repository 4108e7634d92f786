#include "haarlab/weyl.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace haarlab {

int rank_of(int n) { return n / 2; }

GroupElement cartan_element(const CartanAngles& a, int n) {
  if (static_cast<int>(a.phi.size()) != rank_of(n))
    throw std::invalid_argument("cartan_element: need floor(n/2) angles");
  CMatrix m = CMatrix::Identity(n, n);
  for (int j = 0; j < rank_of(n); ++j) {
    const double c = std::cos(a.phi[j]), s = std::sin(a.phi[j]);
    m(2 * j, 2 * j) = c;
    m(2 * j, 2 * j + 1) = -s;
    m(2 * j + 1, 2 * j) = s;
    m(2 * j + 1, 2 * j + 1) = c;
  }
  return GroupElement(std::move(m), GroupTag::so(n));
}

Complex xi(const std::vector<double>& alpha, const CartanAngles& a) {
  if (alpha.size() != a.phi.size()) throw std::invalid_argument("xi: length mismatch");
  double t = 0.0;
  for (std::size_t j = 0; j < alpha.size(); ++j) t += alpha[j] * a.phi[j];
  return std::polar(1.0, t);
}

RootSystem positive_roots(int n) {
  if (n < 3) throw std::invalid_argument("positive_roots: n must be >= 3");
  RootSystem rs;
  rs.nu = rank_of(n);
  rs.type = n % 2 == 1 ? RootType::B : RootType::D;
  const int nu = rs.nu;
  for (int j = 0; j < nu; ++j)
    for (int k = j + 1; k < nu; ++k) {
      std::vector<int> minus(nu, 0), plus(nu, 0);
      minus[j] = plus[j] = plus[k] = 1;
      minus[k] = -1;
      rs.positive_roots.push_back(minus);
      rs.positive_roots.push_back(plus);
    }
  if (rs.type == RootType::B)
    for (int j = 0; j < nu; ++j) {
      std::vector<int> e(nu, 0);
      e[j] = 1;
      rs.positive_roots.push_back(e);
    }
  for (int j = 0; j < nu; ++j)
    rs.rho.push_back(rs.type == RootType::B ? (2.0 * (nu - j) - 1.0) / 2.0 : nu - 1.0 - j);
  return rs;
}

Complex weyl_denominator(const CartanAngles& a, int n) {
  const RootSystem rs = positive_roots(n);
  if (a.phi.size() != static_cast<std::size_t>(rs.nu))
    throw std::invalid_argument("weyl_denominator: need floor(n/2) angles");
  Complex d(1.0, 0.0);
  std::vector<double> half(rs.nu), neg(rs.nu);
  for (const auto& alpha : rs.positive_roots) {
    for (int j = 0; j < rs.nu; ++j) {
      half[j] = 0.5 * alpha[j];
      neg[j] = -0.5 * alpha[j];
    }
    d *= xi(half, a) - xi(neg, a);
  }
  return d;
}

double weyl_denominator_sq(const CartanAngles& a, int n) { return std::norm(weyl_denominator(a, n)); }

namespace {

// Normalized trapezoid sum over the nu-torus of g(phi).
template <class G>
Complex torus_average(int nu, int nodes, G&& g) {
  if (nodes < 2) throw std::invalid_argument("torus quadrature: need >= 2 nodes per angle");
  std::size_t total = 1;
  for (int j = 0; j < nu; ++j) total *= static_cast<std::size_t>(nodes);
  std::vector<Complex> partial(total);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(total); ++i) {
    CartanAngles a;
    std::size_t rest = static_cast<std::size_t>(i);
    for (int j = 0; j < nu; ++j) {
      a.phi.push_back(2.0 * kPi * static_cast<double>(rest % nodes) / nodes);
      rest /= nodes;
    }
    partial[i] = g(a);
  }
  Complex s(0.0, 0.0);
  for (const Complex& v : partial) s += v;
  return s / static_cast<double>(total);
}

}  // namespace

WeylData weyl_group_order(int n, int torus_nodes) {
  const int nu = rank_of(n);
  positive_roots(n);  // validates n
  const Complex c = torus_average(nu, torus_nodes, [n](const CartanAngles& a) {
    return Complex(weyl_denominator_sq(a, n), 0.0);
  });
  WeylData w;
  w.calibration_integral = c.real();
  w.order = std::llround(c.real());
  if (std::abs(c.real() - static_cast<double>(w.order)) > 1e-6 || w.order < 1)
    throw ResolutionError("weyl_group_order: calibration integral " + std::to_string(c.real()) +
                          " is not an integer");
  return w;
}

WeylIntegral weyl_integrate(const GroupFunction& f, int n, int torus_nodes, std::uint64_t seed) {
  const WeylData w = weyl_group_order(n, torus_nodes);
  const int nu = rank_of(n);
  WeylIntegral out;
  out.weyl_order = w.order;

  HaarSampler sampler(ChartSpec::so(n), seed);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int t = 0; t < 10; ++t) {
    const CMatrix v = sampler.next().entries();
    CartanAngles a;
    for (int j = 0; j < nu; ++j) a.phi.push_back(angle(rng));
    const CMatrix h = cartan_element(a, n).entries();
    out.class_function_defect =
        std::max(out.class_function_defect, std::abs(f(v * h * v.adjoint()) - f(h)));
  }
  out.class_function_warning = out.class_function_defect > 1e-8;

  const Complex s = torus_average(nu, torus_nodes, [&](const CartanAngles& a) {
    return f(cartan_element(a, n).entries()) * weyl_denominator_sq(a, n);
  });
  out.value = s / static_cast<double>(w.order);
  return out;
}

}  // namespace haarlab
