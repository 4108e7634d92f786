#include "haarlab/representation.hpp"

#include <cmath>
#include <stdexcept>

#include "haarlab/polynomial.hpp"

namespace haarlab {

Representation trivial_rep() {
  return {1, [](const CMatrix&) { return CMatrix::Identity(1, 1); }, "trivial"};
}

Representation defining_rep(int n) {
  return {n, [](const CMatrix& g) { return g; }, "defining"};
}

Representation sym_power_rep(int n, int p) {
  if (p < 0) throw std::invalid_argument("sym_power_rep: p must be >= 0");
  return {monomial_count(n, p), [p](const CMatrix& g) { return symmetric_power_action(g, p); },
          "sym^" + std::to_string(p)};
}

Representation direct_sum(const Representation& a, const Representation& b) {
  const int da = a.dim, db = b.dim;
  auto ea = a.evaluate, eb = b.evaluate;
  return {da + db,
          [=](const CMatrix& g) {
            CMatrix m = CMatrix::Zero(da + db, da + db);
            m.topLeftCorner(da, da) = ea(g);
            m.bottomRightCorner(db, db) = eb(g);
            return m;
          },
          a.label + "+" + b.label};
}

Representation conjugated(const Representation& rep, const CMatrix& s) {
  if (s.rows() != rep.dim || s.cols() != rep.dim)
    throw std::invalid_argument("conjugated: matrix size does not match the representation");
  const CMatrix sinv = s.inverse();
  auto e = rep.evaluate;
  return {rep.dim, [=](const CMatrix& g) { return CMatrix(s * e(g) * sinv); },
          rep.label + " (conjugated)"};
}

double multiplicativity_defect(const Representation& rep, const ChartSpec& chart, int pairs,
                               std::uint64_t seed) {
  HaarSampler s(chart, seed);
  const CMatrix id = CMatrix::Identity(chart.n, chart.n);
  double d = (rep.evaluate(id) - CMatrix::Identity(rep.dim, rep.dim)).cwiseAbs().maxCoeff();
  for (int i = 0; i < pairs; ++i) {
    const CMatrix g = s.next().entries(), h = s.next().entries();
    d = std::max(d, (rep.evaluate(g * h) - rep.evaluate(g) * rep.evaluate(h)).cwiseAbs().maxCoeff());
  }
  return d;
}

double unitarity_defect(const Representation& rep, const ChartSpec& chart, int samples,
                        std::uint64_t seed) {
  HaarSampler s(chart, seed);
  double d = 0.0;
  for (int i = 0; i < samples; ++i) {
    const CMatrix r = rep.evaluate(s.next().entries());
    d = std::max(d, (r.adjoint() * r - CMatrix::Identity(rep.dim, rep.dim)).cwiseAbs().maxCoeff());
  }
  return d;
}

namespace {

CMatrix integrate_matrix(const std::function<CMatrix(const CMatrix&)>& f, int rows, int cols,
                         const ChartSpec& chart, const QuadratureSpec& q) {
  const BatchFunction batch = [&](const CMatrix& g, std::span<Complex> out) {
    const CMatrix m = f(g);
    for (int c = 0; c < cols; ++c)
      for (int r = 0; r < rows; ++r) out[c * rows + r] = m(r, c);
  };
  const std::vector<Complex> v =
      integrate_batch(batch, static_cast<std::size_t>(rows) * cols, chart, q);
  CMatrix m(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) m(r, c) = v[c * rows + r];
  return m;
}

}  // namespace

Representation unitarize(const Representation& rep, const ChartSpec& chart,
                         const QuadratureSpec& q) {
  const auto e = rep.evaluate;
  CMatrix G = integrate_matrix(
      [&](const CMatrix& g) {
        const CMatrix r = e(g);
        return CMatrix(r.adjoint() * r);
      },
      rep.dim, rep.dim, chart, q);
  G = 0.5 * (G + G.adjoint());
  const Eigen::SelfAdjointEigenSolver<CMatrix> es(G, Eigen::EigenvaluesOnly);
  if (!(es.eigenvalues().minCoeff() > 1e-12 * es.eigenvalues().maxCoeff()))
    throw std::runtime_error("unitarize: averaged Gram matrix is numerically singular");
  const Eigen::LLT<CMatrix> llt(G);
  // G = L L^* = S^* S with S = L^*.
  const CMatrix S = llt.matrixL().adjoint();
  const CMatrix Sinv = S.inverse();
  return {rep.dim, [=](const CMatrix& g) { return CMatrix(S * e(g) * Sinv); },
          rep.label + " (unitarized)"};
}

SchurAverage schur_average(const Representation& rep, const CMatrix& U, const ChartSpec& chart,
                           const QuadratureSpec& q) {
  if (U.rows() != rep.dim || U.cols() != rep.dim)
    throw std::invalid_argument("schur_average: U must be dim x dim");
  const auto e = rep.evaluate;
  SchurAverage out;
  // g^{-1} is the adjoint for SO(n) and SU(n); rep(g^{-1}) is evaluated directly
  // so the average is correct for non-unitary representations too.
  out.V = integrate_matrix(
      [&](const CMatrix& g) { return CMatrix(e(g.adjoint()) * U * e(g)); }, rep.dim, rep.dim,
      chart, q);
  const Complex scalar = out.V.trace() / static_cast<double>(rep.dim);
  out.deviation_from_scalar =
      (out.V - scalar * CMatrix::Identity(rep.dim, rep.dim)).cwiseAbs().maxCoeff();
  return out;
}

CMatrix matrix_element_gram(const std::vector<Representation>& reps, const ChartSpec& chart,
                            const QuadratureSpec& q) {
  int total = 0;
  for (const auto& r : reps) total += r.dim * r.dim;
  const std::size_t t = static_cast<std::size_t>(total);
  const BatchFunction batch = [&](const CMatrix& g, std::span<Complex> out) {
    std::vector<Complex> v;
    v.reserve(t);
    for (const auto& r : reps) {
      const CMatrix m = r.evaluate(g);
      for (int a = 0; a < r.dim; ++a)
        for (int b = 0; b < r.dim; ++b) v.push_back(m(a, b));
    }
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) out[i * t + j] = v[i] * std::conj(v[j]);
  };
  const std::vector<Complex> s = integrate_batch(batch, t * t, chart, q);
  CMatrix gram(total, total);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) gram(i, j) = s[i * t + j];
  return gram;
}

CMatrix schur_pattern(const std::vector<Representation>& reps) {
  int total = 0;
  for (const auto& r : reps) total += r.dim * r.dim;
  CMatrix p = CMatrix::Zero(total, total);
  int offset = 0;
  for (const auto& r : reps) {
    for (int a = 0; a < r.dim; ++a)
      for (int b = 0; b < r.dim; ++b) {
        const int i = offset + a * r.dim + b;
        p(i, i) = 1.0 / r.dim;
      }
    offset += r.dim * r.dim;
  }
  return p;
}

Complex matrix_element_inner(const Representation& rep1, int a, int b, const Representation& rep2,
                             int c, int d, const ChartSpec& chart, const QuadratureSpec& q) {
  if (a < 0 || b < 0 || a >= rep1.dim || b >= rep1.dim || c < 0 || d < 0 || c >= rep2.dim ||
      d >= rep2.dim)
    throw std::out_of_range("matrix_element_inner: index outside the representation");
  return integrate(
      [&](const CMatrix& g) { return rep1.evaluate(g)(a, b) * std::conj(rep2.evaluate(g)(c, d)); },
      chart, q);
}

CMatrix character_gram(const std::vector<Representation>& reps, const ChartSpec& chart,
                       const QuadratureSpec& q) {
  const std::size_t k = reps.size();
  const BatchFunction batch = [&](const CMatrix& g, std::span<Complex> out) {
    std::vector<Complex> chi(k);
    for (std::size_t i = 0; i < k; ++i) chi[i] = reps[i].character(g);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) out[i * k + j] = chi[i] * std::conj(chi[j]);
  };
  const std::vector<Complex> s = integrate_batch(batch, k * k, chart, q);
  CMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = s[i * k + j];
  return m;
}

Complex character_inner(const Representation& a, const Representation& b, const ChartSpec& chart,
                        const QuadratureSpec& q) {
  return character_gram({a, b}, chart, q)(0, 1);
}

CMatrix fourier_matrix(const GroupFunction& x, const Representation& rep, const ChartSpec& chart,
                       const QuadratureSpec& q) {
  return integrate_matrix(
      [&](const CMatrix& g) { return CMatrix(x(g) * rep.evaluate(g).conjugate()); }, rep.dim,
      rep.dim, chart, q);
}

BesselCheck bessel_check(const GroupFunction& x, const std::vector<Representation>& reps,
                         const ChartSpec& chart, const QuadratureSpec& q) {
  BesselCheck b;
  for (const auto& r : reps) b.lhs += r.dim * fourier_matrix(x, r, chart, q).squaredNorm();
  b.rhs = integrate([&](const CMatrix& g) { return Complex(std::norm(x(g)), 0.0); }, chart, q).real();
  return b;
}

GroupFunction character_projection(const Representation& rep, const GroupFunction& f,
                                   const ChartSpec& chart, const QuadratureSpec& q) {
  return [rep, f, chart, q](const CMatrix& u) {
    const Complex v = integrate(
        [&](const CMatrix& s) { return rep.character(u * s.adjoint()) * f(s); }, chart, q);
    return static_cast<double>(rep.dim) * v;
  };
}

}  // namespace haarlab
