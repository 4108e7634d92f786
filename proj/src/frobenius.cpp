#include "haarlab/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

namespace haarlab {

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  RationalMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      if ((*this)(i, l) == 0) continue;
      for (int j = 0; j < n; ++j) r(i, j) += (*this)(i, l) * o(l, j);
    }
  return r;
}

bool RationalMatrix::is_identity() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

CMatrix RationalMatrix::to_complex() const {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = (*this)(i, j).get_d();
  return m;
}

std::vector<RationalMatrix> class_matrices(const FiniteGroup&, const ConjClasses& cls,
                                           const StructureConstants& sc) {
  const int k = cls.count();
  std::vector<RationalMatrix> out;
  for (int a = 0; a < k; ++a) {
    RationalMatrix m(k);
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        const long long num = sc.at(cls.inverse_class[c], a, b);
        if (num == 0) continue;
        m(c, b) = mpq_class(static_cast<long>(num),
                            static_cast<unsigned long>(cls.sizes[a]) * cls.sizes[b]);
        m(c, b).canonicalize();
      }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {


// Degree ascending, then entries class by class: larger real part first,
// then larger imaginary part.
std::vector<int> canonical_order(const CMatrix& values, const std::vector<int>& degrees) {
  std::vector<int> idx(degrees.size());
  std::iota(idx.begin(), idx.end(), 0);
  const double eps = 1e-9;
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
    for (int c = 0; c < values.cols(); ++c) {
      const Complex x = values(a, c), y = values(b, c);
      if (std::abs(x.real() - y.real()) > eps) return x.real() > y.real();
      if (std::abs(x.imag() - y.imag()) > eps) return x.imag() > y.imag();
    }
    return false;
  });
  return idx;
}

// Orthonormal basis of the (numerical) kernel of R - mu I of dimension m.
CMatrix eigenspace(const CMatrix& r, Complex mu, int m) {
  const CMatrix shifted = r - mu * CMatrix::Identity(r.rows(), r.cols());
  Eigen::JacobiSVD<CMatrix> svd(shifted, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(m);
}

std::vector<std::vector<int>> cluster(const CVector& ev, double tol) {
  std::vector<std::vector<int>> groups;
  std::vector<char> used(ev.size(), 0);
  for (int i = 0; i < ev.size(); ++i) {
    if (used[i]) continue;
    std::vector<int> grp{i};
    used[i] = 1;
    for (int j = i + 1; j < ev.size(); ++j)
      if (!used[j] && std::abs(ev[j] - ev[i]) < tol) {
        grp.push_back(j);
        used[j] = 1;
      }
    groups.push_back(std::move(grp));
  }
  return groups;
}

void split(const CMatrix& v, const std::vector<CMatrix>& mats, std::size_t idx,
           std::vector<CVector>& out) {
  if (v.cols() == 1) {
    out.push_back(v.col(0));
    return;
  }
  for (; idx < mats.size(); ++idx) {
    const CMatrix r = v.adjoint() * mats[idx] * v;
    const Eigen::ComplexEigenSolver<CMatrix> es(r, false);
    const CVector ev = es.eigenvalues();
    const double scale = 1.0 + ev.cwiseAbs().maxCoeff();
    const auto groups = cluster(ev, 1e-7 * scale);
    if (groups.size() == 1) continue;
    for (const auto& grp : groups) {
      Complex mu = 0.0;
      for (int i : grp) mu += ev[i];
      mu /= static_cast<double>(grp.size());
      const CMatrix w = eigenspace(r, mu, static_cast<int>(grp.size()));
      split(v * w, mats, idx + 1, out);
    }
    return;
  }
  throw InternalError("simultaneous eigenspace of dimension " + std::to_string(v.cols()) +
                      " survived every class matrix");
}

template <class T>
using Grid = std::vector<std::vector<T>>;

double defect(const Complex& d) { return std::abs(d); }
double defect(const Cyclotomic& d) {
  if (d.is_zero()) return 0.0;
  return std::max(std::abs(d.to_complex()), std::numeric_limits<double>::min());
}
Complex conj_of(const Complex& z) { return std::conj(z); }
Cyclotomic conj_of(const Cyclotomic& z) { return z.conj(); }
Complex times(const Complex& z, long long m) { return z * static_cast<double>(m); }
Cyclotomic times(const Cyclotomic& z, long long m) { return z * mpq_class(static_cast<long>(m)); }
Complex constant(long long v, const Complex&) { return Complex(static_cast<double>(v), 0.0); }
Cyclotomic constant(long long v, const Cyclotomic& like) {
  return Cyclotomic(like.order(), mpq_class(static_cast<long>(v)));
}

Grid<Complex> numeric_grid(const CharacterTable& t) {
  Grid<Complex> g(t.values.rows(), std::vector<Complex>(t.values.cols()));
  for (int i = 0; i < t.values.rows(); ++i)
    for (int j = 0; j < t.values.cols(); ++j) g[i][j] = t.values(i, j);
  return g;
}

template <class T>
double equation_residual(const ConjClasses& cls, const StructureConstants& sc,
                         const Grid<T>& chi, const std::vector<int>& degrees) {
  const int k = cls.count();
  double worst = 0.0;
  for (std::size_t r = 0; r < chi.size(); ++r) {
    const auto& x = chi[r];
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        const T lhs = times(x[b] * x[c], static_cast<long long>(cls.sizes[b]) * cls.sizes[c]);
        T rhs = constant(0, x[0]);
        for (int a = 0; a < k; ++a) {
          const long long m = sc.at(cls.inverse_class[a], b, c);
          if (m != 0) rhs += times(x[a], m * degrees[r]);
        }
        worst = std::max(worst, defect(lhs - rhs));
      }
  }
  return worst;
}

template <class T>
AxiomReport axioms(const FiniteGroup& g, const ConjClasses& cls, const Grid<T>& chi,
                   const std::vector<int>& degrees) {
  const int h = g.order(), k = cls.count();
  AxiomReport rep;
  for (std::size_t r = 0; r < chi.size(); ++r) {
    const auto& x = chi[r];
    rep.identity_degree = std::max(rep.identity_degree, defect(x[0] - constant(degrees[r], x[0])));
    for (int a = 0; a < h; ++a)
      for (int b = 0; b < h; ++b) {
        const int ab = cls.class_of[g.mul(a, b)], ba = cls.class_of[g.mul(b, a)];
        if (ab != ba) rep.class_function = std::max(rep.class_function, defect(x[ab] - x[ba]));
      }
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        const int A = cls.representatives[a], B = cls.representatives[b];
        std::vector<long long> count(k, 0);
        for (int R = 0; R < h; ++R)
          ++count[cls.class_of[g.mul(g.mul(A, g.inverse(R)), g.mul(B, R))]];
        T rhs = constant(0, x[0]);
        for (int c = 0; c < k; ++c)
          if (count[c]) rhs += times(x[c], count[c] * degrees[r]);
        rep.product_rule = std::max(rep.product_rule, defect(times(x[a] * x[b], h) - rhs));
      }
    T norm = constant(0, x[0]);
    for (int a = 0; a < k; ++a) norm += times(x[a] * x[cls.inverse_class[a]], cls.sizes[a]);
    rep.norm = std::max(rep.norm, defect(norm - constant(h, x[0])));
  }
  return rep;
}

template <class T>
void orthogonality(const ConjClasses& cls, const Grid<T>& chi, OrthogonalityReport& rep, int h) {
  const int k = cls.count();
  const int n = static_cast<int>(chi.size());
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      T s = constant(0, chi[p][0]);
      for (int a = 0; a < k; ++a) s += times(chi[p][a] * conj_of(chi[q][a]), cls.sizes[a]);
      rep.rows = std::max(rep.rows, defect(s - constant(p == q ? h : 0, chi[p][0])));
    }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      T s = constant(0, chi[0][0]);
      for (int p = 0; p < n; ++p) s += chi[p][a] * conj_of(chi[p][b]);
      // sum_p chi_a conj(chi_b) = (h / h_a) delta_ab; compare after scaling by h_a.
      const T lhs = times(s, cls.sizes[a]);
      rep.columns = std::max(rep.columns, defect(lhs - constant(a == b ? h : 0, chi[0][0])));
    }
}

}  // namespace

void canonicalize_rows(CharacterTable& t) {
  const std::vector<int> order = canonical_order(t.values, t.degrees);
  CharacterTable s = t;
  for (std::size_t i = 0; i < order.size(); ++i) {
    s.degrees[i] = t.degrees[order[i]];
    s.values.row(static_cast<Eigen::Index>(i)) = t.values.row(order[i]);
    if (t.has_exact()) s.exact[i] = t.exact[order[i]];
  }
  t = std::move(s);
}

CharacterTable solve_character_equation(const FiniteGroup& g, std::uint64_t seed) {
  const ConjClasses cls = conjugacy_classes(g);
  const StructureConstants sc = structure_constants(g, cls);
  const std::vector<RationalMatrix> ms = class_matrices(g, cls, sc);
  const int k = cls.count(), h = g.order();

  // Right eigenvectors of M^T are the left eigenvectors F of M.
  std::vector<CMatrix> mats;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(0.5, 1.5);
  CMatrix combo = CMatrix::Zero(k, k);
  for (int a = 0; a < k; ++a) {
    const double sign = (rng() & 1) ? 1.0 : -1.0;
    combo += sign * coef(rng) * ms[a].to_complex().transpose();
  }
  mats.push_back(combo);
  for (int a = 0; a < k; ++a) mats.push_back(ms[a].to_complex().transpose());

  std::vector<CVector> vecs;
  split(CMatrix::Identity(k, k), mats, 0, vecs);
  if (static_cast<int>(vecs.size()) != k)
    throw InternalError("found " + std::to_string(vecs.size()) + " characters for " +
                        std::to_string(k) + " classes");

  CharacterTable t;
  t.class_sizes = cls.sizes;
  t.representatives = cls.representatives;
  t.exponent = g.exponent();
  t.values.resize(k, k);
  for (int r = 0; r < k; ++r) {
    CVector f = vecs[r] / vecs[r][0];
    double s = 0.0;
    for (int a = 0; a < k; ++a) s += cls.sizes[a] * std::norm(f[a]);
    const double f2 = h / s;
    const double deg = std::round(std::sqrt(f2));
    if (deg < 1 || std::abs(f2 - deg * deg) > 1e-6 * h)
      throw InternalError("degree estimate " + std::to_string(f2) + " is not a perfect square");
    t.degrees.push_back(static_cast<int>(deg));
    t.values.row(r) = deg * f.transpose();
  }

  // Exact lift: chi(g) = sum_t m_t zeta_o^t where m_t counts eigenvalues of
  // the representing matrix of g equal to zeta_o^t.
  t.exact.assign(k, std::vector<Cyclotomic>(k, Cyclotomic(t.exponent)));
  for (int r = 0; r < k; ++r)
    for (int a = 0; a < k; ++a) {
      const int x = cls.representatives[a];
      const int o = g.element_order(x);
      Cyclotomic val(o);
      long long total = 0;
      for (int s = 0; s < o; ++s) {
        Complex m = 0.0;
        for (int j = 0; j < o; ++j)
          m += t.values(r, cls.class_of[g.power(x, j)]) * std::polar(1.0, -2.0 * kPi * j * s / o);
        m /= static_cast<double>(o);
        const double mr = std::round(m.real());
        if (std::abs(m - Complex(mr, 0.0)) > 1e-6 || mr < 0)
          throw InternalError("eigenvalue multiplicity " + std::to_string(m.real()) +
                              " is not a nonnegative integer");
        total += static_cast<long long>(mr);
        val += Cyclotomic::zeta(o, s) * mpq_class(static_cast<long>(mr));
      }
      if (total != t.degrees[r]) throw InternalError("eigenvalue multiplicities do not sum to the degree");
      t.exact[r][a] = val.lift(t.exponent);
      if (std::abs(t.exact[r][a].to_complex() - t.values(r, a)) > 1e-6)
        throw InternalError("exact lift disagrees with the numeric eigenvector");
      t.values(r, a) = t.exact[r][a].to_complex();
    }
  canonicalize_rows(t);
  const CheckReport eq = character_equation_check(g, cls, sc, t);
  if (!eq.pass) throw InternalError("exact character equation check failed");
  return t;
}

RegularDecomposition regular_rep_oracle(const FiniteGroup& g, std::uint64_t seed, int cap) {
  const int h = g.order();
  if (h > cap)
    throw std::length_error("regular_rep_oracle: order " + std::to_string(h) +
                            " exceeds the cost cap " + std::to_string(cap));
  const ConjClasses cls = conjugacy_classes(g);
  const int k = cls.count();
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::mt19937_64 rng(seed + 7919ULL * attempt);
    std::normal_distribution<double> normal;
    std::vector<Complex> c(h);
    for (int x = 0; x < h; ++x) {
      const int xi = g.inverse(x);
      if (x == xi) c[x] = normal(rng);
      else if (x < xi) {
        c[x] = Complex(normal(rng), normal(rng));
        c[xi] = std::conj(c[x]);
      }
    }
    // A = sum_x c_x R(x) with R(x) e_u = e_{u x^{-1}}; commutes with L(y) e_u = e_{y u}.
    CMatrix a = CMatrix::Zero(h, h);
    for (int u = 0; u < h; ++u)
      for (int x = 0; x < h; ++x) a(g.mul(u, g.inverse(x)), u) += c[x];
    const Eigen::SelfAdjointEigenSolver<CMatrix> es(a);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double tol = 1e-8 * (1.0 + ev.cwiseAbs().maxCoeff());

    RegularDecomposition out;
    std::vector<CVector> chars;  // per element
    bool ok = true;
    for (int start = 0; start < h && ok;) {
      int end = start + 1;
      while (end < h && ev[end] - ev[end - 1] < tol) ++end;
      const CMatrix q = es.eigenvectors().middleCols(start, end - start);
      const int m = end - start;
      start = end;
      CVector chi(h);
      for (int y = 0; y < h; ++y) {
        Complex s = 0.0;
        for (int u = 0; u < h; ++u) s += q.row(g.mul(y, u)).dot(q.row(u));
        chi[y] = s;
      }
      if (std::abs(chi.squaredNorm() / h - 1.0) > 1e-6) {
        ok = false;
        break;
      }
      bool seen = false;
      for (const auto& prev : chars)
        if ((prev - chi).cwiseAbs().maxCoeff() < 1e-6) seen = true;
      if (seen) continue;
      chars.push_back(chi);
      FiniteRep rep;
      rep.dim = m;
      for (int y = 0; y < h; ++y) {
        CMatrix moved(h, m);
        for (int u = 0; u < h; ++u) moved.row(g.mul(y, u)) = q.row(u);
        rep.at.push_back(q.adjoint() * moved);
      }
      out.irreps.push_back(std::move(rep));
    }
    if (!ok || static_cast<int>(chars.size()) != k) continue;
    int sum = 0;
    for (const auto& r : out.irreps) sum += r.dim * r.dim;
    if (sum != h) continue;

    CharacterTable& t = out.table;
    t.class_sizes = cls.sizes;
    t.representatives = cls.representatives;
    t.exponent = g.exponent();
    t.values.resize(k, k);
    for (int r = 0; r < k; ++r) {
      t.degrees.push_back(out.irreps[r].dim);
      for (int a = 0; a < k; ++a) t.values(r, a) = chars[r][cls.representatives[a]];
    }
    const std::vector<int> order = canonical_order(t.values, t.degrees);
    RegularDecomposition sorted = out;
    for (int r = 0; r < k; ++r) {
      sorted.table.degrees[r] = t.degrees[order[r]];
      sorted.table.values.row(r) = t.values.row(order[r]);
      sorted.irreps[r] = out.irreps[order[r]];
    }
    return sorted;
  }
  throw InternalError("regular representation did not split into irreducibles");
}

double tables_match(const CharacterTable& a, const CharacterTable& b, double tol) {
  if (a.values.rows() != b.values.rows() || a.values.cols() != b.values.cols())
    return std::numeric_limits<double>::infinity();
  const int k = static_cast<int>(a.values.rows());
  std::vector<char> used(k, 0);
  double worst = 0.0;
  for (int r = 0; r < k; ++r) {
    int best = -1;
    double bd = std::numeric_limits<double>::infinity();
    for (int s = 0; s < k; ++s) {
      if (used[s]) continue;
      const double d = (a.values.row(r) - b.values.row(s)).cwiseAbs().maxCoeff();
      if (d < bd) {
        bd = d;
        best = s;
      }
    }
    if (best < 0 || bd > tol) return std::numeric_limits<double>::infinity();
    used[best] = 1;
    worst = std::max(worst, bd);
  }
  return worst;
}

Complex group_determinant(const FiniteGroup& g, const std::vector<Complex>& x) {
  const int h = g.order();
  if (static_cast<int>(x.size()) != h)
    throw std::invalid_argument("group_determinant: need one variable per element");
  CMatrix m(h, h);
  for (int p = 0; p < h; ++p)
    for (int q = 0; q < h; ++q) m(p, q) = x[g.mul(p, g.inverse(q))];
  return m.partialPivLu().determinant();
}

FactorizationReport verify_factorization(const FiniteGroup& g, const RegularDecomposition& dec,
                                         int trials, std::uint64_t seed, double tol) {
  FactorizationReport rep;
  rep.trials = trials;
  const int h = g.order();
  const ConjClasses cls = conjugacy_classes(g);
  const StructureConstants sc = structure_constants(g, cls);
  const std::vector<RationalMatrix> ms = class_matrices(g, cls, sc);
  const int k = cls.count();
  const int nirr = static_cast<int>(dec.irreps.size());
  for (const auto& r : dec.irreps) rep.expected_exponents.push_back(r.dim * r.dim);
  if (trials <= 0) return rep;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  auto rnd = [&] { return Complex(normal(rng), normal(rng)); };
  auto rel = [](Complex a, Complex b) {
    const double s = std::max({std::abs(a), std::abs(b), std::numeric_limits<double>::min()});
    return std::abs(a - b) / s;
  };

  Eigen::MatrixXd design(trials, nirr);
  Eigen::VectorXd target(trials);
  for (int t = 0; t < trials; ++t) {
    std::vector<Complex> x(h);
    for (auto& v : x) v = rnd();
    const Complex theta = group_determinant(g, x);
    Complex prod = 1.0;
    for (const auto& r : dec.irreps) {
      CMatrix s = CMatrix::Zero(r.dim, r.dim);
      for (int R = 0; R < h; ++R) s += r.at[R] * x[R];
      prod *= std::pow(s.determinant(), r.dim);
    }
    rep.general_residual = std::max(rep.general_residual, rel(theta, prod));

    std::vector<Complex> y(k);
    for (auto& v : y) v = rnd();
    std::vector<Complex> xc(h);
    for (int R = 0; R < h; ++R) xc[R] = y[cls.class_of[R]];
    const Complex theta_c = group_determinant(g, xc);
    Complex pc = 1.0, pk = 1.0;
    for (int l = 0; l < nirr; ++l) {
      const int f = dec.table.degrees[l];
      Complex xi = 0.0;
      for (int a = 0; a < k; ++a) xi += static_cast<double>(cls.sizes[a]) * dec.table.values(l, a) * y[a];
      xi /= static_cast<double>(f);
      pc *= std::pow(xi, f * f);
      pk *= xi;
      design(t, l) = std::log(std::abs(xi));
    }
    target[t] = std::log(std::abs(theta_c));
    rep.class_constant_residual = std::max(rep.class_constant_residual, rel(theta_c, pc));
    CMatrix kmat = CMatrix::Zero(k, k);
    for (int b = 0; b < k; ++b) kmat += y[b] * static_cast<double>(cls.sizes[b]) * ms[b].to_complex();
    rep.class_algebra_residual = std::max(rep.class_algebra_residual, rel(kmat.determinant(), pk));
  }
  if (trials >= nirr) {
    const Eigen::VectorXd e = design.colPivHouseholderQr().solve(target);
    for (int l = 0; l < nirr; ++l) {
      rep.fitted_exponents.push_back(e[l]);
      rep.exponent_defect = std::max(rep.exponent_defect, std::abs(e[l] - rep.expected_exponents[l]));
    }
  }
  rep.pass = rep.general_residual < tol && rep.class_constant_residual < tol &&
             rep.class_algebra_residual < tol && rep.exponent_defect < 1e-6;
  return rep;
}

CheckReport character_equation_check(const FiniteGroup& g, const ConjClasses& cls,
                                      const StructureConstants& sc, const CharacterTable& t,
                                      double tol) {
  CheckReport rep;
  rep.exact = t.has_exact();
  const double h = g.order();
  rep.max_residual = rep.exact ? equation_residual(cls, sc, t.exact, t.degrees)
                               : equation_residual(cls, sc, numeric_grid(t), t.degrees);
  rep.pass = rep.exact ? rep.max_residual == 0.0 : rep.max_residual <= tol * h * h;
  return rep;
}

AxiomReport frobenius_axiom_check(const FiniteGroup& g, const ConjClasses& cls,
                                  const CharacterTable& t, double tol) {
  AxiomReport rep = t.has_exact() ? axioms(g, cls, t.exact, t.degrees)
                                  : axioms(g, cls, numeric_grid(t), t.degrees);
  rep.exact = t.has_exact();
  const double h = g.order();
  const double worst = std::max({rep.identity_degree, rep.class_function, rep.product_rule, rep.norm});
  rep.pass = rep.exact ? worst == 0.0 : worst <= tol * h * h;
  return rep;
}

OrthogonalityReport orthogonality_check(const ConjClasses& cls, const CharacterTable& t,
                                        double tol) {
  OrthogonalityReport rep;
  rep.exact = t.has_exact();
  int h = 0;
  for (int s : cls.sizes) h += s;
  if (rep.exact)
    orthogonality(cls, t.exact, rep, h);
  else
    orthogonality(cls, numeric_grid(t), rep, h);
  int sum = 0;
  for (int f : t.degrees) {
    sum += f * f;
    if (f <= 0 || h % f != 0) rep.divisibility = false;
  }
  rep.degree_sum = sum == h;
  if (t.values.rows() == t.values.cols() && t.values.rows() > 0) {
    const double sv = Eigen::JacobiSVD<CMatrix>(t.values).singularValues().minCoeff();
    rep.nonsingular = sv > 1e-8;
  } else {
    rep.nonsingular = false;
  }
  const bool small = rep.exact ? rep.rows == 0.0 && rep.columns == 0.0
                               : rep.rows <= tol * h && rep.columns <= tol * h;
  rep.pass = small && rep.degree_sum && rep.divisibility && rep.nonsingular;
  return rep;
}

std::string render_entry(const CharacterTable& t, int row, int col) {
  if (t.has_exact()) return t.exact[row][col].to_string();
  const Complex v = t.values(row, col);
  char buf[96];
  const double re = std::abs(v.real()) < 5e-13 ? 0.0 : v.real();
  if (std::abs(v.imag()) < 5e-13)
    std::snprintf(buf, sizeof buf, "%.12f", re);
  else
    std::snprintf(buf, sizeof buf, "%.12f%+.12fi", re, v.imag());
  return buf;
}

std::string entry_annotation(const CharacterTable& t, int row, int col) {
  if (!t.has_exact() || t.exact[row][col].as_rational()) return "";
  const std::vector<long long> p = t.exact[row][col].minimal_polynomial();
  return p.empty() ? "" : polynomial_to_string(p);
}

}  // namespace haarlab
