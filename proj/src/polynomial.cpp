#include "haarlab/polynomial.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "haarlab/haar.hpp"

namespace haarlab {

namespace {
int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

void fill_monomials(int var, int remaining, Exponent& cur, std::vector<Exponent>& out) {
  const int nvars = static_cast<int>(cur.size());
  if (var == nvars - 1) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[var] = k;
    fill_monomials(var + 1, remaining - k, cur, out);
  }
}
}  // namespace

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total(a), db = total(b);
  if (da != db) return da < db;
  return a > b;
}

std::vector<Exponent> monomials(int nvars, int degree) {
  if (nvars < 1 || degree < 0) throw std::invalid_argument("monomials: need nvars >= 1, degree >= 0");
  std::vector<Exponent> out;
  Exponent cur(nvars, 0);
  fill_monomials(0, degree, cur, out);
  return out;
}

std::vector<Exponent> monomials_up_to(int nvars, int max_degree) {
  std::vector<Exponent> out;
  for (int d = 0; d <= max_degree; ++d) {
    const auto part = monomials(nvars, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

int monomial_count(int nvars, int degree) {
  // C(nvars + degree - 1, degree)
  long long c = 1;
  for (int k = 1; k <= degree; ++k) c = c * (nvars - 1 + k) / k;
  return static_cast<int>(c);
}

Polynomial Polynomial::constant(int nvars, Complex c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("Polynomial::variable: bad index");
  Exponent e(nvars, 0);
  e[index] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponent& e, Complex c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

Complex Polynomial::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

void Polynomial::add_term(const Exponent& e, Complex c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("Polynomial: exponent length does not match variable count");
  if (c == Complex(0.0, 0.0)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Complex(-1.0, 0.0); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Polynomial: variable count mismatch");
  Polynomial r(nvars_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator*(Complex c) const {
  Polynomial r(nvars_);
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

Complex Polynomial::evaluate(const std::vector<Complex>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("Polynomial::evaluate: size");
  Complex s(0.0, 0.0);
  for (const auto& [e, c] : terms_) {
    Complex t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Polynomial Polynomial::substitute_linear(const CMatrix& m) const {
  if (m.rows() != nvars_ || m.cols() != nvars_)
    throw std::invalid_argument("Polynomial::substitute_linear: matrix size");
  std::vector<Polynomial> forms;
  for (int j = 0; j < nvars_; ++j) {
    Polynomial f(nvars_);
    for (int k = 0; k < nvars_; ++k) {
      Exponent e(nvars_, 0);
      e[k] = 1;
      f.add_term(e, m(j, k));
    }
    forms.push_back(std::move(f));
  }
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(nvars_, c);
    for (int j = 0; j < nvars_; ++j)
      for (int k = 0; k < e[j]; ++k) t = t * forms[j];
    r = r + t;
  }
  return r;
}

std::vector<Complex> Polynomial::dense(int max_degree) const {
  const std::vector<Exponent> basis = monomials_up_to(nvars_, max_degree);
  std::vector<Complex> out;
  out.reserve(basis.size());
  for (const Exponent& e : basis) out.push_back(coefficient(e));
  if (degree() > max_degree) throw std::invalid_argument("Polynomial::dense: degree too high");
  return out;
}

Polynomial Polynomial::from_dense(int nvars, int max_degree, const std::vector<Complex>& c,
                                  double drop_below) {
  const std::vector<Exponent> basis = monomials_up_to(nvars, max_degree);
  if (basis.size() != c.size()) throw std::invalid_argument("Polynomial::from_dense: size");
  Polynomial p(nvars);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (std::abs(c[i]) > drop_below) p.add_term(basis[i], c[i]);
  return p;
}

double Polynomial::max_difference(const Polynomial& o) const {
  double d = 0.0;
  for (const auto& [e, c] : (*this - o).terms_) d = std::max(d, std::abs(c));
  return d;
}

std::string Polynomial::to_string(const std::vector<std::string>& names, int digits) const {
  if (terms_.empty()) return "0";
  auto num = [digits](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return std::string(buf);
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coef;
    if (std::abs(c.imag()) <= 1e-15 * std::max(1.0, std::abs(c.real())))
      coef = num(c.real());
    else
      coef = "(" + num(c.real()) + (c.imag() < 0 ? "-" : "+") + num(std::abs(c.imag())) + "i)";
    if (!first) os << " + ";
    first = false;
    os << coef;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << "*" << (i < static_cast<int>(names.size()) ? names[i] : "a" + std::to_string(i + 1));
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

PolyForm::PolyForm(int n_, int p_) : n(n_), p(p_), a(monomial_count(n_, p_), Complex(0.0, 0.0)) {
  if (n < 1 || p < 0) throw std::invalid_argument("PolyForm: need n >= 1, p >= 0");
}

PolyForm::PolyForm(int n_, int p_, std::vector<Complex> a_) : n(n_), p(p_), a(std::move(a_)) {
  if (n < 1 || p < 0) throw std::invalid_argument("PolyForm: need n >= 1, p >= 0");
  if (static_cast<int>(a.size()) != monomial_count(n, p))
    throw std::invalid_argument("PolyForm: coefficient count does not match the monomial count");
}

Complex PolyForm::evaluate(const std::vector<Complex>& x) const {
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("PolyForm::evaluate: size");
  const auto mons = monomials(n, p);
  Complex s(0.0, 0.0);
  for (std::size_t j = 0; j < mons.size(); ++j) s += a[j] * Polynomial::monomial(mons[j]).evaluate(x);
  return s;
}

std::vector<std::string> PolyForm::coefficient_names() const {
  std::vector<std::string> names;
  for (const Exponent& e : monomials(n, p)) {
    std::string s = "a[";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    names.push_back(s + "]");
  }
  return names;
}

CMatrix symmetric_power_action(const CMatrix& g, int p) {
  if (p < 0) throw std::invalid_argument("symmetric_power_action: p must be >= 0");
  const int n = static_cast<int>(g.rows());
  const std::vector<Exponent> mons = monomials(n, p);
  const int m = static_cast<int>(mons.size());
  std::map<Exponent, int> index;
  for (int k = 0; k < m; ++k) index[mons[k]] = k;

  // Row j: expand prod_i (sum_b g(i, b) x_b)^{e_i} as a dense vector over degree-p monomials,
  // building up one linear factor at a time.
  CMatrix P = CMatrix::Zero(m, m);
  for (int j = 0; j < m; ++j) {
    std::map<Exponent, Complex> cur{{Exponent(n, 0), Complex(1.0, 0.0)}};
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < mons[j][i]; ++k) {
        std::map<Exponent, Complex> next;
        for (const auto& [e, c] : cur)
          for (int b = 0; b < n; ++b) {
            if (g(i, b) == Complex(0.0, 0.0)) continue;
            Exponent f = e;
            ++f[b];
            next[f] += c * g(i, b);
          }
        cur = std::move(next);
      }
    for (const auto& [e, c] : cur) P(j, index.at(e)) += c;
  }
  return P;
}

CMatrix symmetric_power_action(const GroupElement& g, int p) {
  return symmetric_power_action(g.entries(), p);
}

CMatrix coefficient_action(const CMatrix& g, int p) {
  return symmetric_power_action(CMatrix(g.adjoint()), p).transpose();
}

std::vector<Polynomial> invariant_project_many(const std::vector<Polynomial>& Fs, int p,
                                               const ChartSpec& chart, const QuadratureSpec& q) {
  chart.check();
  const int m = monomial_count(chart.n, p);
  int D = 0;
  for (const Polynomial& F : Fs) {
    if (F.nvars() != m)
      throw std::invalid_argument("invariant_project: polynomial must have one variable per form "
                                  "coefficient (" + std::to_string(m) + ")");
    D = std::max(D, F.degree());
  }
  const std::size_t L = monomials_up_to(m, D).size();
  const BatchFunction batch = [&](const CMatrix& g, std::span<Complex> out) {
    const CMatrix M = coefficient_action(g, p);
    for (std::size_t i = 0; i < Fs.size(); ++i) {
      const std::vector<Complex> d = Fs[i].substitute_linear(M).dense(D);
      std::copy(d.begin(), d.end(), out.begin() + i * L);
    }
  };
  const std::vector<Complex> r = integrate_batch(batch, Fs.size() * L, chart, q);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < Fs.size(); ++i) {
    std::vector<Complex> d(r.begin() + i * L, r.begin() + (i + 1) * L);
    out.push_back(Polynomial::from_dense(m, D, d, 1e-13));
  }
  return out;
}

Polynomial invariant_project(const Polynomial& F, const PolyForm& form, const ChartSpec& chart,
                             const QuadratureSpec& q) {
  if (form.n != chart.n)
    throw std::invalid_argument("invariant_project: form and chart dimensions differ");
  return invariant_project_many({F}, form.p, chart, q).front();
}

InvariantCount invariant_dimension(int p, int r, const ChartSpec& chart, const QuadratureSpec& q,
                                   double threshold) {
  if (p < 0 || r < 0) throw std::invalid_argument("invariant_dimension: p, r must be >= 0");
  const BatchFunction batch = [&](const CMatrix& g, std::span<Complex> out) {
    const CMatrix A = coefficient_action(g, p);
    // Complete homogeneous h_r of the eigenvalues from power sums (Newton).
    std::vector<Complex> power(r + 1), h(r + 1);
    CMatrix Ak = CMatrix::Identity(A.rows(), A.cols());
    for (int k = 1; k <= r; ++k) {
      Ak = Ak * A;
      power[k] = Ak.trace();
    }
    h[0] = 1.0;
    for (int j = 1; j <= r; ++j) {
      Complex s(0.0, 0.0);
      for (int k = 1; k <= j; ++k) s += power[k] * h[j - k];
      h[j] = s / static_cast<double>(j);
    }
    out[0] = h[r];
  };
  const Complex v = integrate_batch(batch, 1, chart, q)[0];
  InvariantCount c;
  c.value = v.real();
  c.nearest = std::llround(v.real());
  c.distance = std::max(std::abs(v.real() - static_cast<double>(c.nearest)), std::abs(v.imag()));
  if (c.distance > threshold)
    throw ResolutionError("invariant_dimension: value " + std::to_string(v.real()) +
                          " is not within " + std::to_string(threshold) + " of an integer");
  return c;
}

std::vector<Polynomial> invariant_basis(int p, int r, const ChartSpec& chart,
                                        const QuadratureSpec& q, double tol) {
  const int m = monomial_count(chart.n, p);
  const std::vector<Exponent> mons = monomials(m, r);
  std::vector<Polynomial> Fs;
  for (const Exponent& e : mons) Fs.push_back(Polynomial::monomial(e));
  const std::vector<Polynomial> proj = invariant_project_many(Fs, p, chart, q);

  const int rows = static_cast<int>(mons.size()), cols = rows;
  CMatrix A(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A(i, j) = proj[i].coefficient(mons[j]);

  // Reduced row echelon form with partial pivoting.
  int lead = 0;
  for (int c = 0; c < cols && lead < rows; ++c) {
    int best = lead;
    for (int i = lead + 1; i < rows; ++i)
      if (std::abs(A(i, c)) > std::abs(A(best, c))) best = i;
    if (std::abs(A(best, c)) <= tol) continue;
    A.row(lead).swap(A.row(best));
    A.row(lead) /= A(lead, c);
    for (int i = 0; i < rows; ++i)
      if (i != lead) A.row(i) -= A(i, c) * A.row(lead);
    ++lead;
  }
  std::vector<Polynomial> basis;
  for (int i = 0; i < lead; ++i) {
    Polynomial b(m);
    for (int j = 0; j < cols; ++j)
      if (std::abs(A(i, j)) > tol) b.add_term(mons[j], A(i, j));
    basis.push_back(std::move(b));
  }
  return basis;
}

}  // namespace haarlab
