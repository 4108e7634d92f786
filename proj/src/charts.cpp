#include "haarlab/charts.hpp"

#include <cmath>
#include <stdexcept>

namespace haarlab {

std::string to_string(ChartKind kind) { return kind == ChartKind::Hurwitz ? "hurwitz" : "alt"; }

ChartKind parse_chart_kind(const std::string& name) {
  if (name == "hurwitz") return ChartKind::Hurwitz;
  if (name == "alt" || name == "alternate") return ChartKind::Alternate;
  throw std::invalid_argument("unknown chart '" + name + "' (expected hurwitz or alt)");
}

void ChartSpec::check() const {
  if (group == GroupKind::Finite) throw std::invalid_argument("chart: finite groups have no chart");
  if (n < 2) throw std::invalid_argument("chart: n must be >= 2");
  if (group == GroupKind::SU && kind == ChartKind::Alternate)
    throw std::invalid_argument("chart: the alternate chart is defined only for SO(n)");
}

GroupTag ChartSpec::tag() const { return group == GroupKind::SO ? GroupTag::so(n) : GroupTag::su(n); }

std::string ChartSpec::name() const { return tag().name() + "/" + to_string(kind); }

AngleVectorSO::AngleVectorSO(int n_) : n(n_), phi(n_ * (n_ - 1) / 2, 0.0) {}

AngleVectorSU::AngleVectorSU(int n_)
    : n(n_), phi(n_ * (n_ - 1) / 2, 0.0), psi(n_ * (n_ - 1) / 2, 0.0), chi(n_ - 1, 0.0) {}

AngleVectorAlt::AngleVectorAlt(int n_) : n(n_), phi(n_ * (n_ - 1) / 2, 0.0) {}

Eigen::Matrix2cd ChartFactor::block(std::span<const double> angles) const {
  Eigen::Matrix2cd b;
  if (type == Type::Rotation) {
    const double t = sign * angles[phi];
    const double c = std::cos(t), s = std::sin(t);
    b << c, -s, s, c;
  } else {
    const double p = angles[phi];
    const Complex a = std::polar(std::cos(p), angles[psi]);
    const Complex bb = std::polar(std::sin(p), chi >= 0 ? angles[chi] : 0.0);
    b << a, bb, -std::conj(bb), std::conj(a);
  }
  return b;
}

Chart::Chart(const ChartSpec& spec) : spec_(spec) {
  spec.check();
  const int n = spec.n;
  const int m = n * (n - 1) / 2;
  const double two_pi = 2.0 * kPi;

  if (spec.kind == ChartKind::Hurwitz) {
    const bool su = spec.group == GroupKind::SU;
    const int count = su ? n * n - 1 : m;
    angles_.resize(count);
    names_.resize(count);
    for (int s = 1; s < n; ++s)
      for (int r = 0; r < s; ++r) {
        const int id = AngleVectorSO::index(r, s);
        const std::string rs = std::to_string(r) + "," + std::to_string(s);
        if (su) {
          angles_[id] = {0.0, kPi / 2, WeightKind::CosSinPower, 2 * r + 1};
          names_[id] = "phi(" + rs + ")";
          angles_[m + id] = {0.0, two_pi, WeightKind::Uniform, 0};
          names_[m + id] = "psi(" + rs + ")";
        } else {
          angles_[id] = r == 0 ? AngleMeasure{0.0, two_pi, WeightKind::Uniform, 0}
                               : AngleMeasure{0.0, kPi, WeightKind::SinPower, r};
          names_[id] = "phi(" + rs + ")";
        }
      }
    if (su)
      for (int s = 1; s < n; ++s) {
        angles_[2 * m + s - 1] = {0.0, two_pi, WeightKind::Uniform, 0};
        names_[2 * m + s - 1] = "chi(" + std::to_string(s) + ")";
      }

    for (int s = 1; s < n; ++s)
      for (int r = s - 1; r >= 0; --r) {
        ChartFactor f;
        const int id = AngleVectorSO::index(r, s);
        f.a = n - 2 - r;  // E_{n-1-r} acts on 1-based coordinates (n-1-r, n-r)
        f.phi = id;
        if (su) {
          f.type = ChartFactor::Type::SU2;
          f.psi = m + id;
          f.chi = r == 0 ? 2 * m + s - 1 : -1;
        } else {
          f.sign = -1.0;
        }
        factors_.push_back(f);
      }
    if (su) {
      double fact = 1.0;
      for (int k = 2; k <= n; ++k) fact *= k;
      constant_ = std::sqrt(fact) * std::pow(2.0, n * (n - 1) / 2.0);
    } else {
      constant_ = std::pow(2.0, n * (n - 1) / 4.0);
    }
  } else {
    angles_.resize(m);
    names_.resize(m);
    for (int j = 1; j < n; ++j)
      for (int i = 1; i <= j; ++i) {
        const int id = AngleVectorAlt::index(i, j);
        angles_[id] = i < j ? AngleMeasure{0.0, kPi, WeightKind::SinPower, i - 1}
                            : AngleMeasure{0.0, two_pi, WeightKind::AbsSinPower, j - 1};
        names_[id] = "phi(" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    for (int j = n - 1; j >= 1; --j)
      for (int i = 1; i <= j; ++i) {
        ChartFactor f;
        f.a = i - 1;
        f.phi = AngleVectorAlt::index(i, j);
        f.sign = 1.0;
        factors_.push_back(f);
      }
    constant_ = std::pow(2.0, n * (n - 1) / 4.0);
  }
}

void Chart::check_range(std::span<const double> angles) const {
  if (angles.size() != angles_.size())
    throw std::invalid_argument("chart " + spec_.name() + ": expected " +
                                std::to_string(angles_.size()) + " angles, got " +
                                std::to_string(angles.size()));
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const AngleMeasure& m = angles_[i];
    const double t = angles[i];
    // The alternate chart's polar angles are closed intervals.
    const bool closed = spec_.kind == ChartKind::Alternate && m.hi == kPi;
    const bool ok = std::isfinite(t) && t >= m.lo && (closed ? t <= m.hi : t < m.hi);
    if (!ok)
      throw std::out_of_range("chart " + spec_.name() + ": angle " + names_[i] + " = " +
                              std::to_string(t) + " outside its range");
  }
}

CMatrix Chart::map_unchecked(std::span<const double> angles) const {
  const int n = spec_.n;
  CMatrix g = CMatrix::Identity(n, n);
  for (const ChartFactor& f : factors_) {
    const Eigen::Matrix2cd b = f.block(angles);
    const CVector c0 = g.col(f.a), c1 = g.col(f.a + 1);
    g.col(f.a) = c0 * b(0, 0) + c1 * b(1, 0);
    g.col(f.a + 1) = c0 * b(0, 1) + c1 * b(1, 1);
  }
  return g;
}

GroupElement Chart::map(std::span<const double> angles) const {
  check_range(angles);
  return GroupElement(map_unchecked(angles), spec_.tag());
}

double Chart::density(std::span<const double> angles) const {
  check_range(angles);
  double d = constant_;
  for (std::size_t i = 0; i < angles.size(); ++i) d *= angles_[i].weight(angles[i]);
  return d;
}

double Chart::box_volume() const {
  double v = constant_;
  for (const AngleMeasure& m : angles_) v *= m.total();
  return v;
}

std::vector<double> flatten(const AngleVectorSU& a) {
  std::vector<double> flat(a.phi);
  flat.insert(flat.end(), a.psi.begin(), a.psi.end());
  flat.insert(flat.end(), a.chi.begin(), a.chi.end());
  return flat;
}

AngleVectorSU unflatten_su(int n, std::span<const double> flat) {
  AngleVectorSU a(n);
  const std::size_t m = a.phi.size();
  if (flat.size() != 2 * m + a.chi.size()) throw std::invalid_argument("unflatten_su: bad size");
  for (std::size_t i = 0; i < m; ++i) {
    a.phi[i] = flat[i];
    a.psi[i] = flat[m + i];
  }
  for (std::size_t i = 0; i < a.chi.size(); ++i) a.chi[i] = flat[2 * m + i];
  return a;
}

namespace {
void require_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want) throw std::invalid_argument(std::string(what) + ": wrong number of angles");
}
}  // namespace

GroupElement so_from_angles(const AngleVectorSO& a) {
  require_size(a.phi.size(), a.n * (a.n - 1) / 2, "so_from_angles");
  return Chart(ChartSpec::so(a.n)).map(a.phi);
}

GroupElement so_from_angles_alt(const AngleVectorAlt& a) {
  require_size(a.phi.size(), a.n * (a.n - 1) / 2, "so_from_angles_alt");
  return Chart(ChartSpec::so(a.n, ChartKind::Alternate)).map(a.phi);
}

GroupElement su_from_angles(const AngleVectorSU& a) {
  const std::vector<double> flat = flatten(a);
  require_size(flat.size(), a.n * a.n - 1, "su_from_angles");
  return Chart(ChartSpec::su(a.n)).map(flat);
}

double so_density(const AngleVectorSO& a) { return Chart(ChartSpec::so(a.n)).density(a.phi); }

double su_density(const AngleVectorSU& a) { return Chart(ChartSpec::su(a.n)).density(flatten(a)); }

double alt_density(const AngleVectorAlt& a) {
  return Chart(ChartSpec::so(a.n, ChartKind::Alternate)).density(a.phi);
}

double so_total_volume(int n) {
  if (n < 2) throw std::invalid_argument("so_total_volume: n must be >= 2");
  double v = std::pow(2.0, (n - 1) * (n + 4) / 4.0) * std::pow(kPi, n * (n + 1) / 4.0);
  for (int k = 1; k <= n; ++k) v /= std::tgamma(k / 2.0);
  return v;
}

double su_box_volume(int n) {
  if (n < 2) throw std::invalid_argument("su_box_volume: n must be >= 2");
  return Chart(ChartSpec::su(n)).box_volume();
}

double metric_density(const ChartSpec& spec, std::span<const double> angles, double h) {
  const Chart chart(spec);
  chart.check_range(angles);
  const int d = chart.dimension();
  const int n = spec.n;
  RMatrix jac(2 * n * n, d);
  std::vector<double> t(angles.begin(), angles.end());
  for (int k = 0; k < d; ++k) {
    const double t0 = t[k];
    t[k] = t0 + h;
    const CMatrix plus = chart.map_unchecked(t);
    t[k] = t0 - h;
    const CMatrix minus = chart.map_unchecked(t);
    t[k] = t0;
    const CMatrix diff = (plus - minus) / (2.0 * h);
    for (int e = 0; e < n * n; ++e) {
      jac(2 * e, k) = diff(e % n, e / n).real();
      jac(2 * e + 1, k) = diff(e % n, e / n).imag();
    }
  }
  const RMatrix gram = jac.transpose() * jac;
  // Compare det B with the Hadamard bound prod B_kk: a tiny ratio means the
  // columns are dependent up to rounding.
  double hadamard = 1.0;
  for (int k = 0; k < d; ++k) hadamard *= gram(k, k);
  const Eigen::LLT<RMatrix> llt(gram);
  if (llt.info() != Eigen::Success || !(hadamard > 0.0))
    throw SingularChartPoint("metric_density: Gram matrix not positive definite at this point");
  double det = 1.0;
  for (int k = 0; k < d; ++k) det *= llt.matrixL()(k, k) * llt.matrixL()(k, k);
  if (det <= 1e-14 * hadamard)
    throw SingularChartPoint("metric_density: chart is degenerate at this point");
  return std::sqrt(det);
}

double box_integral_of_density(const ChartSpec& spec, const QuadratureSpec& q) {
  q.check();
  const Chart chart(spec);
  const int d = chart.dimension();
  std::vector<Rule1D> rules;
  for (const AngleMeasure& m : chart.angles()) {
    if (q.rule == QuadratureRule::Midpoint) {
      Rule1D r;
      const double h = (m.hi - m.lo) / q.nodes_per_angle;
      for (int j = 0; j < q.nodes_per_angle; ++j) {
        r.nodes.push_back(m.lo + (j + 0.5) * h);
        r.weights.push_back(h);
      }
      rules.push_back(r);
    } else if (m.kind == WeightKind::AbsSinPower && m.power > 0 && m.hi > kPi) {
      // |sin|^p has a kink at pi; integrate each smooth half separately.
      Rule1D r = gauss_legendre(q.nodes_per_angle, m.lo, kPi);
      const Rule1D right = gauss_legendre(q.nodes_per_angle, kPi, m.hi);
      r.nodes.insert(r.nodes.end(), right.nodes.begin(), right.nodes.end());
      r.weights.insert(r.weights.end(), right.weights.begin(), right.weights.end());
      rules.push_back(r);
    } else {
      rules.push_back(gauss_legendre(q.nodes_per_angle, m.lo, m.hi));
    }
  }
  std::vector<int> idx(d, 0);
  std::vector<double> t(d);
  double total = 0.0;
  while (true) {
    double w = chart.density_constant();
    for (int k = 0; k < d; ++k) {
      t[k] = rules[k].nodes[idx[k]];
      w *= rules[k].weights[idx[k]];
    }
    for (int k = 0; k < d; ++k) w *= chart.angles()[k].weight(t[k]);
    total += w;
    int k = 0;
    while (k < d && ++idx[k] == static_cast<int>(rules[k].size())) idx[k++] = 0;
    if (k == d) break;
  }
  return total;
}

}  // namespace haarlab
