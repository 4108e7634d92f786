#pragma once

#include <span>
#include <string>
#include <vector>

#include "haarlab/group_element.hpp"
#include "haarlab/quadrature.hpp"

namespace haarlab {

enum class ChartKind { Hurwitz, Alternate };

std::string to_string(ChartKind kind);
ChartKind parse_chart_kind(const std::string& name);  // "hurwitz" | "alt"

struct ChartSpec {
  GroupKind group = GroupKind::SO;
  ChartKind kind = ChartKind::Hurwitz;
  int n = 3;

  static ChartSpec so(int n, ChartKind kind = ChartKind::Hurwitz) { return {GroupKind::SO, kind, n}; }
  static ChartSpec su(int n) { return {GroupKind::SU, ChartKind::Hurwitz, n}; }

  /// Throws std::invalid_argument for n < 2, finite groups, or the
  /// alternate chart on SU(n).
  void check() const;
  GroupTag tag() const;
  std::string name() const;
  bool operator==(const ChartSpec&) const = default;
};

/// Hurwitz angles on SO(n): phi(r, s) for 0 <= r < s < n, stored with s
/// major, r minor: (0,1), (0,2), (1,2), (0,3), ...
struct AngleVectorSO {
  int n = 2;
  std::vector<double> phi;

  explicit AngleVectorSO(int n = 2);
  static int index(int r, int s) { return s * (s - 1) / 2 + r; }
  double& operator()(int r, int s) { return phi[index(r, s)]; }
  double operator()(int r, int s) const { return phi[index(r, s)]; }
};

/// Hurwitz parameters on SU(n): phi(r, s), psi(r, s) indexed as in
/// AngleVectorSO, chi[s - 1] for s = 1 .. n-1.
struct AngleVectorSU {
  int n = 2;
  std::vector<double> phi, psi, chi;

  explicit AngleVectorSU(int n = 2);
  static int index(int r, int s) { return AngleVectorSO::index(r, s); }
};

/// Spherical-coordinate chart on SO(n): phi(i, j) for 1 <= i <= j < n,
/// stored j major: (1,1), (1,2), (2,2), (1,3), ...
struct AngleVectorAlt {
  int n = 2;
  std::vector<double> phi;

  explicit AngleVectorAlt(int n = 2);
  static int index(int i, int j) { return j * (j - 1) / 2 + (i - 1); }
  double& operator()(int i, int j) { return phi[index(i, j)]; }
  double operator()(int i, int j) const { return phi[index(i, j)]; }
};

/// One factor of a chart product: a 2x2 block on coordinates (a, a+1),
/// 0-based. Rotation factors use a single angle; SU(2) factors use
/// (phi, psi, chi) with chi absent (-1) except on the first factor of each
/// E_s.
struct ChartFactor {
  enum class Type { Rotation, SU2 } type = Type::Rotation;
  int a = 0;
  int phi = -1, psi = -1, chi = -1;  // indices into the flat angle vector
  double sign = 1.0;                 // rotation by sign * phi

  /// The 2x2 block acting on columns (a, a+1) when right-multiplied.
  Eigen::Matrix2cd block(std::span<const double> angles) const;
};

/// A chart as a flat angle vector, its box, its factor list and its closed
/// form density. The map is the ordered product of the factors; the density
/// is `constant` times the product of the per-angle weights.
class Chart {
 public:
  explicit Chart(const ChartSpec& spec);

  const ChartSpec& spec() const { return spec_; }
  int n() const { return spec_.n; }
  int dimension() const { return static_cast<int>(angles_.size()); }
  const std::vector<AngleMeasure>& angles() const { return angles_; }
  const std::vector<std::string>& angle_names() const { return names_; }
  const std::vector<ChartFactor>& factors() const { return factors_; }
  double density_constant() const { return constant_; }

  /// Range check against the box; throws std::out_of_range.
  void check_range(std::span<const double> angles) const;
  /// Chart map without range check (quadrature nodes may leave the box).
  CMatrix map_unchecked(std::span<const double> angles) const;
  GroupElement map(std::span<const double> angles) const;
  double density(std::span<const double> angles) const;

  /// Analytic integral of the closed-form density over the box.
  double box_volume() const;

 private:
  ChartSpec spec_;
  std::vector<AngleMeasure> angles_;
  std::vector<std::string> names_;
  std::vector<ChartFactor> factors_;
  double constant_ = 1.0;
};

std::vector<double> flatten(const AngleVectorSU& a);
AngleVectorSU unflatten_su(int n, std::span<const double> flat);

/// R = E_1 E_2 ... E_{n-1} with E_s = E_{n-s}(phi_{s-1,s}) ... E_{n-1}(phi_{0,s}),
/// where E_a(phi) acts on x_a, x_{a+1} as x = E x' with block [[c, s], [-s, c]].
GroupElement so_from_angles(const AngleVectorSO& a);
/// u = r_{n-1} ... r_1 with r_j = r_12(phi_{1,j}) r_23(phi_{2,j}) ... r_{j,j+1}(phi_{j,j}).
GroupElement so_from_angles_alt(const AngleVectorAlt& a);
/// Same ordering as so_from_angles with SU(2) blocks [[a, b], [-conj b, conj a]],
/// a = cos(phi) e^{i psi}, b = sin(phi) e^{i chi}.
GroupElement su_from_angles(const AngleVectorSU& a);

/// 2^{n(n-1)/4} prod (sin phi_rs)^r
double so_density(const AngleVectorSO& a);
/// sqrt(n!) 2^{n(n-1)/2} prod cos(phi_rs) sin(phi_rs)^{2r+1}
double su_density(const AngleVectorSU& a);
/// 2^{n(n-1)/4} prod |sin phi_{i,j}|^{i-1}
double alt_density(const AngleVectorAlt& a);

/// 2^{(n-1)(n+4)/4} pi^{n(n+1)/4} / (Gamma(1/2) Gamma(2/2) ... Gamma(n/2)).
double so_total_volume(int n);
/// Analytic integral of su_density over its box.
double su_box_volume(int n);

/// sqrt(det B) where B is the Gram matrix of the chart map's partial
/// derivatives (central differences, step h) in the metric sum |dc|^2.
/// Throws SingularChartPoint if B is not numerically positive definite.
double metric_density(const ChartSpec& chart, std::span<const double> angles, double h = 1e-5);

/// Integral of the closed-form density over the box by a tensor product of
/// plain per-angle rules (unit weight), i.e. without the weights built into
/// the chart measures. Exercises the density formula pointwise.
double box_integral_of_density(const ChartSpec& chart, const QuadratureSpec& q);

}  // namespace haarlab
