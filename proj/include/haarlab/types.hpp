#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace haarlab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Numerical tolerances shared by the validators and comparisons.
struct Tolerance {
  double eps_validate = 1e-10;
  double eps_compare = 1e-8;

  /// Throws std::invalid_argument unless 0 < eps_validate <= eps_compare.
  void check() const {
    if (!(eps_validate > 0.0) || !(eps_compare > 0.0) ||
        eps_validate > eps_compare)
      throw std::invalid_argument("tolerance: need 0 < eps_validate <= eps_compare");
  }
};

/// Raised when a chart point lies on the degenerate locus of a chart
/// (the metric Gram matrix is not positive definite there).
class SingularChartPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a numerical computation cannot resolve a quantity that is
/// known to be integral (an invariant count, a Weyl group order, ...).
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace haarlab
