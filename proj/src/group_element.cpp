#include "haarlab/group_element.hpp"

#include <cmath>
#include <stdexcept>

namespace haarlab {

std::string GroupTag::name() const {
  switch (kind) {
    case GroupKind::SO:
      return "SO(" + std::to_string(n) + ")";
    case GroupKind::SU:
      return "SU(" + std::to_string(n) + ")";
    case GroupKind::Finite:
      return "finite(" + finite_id + ")";
  }
  return "?";
}

GroupElement::GroupElement(CMatrix entries, GroupTag tag)
    : entries_(std::move(entries)), tag_(std::move(tag)) {}

GroupElement GroupElement::identity(const GroupTag& tag) {
  return GroupElement(CMatrix::Identity(tag.n, tag.n), tag);
}

bool validate(const GroupElement& g, const Tolerance& tol) {
  const CMatrix& m = g.entries();
  if (m.rows() != g.n() || m.cols() != g.n())
    throw std::invalid_argument("validate: entries are " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " but tag says n=" +
                                std::to_string(g.n()));
  if (!m.allFinite()) throw std::invalid_argument("validate: non-finite entries");

  const double eps = tol.eps_validate;
  const int n = g.n();
  const CMatrix gram = m * m.adjoint();
  if ((gram - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > eps) return false;

  switch (g.tag().kind) {
    case GroupKind::SO:
      if (m.imag().cwiseAbs().maxCoeff() > eps) return false;
      return std::abs(m.determinant() - Complex(1.0, 0.0)) <= eps;
    case GroupKind::SU:
      return std::abs(m.determinant() - Complex(1.0, 0.0)) <= eps;
    case GroupKind::Finite:
      return true;
  }
  return false;
}

GroupElement planar_rotation(int i, int j, double phi, int n) {
  if (n < 2 || i < 1 || j > n || i >= j)
    throw std::invalid_argument("planar_rotation: need 1 <= i < j <= n");
  CMatrix m = CMatrix::Identity(n, n);
  const double c = std::cos(phi), s = std::sin(phi);
  m(i - 1, i - 1) = c;
  m(i - 1, j - 1) = -s;
  m(j - 1, i - 1) = s;
  m(j - 1, j - 1) = c;
  return GroupElement(std::move(m), GroupTag::so(n));
}

namespace {
void require_same_group(const GroupElement& a, const GroupElement& b, const char* op) {
  if (!(a.tag() == b.tag()))
    throw std::invalid_argument(std::string(op) + ": tag mismatch " + a.tag().name() + " vs " +
                                b.tag().name());
}
}  // namespace

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b, "multiply");
  return GroupElement(a.entries() * b.entries(), a.tag());
}

GroupElement inverse(const GroupElement& a) {
  return GroupElement(a.entries().adjoint(), a.tag());
}

GroupElement conjugate(const GroupElement& v, const GroupElement& g) {
  require_same_group(v, g, "conjugate");
  return GroupElement(v.entries() * g.entries() * v.entries().adjoint(), g.tag());
}

double invariant_metric(const GroupElement& x, const GroupElement& y) {
  require_same_group(x, y, "invariant_metric");
  const CMatrix d = x.entries().adjoint() * y.entries() - CMatrix::Identity(x.n(), x.n());
  return d.norm();
}

}  // namespace haarlab
