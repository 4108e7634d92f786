#include "doctest.h"

#include <cmath>
#include <random>

#include "haarlab/charts.hpp"
#include "haarlab/group_element.hpp"
#include "haarlab/haar.hpp"

using namespace haarlab;

namespace {

GroupElement so_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  const int n = static_cast<int>(rows.size());
  CMatrix m(n, n);
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return GroupElement(m, GroupTag::so(n));
}

double distance(const GroupElement& a, const GroupElement& b) {
  return (a.entries() - b.entries()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("validate: identity, reflection, embedded rotation") {
  CHECK(validate(GroupElement::identity(GroupTag::so(3))));
  CHECK_FALSE(validate(so_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}})));
  CHECK(validate(planar_rotation(1, 2, kPi / 3, 3)));
  CHECK(validate(GroupElement::identity(GroupTag::su(3))));
}

TEST_CASE("validate: SU rejects non-unit determinant and SO rejects complex entries") {
  CMatrix m = CMatrix::Identity(2, 2);
  m(0, 0) = Complex(0.0, 1.0);
  CHECK_FALSE(validate(GroupElement(m, GroupTag::su(2))));  // det = i
  m(1, 1) = Complex(0.0, -1.0);
  CHECK(validate(GroupElement(m, GroupTag::su(2))));
  CHECK_FALSE(validate(GroupElement(m, GroupTag::so(2))));
}

TEST_CASE("validate: dimension mismatch and non-finite entries are errors") {
  CHECK_THROWS_AS(validate(GroupElement(CMatrix::Identity(2, 2), GroupTag::so(3))), std::invalid_argument);
  CMatrix m = CMatrix::Identity(2, 2);
  m(0, 1) = std::nan("");
  CHECK_THROWS_AS(validate(GroupElement(m, GroupTag::so(2))), std::invalid_argument);
}

TEST_CASE("tolerance contract") {
  Tolerance t;
  CHECK(t.eps_validate == 1e-10);
  CHECK(t.eps_compare == 1e-8);
  CHECK_NOTHROW(t.check());
  t.eps_validate = 1e-6;
  CHECK_THROWS(t.check());
  t.eps_validate = 0.0;
  CHECK_THROWS(t.check());
}

TEST_CASE("planar_rotation examples") {
  CHECK(distance(planar_rotation(1, 2, 0.0, 3), GroupElement::identity(GroupTag::so(3))) == 0.0);
  CHECK(distance(planar_rotation(1, 2, kPi / 2, 2), so_matrix({{0, -1}, {1, 0}})) < 1e-15);
  CHECK(distance(planar_rotation(2, 3, kPi, 3), so_matrix({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}})) < 1e-15);
  CHECK_THROWS_AS(planar_rotation(2, 2, 0.1, 3), std::invalid_argument);
  CHECK_THROWS_AS(planar_rotation(2, 1, 0.1, 3), std::invalid_argument);
  CHECK_THROWS_AS(planar_rotation(1, 4, 0.1, 3), std::invalid_argument);
}

TEST_CASE("multiply, inverse, conjugate") {
  const GroupElement g = planar_rotation(1, 3, 0.7, 4);
  CHECK(distance(multiply(g, inverse(g)), GroupElement::identity(GroupTag::so(4))) < 1e-8);
  CHECK(distance(conjugate(g, GroupElement::identity(GroupTag::so(4))), GroupElement::identity(GroupTag::so(4))) == 0.0);
  CHECK(distance(multiply(planar_rotation(1, 2, 0.3, 3), planar_rotation(1, 2, 1.1, 3)), planar_rotation(1, 2, 1.4, 3)) <
        1e-14);
  CHECK_THROWS_AS(multiply(g, GroupElement::identity(GroupTag::so(3))), std::invalid_argument);
  CHECK_THROWS_AS(multiply(GroupElement::identity(GroupTag::su(2)), GroupElement::identity(GroupTag::so(2))),
                  std::invalid_argument);
}

TEST_CASE("inverse is the conjugate transpose") {
  HaarSampler s(ChartSpec::su(3), 11);
  const GroupElement g = s.next();
  CHECK((inverse(g).entries() - g.entries().adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("invariant_metric examples") {
  const GroupElement g = planar_rotation(1, 2, 0.4, 3);
  CHECK(invariant_metric(g, g) < 1e-15);
  const double d = invariant_metric(GroupElement::identity(GroupTag::so(3)), so_matrix({{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}));
  CHECK(d == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("invariant_metric is symmetric and left invariant on SO(4)") {
  HaarSampler s(ChartSpec::so(4), 5);
  for (int t = 0; t < 50; ++t) {
    const GroupElement x = s.next(), y = s.next(), z = s.next();
    CHECK(std::abs(invariant_metric(multiply(z, x), multiply(z, y)) - invariant_metric(x, y)) < 1e-10);
    CHECK(std::abs(invariant_metric(x, y) - invariant_metric(y, x)) < 1e-12);
    CHECK(invariant_metric(x, y) > 1e-6);
  }
}

TEST_CASE("closure: products of valid elements validate (1000 pairs)") {
  for (const ChartSpec& spec : {ChartSpec::so(3), ChartSpec::so(5), ChartSpec::su(2), ChartSpec::su(3)}) {
    HaarSampler s(spec, 17);
    int bad = 0;
    for (int t = 0; t < 1000; ++t) {
      const GroupElement a = s.next(), b = s.next();
      if (!validate(a) || !validate(b) || !validate(multiply(a, b))) ++bad;
    }
    CHECK(bad == 0);
  }
}
