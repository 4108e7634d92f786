#pragma once

#include <string>
#include <vector>

#include "haarlab/group_element.hpp"
#include "haarlab/haar.hpp"

namespace haarlab {

/// Angles of the maximal torus h(phi) = r_12(phi_1) r_34(phi_2) ... of SO(n).
struct CartanAngles {
  std::vector<double> phi;  ///< length floor(n/2)
};

enum class RootType { B, D };

struct RootSystem {
  RootType type = RootType::B;
  int nu = 1;
  std::vector<std::vector<int>> positive_roots;
  std::vector<double> rho;
};

struct WeylData {
  long long order = 0;
  double calibration_integral = 0.0;  ///< integral of |D|^2 over the torus, normalized
};

int rank_of(int n);  // floor(n / 2)

GroupElement cartan_element(const CartanAngles& a, int n);

/// exp(i <alpha, phi>). Half-integral alpha is allowed (used for D).
Complex xi(const std::vector<double>& alpha, const CartanAngles& a);

/// B_nu for n = 2 nu + 1, D_nu for n = 2 nu. Throws for n < 3.
RootSystem positive_roots(int n);

/// prod over positive roots of (xi(alpha/2) - xi(-alpha/2)).
Complex weyl_denominator(const CartanAngles& a, int n);
double weyl_denominator_sq(const CartanAngles& a, int n);

/// |W| from 1 = (1/|W|) * integral of |D|^2 over the torus (trapezoid rule,
/// `torus_nodes` per angle). Throws ResolutionError if the integral is more
/// than 1e-6 from an integer.
WeylData weyl_group_order(int n, int torus_nodes = 128);

struct WeylIntegral {
  Complex value;
  long long weyl_order = 0;
  /// Largest |f(v h v^-1) - f(h)| over the spot checks.
  double class_function_defect = 0.0;
  bool class_function_warning = false;
};

/// (1/|W|) integral over the torus of f(h) |D(h)|^2 dh, normalized dh.
/// f is spot-checked for conjugation invariance at 10 random (v, h) pairs.
WeylIntegral weyl_integrate(const GroupFunction& f, int n, int torus_nodes = 128,
                            std::uint64_t seed = 7);

}  // namespace haarlab
