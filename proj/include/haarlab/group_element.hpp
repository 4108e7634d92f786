#pragma once

#include <string>

#include "haarlab/types.hpp"

namespace haarlab {

enum class GroupKind { SO, SU, Finite };

/// Which group a matrix claims to belong to. For finite groups `finite_id`
/// names the group and `n` is the dimension of the matrix realization.
struct GroupTag {
  GroupKind kind = GroupKind::SO;
  int n = 1;
  std::string finite_id;

  static GroupTag so(int n) { return {GroupKind::SO, n, {}}; }
  static GroupTag su(int n) { return {GroupKind::SU, n, {}}; }
  static GroupTag finite(std::string id, int n) { return {GroupKind::Finite, n, std::move(id)}; }

  bool operator==(const GroupTag&) const = default;
  std::string name() const;
};

/// A square complex matrix together with the group it is claimed to lie in.
/// SO(n) elements are stored with zero imaginary parts. Construction never
/// checks the defining equations; use validate() for that.
class GroupElement {
 public:
  GroupElement(CMatrix entries, GroupTag tag);

  static GroupElement identity(const GroupTag& tag);

  const CMatrix& entries() const { return entries_; }
  const GroupTag& tag() const { return tag_; }
  int n() const { return tag_.n; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

 private:
  CMatrix entries_;
  GroupTag tag_;
};

/// True iff the defining relations of g's tag hold within tol.eps_validate:
/// orthogonality (rows), det 1 and real entries for SO(n); unitarity and
/// det 1 for SU(n); unitarity only for finite matrix groups.
/// Throws std::invalid_argument if the matrix is not n x n or has
/// non-finite entries.
bool validate(const GroupElement& g, const Tolerance& tol = {});

/// Rotation by phi in the (i, j) coordinate plane, 1-based indices with
/// i < j <= n: identity except the block [[cos, -sin], [sin, cos]].
GroupElement planar_rotation(int i, int j, double phi, int n);

GroupElement multiply(const GroupElement& a, const GroupElement& b);
/// Conjugate transpose; valid because every supported group is unitary.
GroupElement inverse(const GroupElement& a);
/// v g v^{-1}
GroupElement conjugate(const GroupElement& v, const GroupElement& g);

/// Frobenius distance between x^{-1} y and the identity. Left invariant:
/// rho(zx, zy) = rho(x, y).
double invariant_metric(const GroupElement& x, const GroupElement& y);

}  // namespace haarlab
