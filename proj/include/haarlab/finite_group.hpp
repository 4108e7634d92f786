#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace haarlab {

/// Input error with the 1-based line it was found on (0 if not line-bound).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line);
  int line() const { return line_; }

 private:
  int line_;
};

using Permutation = std::vector<int>;  // 0-based images

/// A finite group given by its multiplication table. Element 0 is the
/// identity. When built from permutations, `permutations()` holds the
/// realization and products compose left to right: (ab)(x) = b(a(x)).
class FiniteGroup {
 public:
  /// Verifies the group axioms (associativity on all triples for h <= 64,
  /// on 20000 sampled triples beyond that). Throws std::invalid_argument.
  FiniteGroup(std::vector<std::vector<int>> table, std::string name = "G");

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  int power(int a, long long k) const;
  int element_order(int a) const;
  /// Least common multiple of the element orders.
  int exponent() const;
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::string& name() const { return name_; }
  const std::vector<Permutation>& permutations() const { return perms_; }
  bool is_abelian() const;

  static FiniteGroup from_permutations(const std::vector<Permutation>& generators,
                                       std::string name = "G", int cap = 100000);

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::string name_;
  std::vector<Permutation> perms_;
};

/// Cycle notation such as "(1 2)(3 4)" or "(1,2,3)"; points are 1-based.
/// `degree` <= 0 means the largest moved point.
Permutation parse_cycles(const std::string& text, int degree = 0, int line = 0);
std::string format_cycles(const Permutation& p);

/// Table format: first line h, then h lines of h 0-based indices.
FiniteGroup parse_table(std::istream& in, const std::string& name = "G");
/// One generator per line in cycle notation; '#' starts a comment.
FiniteGroup parse_generators(std::istream& in, const std::string& name = "G", int cap = 100000);
/// Detects the format from the first non-comment line.
FiniteGroup load_group(const std::string& path, int cap = 100000);

FiniteGroup cyclic_group(int m);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group(int n);
FiniteGroup dihedral_group(int n);  // order 2n
FiniteGroup quaternion_group();
FiniteGroup psl2(int p);            // p prime, on the projective line
/// Z2, Z3, Z4, Z2xZ2, S3, Q8, D4, A4, S4, S5, Zm, Sn, An, Dn, PSL2_p.
FiniteGroup builtin_group(const std::string& name);
std::vector<std::string> corpus_names();  // the fixed nine-group test corpus

struct ConjClasses {
  std::vector<std::vector<int>> classes;  ///< sorted element lists
  std::vector<int> sizes;
  std::vector<int> inverse_class;         ///< alpha -> alpha'
  std::vector<int> class_of;              ///< element -> class index
  std::vector<int> representatives;       ///< smallest element of each class

  int count() const { return static_cast<int>(classes.size()); }
};

/// Orbits under conjugation, ordered by size then smallest element.
ConjClasses conjugacy_classes(const FiniteGroup& g);

struct StructureConstants {
  int k = 0;
  std::vector<long long> data;

  long long at(int a, int b, int c) const { return data[(static_cast<std::size_t>(a) * k + b) * k + c]; }
  long long& at(int a, int b, int c) { return data[(static_cast<std::size_t>(a) * k + b) * k + c]; }
  bool operator==(const StructureConstants&) const = default;
};

/// h_{abc} = #{(A, B, C) in a x b x c : ABC = E}. O(h^2), OpenMP over a.
StructureConstants structure_constants(const FiniteGroup& g, const ConjClasses& cls);
/// Brute-force triple enumeration, single thread.
StructureConstants structure_constants_reference(const FiniteGroup& g, const ConjClasses& cls);

}  // namespace haarlab
