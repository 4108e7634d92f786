#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "haarlab/frobenius.hpp"

using namespace haarlab;

namespace {

const std::string data_dir = HAARLAB_TEST_DATA;

int parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_table(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

int class_of_size(const ConjClasses& cls, int size) {
  for (int c = 0; c < cls.count(); ++c)
    if (cls.sizes[c] == size) return c;
  return -1;
}

}  // namespace

TEST_CASE("loading groups from files") {
  const FiniteGroup z4 = load_group(data_dir + "/z4.table");
  CHECK(z4.order() == 4);
  CHECK(z4.is_abelian());
  CHECK(z4.exponent() == 4);
  const FiniteGroup s3 = load_group(data_dir + "/s3.gens");
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.permutations().size() == 6);
  CHECK_THROWS_AS(load_group(data_dir + "/bad_row.table"), ParseError);
  CHECK_THROWS_AS(load_group(data_dir + "/bad_cycles.gens"), ParseError);
  CHECK_THROWS(load_group(data_dir + "/missing.table"));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line("2\n0 1\n1 x\n") == 3);
  CHECK(parse_error_line("# header\n3\n0 1 2\n1 1 0\n2 0 1\n") == 4);
  CHECK(parse_error_line("2\n0 1\n1 5\n") == 3);
  CHECK(parse_error_line("2\n0 1\n1 0 1\n") == 3);
  try {
    std::istringstream in("2\n0 1\n1 x\n");
    parse_table(in);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 3: ", 0) == 0);
  }
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 1)"), ParseError);
  CHECK(format_cycles(parse_cycles("(1 3 2)")) == "(1 3 2)");
  CHECK(format_cycles(parse_cycles("()", 3)) == "()");
}

TEST_CASE("group axioms are validated") {
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup({{1, 0}, {0, 1}}), std::invalid_argument);  // element 0 is not the identity
  // a Latin square with identity 0 that is not associative
  CHECK_THROWS_AS(FiniteGroup({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}),
                  std::invalid_argument);
  CHECK_NOTHROW(FiniteGroup({{0, 1}, {1, 0}}));
}

TEST_CASE("builtin groups") {
  CHECK(builtin_group("Z2xZ2").order() == 4);
  CHECK(builtin_group("Q8").order() == 8);
  CHECK(builtin_group("D4").order() == 8);
  CHECK(builtin_group("A4").order() == 12);
  CHECK(builtin_group("S4").order() == 24);
  CHECK(builtin_group("S5").order() == 120);
  CHECK(builtin_group("Z7").order() == 7);
  CHECK(builtin_group("PSL2_7").order() == 168);
  CHECK(corpus_names().size() == 9);
  CHECK_THROWS(builtin_group("nonsense"));
  const FiniteGroup d4 = builtin_group("D4");
  CHECK_FALSE(d4.is_abelian());
  CHECK(d4.exponent() == 4);
}

TEST_CASE("permutation products apply the left factor first") {
  const FiniteGroup s3 = builtin_group("S3");
  const auto& p = s3.permutations();
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const Permutation& ab = p[s3.mul(a, b)];
      for (int x = 0; x < 3; ++x) CHECK(ab[x] == p[b][p[a][x]]);
    }
}

TEST_CASE("conjugacy classes") {
  const ConjClasses z4 = conjugacy_classes(builtin_group("Z4"));
  CHECK(z4.count() == 4);
  CHECK(conjugacy_classes(builtin_group("S3")).sizes == std::vector<int>{1, 2, 3});
  CHECK(conjugacy_classes(builtin_group("Q8")).sizes == std::vector<int>{1, 1, 2, 2, 2});
  CHECK(conjugacy_classes(builtin_group("S4")).sizes == std::vector<int>{1, 3, 6, 6, 8});
  const ConjClasses a4 = conjugacy_classes(builtin_group("A4"));
  CHECK(a4.count() == 4);
  // the two classes of 3-cycles are inverse to each other
  const int c = class_of_size(a4, 4);
  CHECK(a4.inverse_class[c] != c);
  CHECK(a4.inverse_class[a4.inverse_class[c]] == c);
}

TEST_CASE("structure constants") {
  const FiniteGroup s3 = builtin_group("S3");
  const ConjClasses cls = conjugacy_classes(s3);
  const StructureConstants sc = structure_constants(s3, cls);
  const int t = class_of_size(cls, 3), r = class_of_size(cls, 2);
  CHECK(sc.at(t, t, 0) == 3);
  CHECK(sc.at(t, t, r) == 6);
  for (const std::string& name : corpus_names()) {
    const FiniteGroup g = builtin_group(name);
    const ConjClasses k = conjugacy_classes(g);
    const StructureConstants s = structure_constants(g, k);
    CHECK_MESSAGE(s == structure_constants_reference(g, k), name);
    for (int a = 0; a < k.count(); ++a) {
      CHECK(s.at(a, k.inverse_class[a], 0) == k.sizes[a]);
      for (int b = 0; b < k.count(); ++b)
        for (int c = 0; c < k.count(); ++c) {
          CHECK(s.at(a, b, c) == s.at(b, c, a));
          CHECK(s.at(a, b, c) == s.at(b, a, c));
        }
    }
  }
}

TEST_CASE("class matrices") {
  const FiniteGroup s3 = builtin_group("S3");
  const ConjClasses cls = conjugacy_classes(s3);
  const auto m = class_matrices(s3, cls, structure_constants(s3, cls));
  CHECK(m[0].is_identity());
  for (const std::string& name : corpus_names()) {
    const FiniteGroup g = builtin_group(name);
    const ConjClasses k = conjugacy_classes(g);
    const auto ms = class_matrices(g, k, structure_constants(g, k));
    for (std::size_t a = 0; a < ms.size(); ++a)
      for (std::size_t b = 0; b < ms.size(); ++b) CHECK_MESSAGE(ms[a] * ms[b] == ms[b] * ms[a], name);
  }
  const int t = class_of_size(cls, 3);
  Eigen::ComplexEigenSolver<CMatrix> es(m[t].to_complex());
  std::vector<double> ev;
  for (int i = 0; i < 3; ++i) ev.push_back(es.eigenvalues()(i).real());
  std::sort(ev.begin(), ev.end());
  CHECK(ev[0] == doctest::Approx(-1.0));
  CHECK(std::abs(ev[1]) < 1e-12);
  CHECK(ev[2] == doctest::Approx(1.0));
}

TEST_CASE("character tables of small groups") {
  const CharacterTable z4 = solve_character_equation(builtin_group("Z4"));
  CHECK(z4.degrees == std::vector<int>{1, 1, 1, 1});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Complex v = z4.values(i, j);
      CHECK(std::abs(std::pow(v, 4) - 1.0) < 1e-12);
      CHECK(std::abs(std::abs(v.real()) + std::abs(v.imag()) - 1.0) < 1e-12);
    }

  const CharacterTable s3 = solve_character_equation(builtin_group("S3"));
  CHECK(s3.degrees == std::vector<int>{1, 1, 2});
  // classes are (E, 3-cycles, transpositions)
  const double rows[3][3] = {{1, 1, 1}, {1, 1, -1}, {2, -1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs(s3.values(i, j) - rows[i][j]) < 1e-12);
      CHECK(s3.exact[i][j] == Cyclotomic(s3.exponent, mpq_class(static_cast<long>(rows[i][j]))));
    }

  const FiniteGroup a4g = builtin_group("A4");
  const CharacterTable a4 = solve_character_equation(a4g);
  CHECK(a4.degrees == std::vector<int>{1, 1, 1, 3});
  const ConjClasses cls = conjugacy_classes(a4g);
  const int c = class_of_size(cls, 4);
  bool cube_root = false;
  for (int i = 0; i < 3; ++i) cube_root = cube_root || entry_annotation(a4, i, c) == "x^2 + x + 1";
  CHECK(cube_root);
  CHECK(render_entry(a4, 3, 0) == "3");

  const CharacterTable q8 = solve_character_equation(builtin_group("Q8"));
  CHECK(q8.degrees == std::vector<int>{1, 1, 1, 1, 2});
  const CharacterTable klein = solve_character_equation(builtin_group("Z2xZ2"));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(std::abs(std::abs(klein.values(i, j).real()) - 1.0) < 1e-15);
}

TEST_CASE("corpus: exact character theory and the regular representation oracle") {
  for (const std::string& name : corpus_names()) {
    const FiniteGroup g = builtin_group(name);
    const ConjClasses cls = conjugacy_classes(g);
    const StructureConstants sc = structure_constants(g, cls);
    const CharacterTable t = solve_character_equation(g);
    REQUIRE(t.has_exact());
    const CheckReport eq = character_equation_check(g, cls, sc, t);
    CHECK_MESSAGE((eq.exact && eq.pass && eq.max_residual == 0.0), name);
    const AxiomReport ax = frobenius_axiom_check(g, cls, t);
    CHECK_MESSAGE((ax.exact && ax.pass), name);
    const OrthogonalityReport orth = orthogonality_check(cls, t);
    CHECK_MESSAGE((orth.exact && orth.pass && orth.degree_sum && orth.nonsingular), name);
    int sum = 0;
    for (int f : t.degrees) {
      sum += f * f;
      CHECK_MESSAGE(g.order() % f == 0, name);
    }
    CHECK(sum == g.order());
    const RegularDecomposition d = regular_rep_oracle(g);
    CHECK_MESSAGE(tables_match(t, d.table, 1e-8) <= 1e-8, name);
    CHECK(d.table.degrees == t.degrees);
    for (std::size_t i = 0; i < d.irreps.size(); ++i) CHECK(d.irreps[i].dim == d.table.degrees[i]);
    CHECK(solve_character_equation(g, 77).values.isApprox(t.values, 1e-12));
  }
}

TEST_CASE("oracle irreducibles are homomorphisms") {
  const FiniteGroup g = builtin_group("D4");
  const RegularDecomposition d = regular_rep_oracle(g);
  for (const FiniteRep& r : d.irreps)
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) CHECK((r.at[a] * r.at[b] - r.at[g.mul(a, b)]).cwiseAbs().maxCoeff() < 1e-10);
  CHECK_THROWS_AS(regular_rep_oracle(builtin_group("S5")), std::length_error);
}

TEST_CASE("larger groups solve beyond the oracle cap") {
  for (const std::string name : {"S5", "PSL2_7"}) {
    const FiniteGroup g = builtin_group(name);
    const ConjClasses cls = conjugacy_classes(g);
    const CharacterTable t = solve_character_equation(g);
    CHECK(character_equation_check(g, cls, structure_constants(g, cls), t).pass);
    CHECK(orthogonality_check(cls, t).pass);
  }
}

TEST_CASE("negative controls: corrupted tables are rejected") {
  const FiniteGroup g = builtin_group("S3");
  const ConjClasses cls = conjugacy_classes(g);
  const StructureConstants sc = structure_constants(g, cls);
  CharacterTable bad = solve_character_equation(g);
  bad.exact[2][1] = bad.exact[2][1] + Cyclotomic(bad.exponent, mpq_class(1));
  bad.values(2, 1) += 1.0;
  const CheckReport eq = character_equation_check(g, cls, sc, bad);
  CHECK_FALSE(eq.pass);
  CHECK(eq.max_residual > 0.0);
  CHECK_FALSE(frobenius_axiom_check(g, cls, bad).pass);
  CHECK_FALSE(orthogonality_check(cls, bad).pass);

  CharacterTable numeric = solve_character_equation(g);
  numeric.exact.clear();
  CHECK(character_equation_check(g, cls, sc, numeric).pass);
  numeric.values(1, 2) += 1e-3;
  const CheckReport neq = character_equation_check(g, cls, sc, numeric);
  CHECK_FALSE(neq.exact);
  CHECK_FALSE(neq.pass);
  CHECK(neq.max_residual > 1e-6);
}

TEST_CASE("group determinant") {
  const FiniteGroup z2 = builtin_group("Z2");
  const Complex xe(1.3, 0.2), xa(-0.4, 0.9);
  CHECK(std::abs(group_determinant(z2, {xe, xa}) - (xe * xe - xa * xa)) < 1e-14);
  const FiniteGroup s3 = builtin_group("S3");
  std::vector<Complex> delta(6, 0.0);
  delta[0] = 1.0;
  CHECK(std::abs(group_determinant(s3, delta) - 1.0) < 1e-14);
  CHECK(std::abs(group_determinant(s3, std::vector<Complex>(6, 2.5))) < 1e-10);
  CHECK_THROWS(group_determinant(s3, std::vector<Complex>(5, 1.0)));
}

TEST_CASE("group determinant factorization") {
  for (const std::string name : {"S3", "Q8", "Z4", "Z2xZ2", "D4"}) {
    const FiniteGroup g = builtin_group(name);
    const RegularDecomposition d = regular_rep_oracle(g);
    const FactorizationReport f = verify_factorization(g, d, 20);
    CHECK_MESSAGE(f.pass, name);
    CHECK(f.general_residual < 1e-8);
    CHECK(f.class_constant_residual < 1e-8);
    for (std::size_t i = 0; i < f.expected_exponents.size(); ++i) {
      CHECK(f.expected_exponents[i] == d.table.degrees[i] * d.table.degrees[i]);
      CHECK(f.fitted_exponents[i] == doctest::Approx(f.expected_exponents[i]).epsilon(1e-6));
    }
  }
  const FactorizationReport s3 = verify_factorization(builtin_group("S3"), regular_rep_oracle(builtin_group("S3")), 20);
  CHECK(s3.expected_exponents == std::vector<int>{1, 1, 4});
  const FactorizationReport none = verify_factorization(builtin_group("Q8"), regular_rep_oracle(builtin_group("Q8")), 0);
  CHECK(none.trials == 0);
  CHECK(none.pass);
}
