#include "haarlab/finite_functions.hpp"

namespace haarlab {

FiniteFunction<Cyclotomic> exact_character(const FiniteGroup& g, const ConjClasses& cls,
                                           const CharacterTable& t, int row) {
  if (!t.has_exact()) throw std::invalid_argument("exact_character: table has no exact entries");
  FiniteFunction<Cyclotomic> f;
  for (int s = 0; s < g.order(); ++s) f.push_back(t.exact[row][cls.class_of[s]]);
  return f;
}

FiniteFunction<Complex> numeric_character(const FiniteGroup& g, const ConjClasses& cls,
                                          const CharacterTable& t, int row) {
  FiniteFunction<Complex> f;
  for (int s = 0; s < g.order(); ++s) f.push_back(t.values(row, cls.class_of[s]));
  return f;
}

namespace {

std::vector<int> inverse_perm(const Permutation& p) {
  std::vector<int> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

const std::vector<Permutation>& perms_of(const FiniteGroup& g) {
  if (g.permutations().empty())
    throw std::invalid_argument("group has no permutation realization");
  return g.permutations();
}

}  // namespace

MatrixRep<Cyclotomic> standard_rep(const FiniteGroup& g, int order) {
  const auto& perms = perms_of(g);
  const int n = static_cast<int>(perms.front().size());
  MatrixRep<Cyclotomic> rep;
  rep.dim = n - 1;
  const Cyclotomic zero(order);
  for (const auto& p : perms) {
    const std::vector<int> q = inverse_perm(p);
    SquareMatrix<Cyclotomic> m(n - 1, zero);
    for (int i = 0; i + 1 < n; ++i) {
      // image of e_i - e_{i+1}, then coordinates by partial sums
      std::vector<long> v(n, 0);
      v[q[i]] += 1;
      v[q[i + 1]] -= 1;
      long c = 0;
      for (int j = 0; j + 1 < n; ++j) {
        c += v[j];
        if (c) m(j, i) = Cyclotomic(order, mpq_class(c));
      }
    }
    rep.at.push_back(std::move(m));
  }
  return rep;
}

MatrixRep<Cyclotomic> sign_rep(const FiniteGroup& g, int order) {
  MatrixRep<Cyclotomic> rep;
  rep.dim = 1;
  for (const auto& p : perms_of(g)) {
    int transpositions = 0;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
        seen[j] = 1;
        ++len;
      }
      transpositions += len - 1;
    }
    SquareMatrix<Cyclotomic> m(1, Cyclotomic(order, mpq_class(transpositions % 2 ? -1 : 1)));
    rep.at.push_back(std::move(m));
  }
  return rep;
}

MatrixRep<Complex> to_matrix_rep(const FiniteRep& r) {
  MatrixRep<Complex> out;
  out.dim = r.dim;
  for (const auto& m : r.at) {
    SquareMatrix<Complex> s(r.dim, 0.0);
    for (int i = 0; i < r.dim; ++i)
      for (int j = 0; j < r.dim; ++j) s(i, j) = m(i, j);
    out.at.push_back(std::move(s));
  }
  return out;
}

MatrixRep<Complex> numeric(const MatrixRep<Cyclotomic>& r) {
  MatrixRep<Complex> out;
  out.dim = r.dim;
  for (const auto& m : r.at) {
    SquareMatrix<Complex> s(r.dim, 0.0);
    for (std::size_t i = 0; i < m.a.size(); ++i) s.a[i] = m.a[i].to_complex();
    out.at.push_back(std::move(s));
  }
  return out;
}

FiniteFunction<Complex> numeric(const FiniteFunction<Cyclotomic>& f) {
  FiniteFunction<Complex> out;
  for (const auto& v : f) out.push_back(v.to_complex());
  return out;
}

}  // namespace haarlab
