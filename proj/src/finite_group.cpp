#include "haarlab/finite_group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace haarlab {

ParseError::ParseError(const std::string& what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
  const int h = order();
  if (h < 1) throw std::invalid_argument("group table is empty");
  for (int a = 0; a < h; ++a) {
    if (static_cast<int>(table_[a].size()) != h)
      throw std::invalid_argument("group table row " + std::to_string(a) + " has wrong length");
    std::vector<char> seen(h, 0);
    for (int b = 0; b < h; ++b) {
      const int v = table_[a][b];
      if (v < 0 || v >= h) throw std::invalid_argument("group table entry out of range");
      if (seen[v]) throw std::invalid_argument("group table row " + std::to_string(a) +
                                               " is not a permutation");
      seen[v] = 1;
    }
  }
  for (int b = 0; b < h; ++b) {
    std::vector<char> seen(h, 0);
    for (int a = 0; a < h; ++a) {
      if (seen[table_[a][b]])
        throw std::invalid_argument("group table column " + std::to_string(b) +
                                    " is not a permutation");
      seen[table_[a][b]] = 1;
    }
  }
  for (int a = 0; a < h; ++a)
    if (table_[0][a] != a || table_[a][0] != a)
      throw std::invalid_argument("element 0 is not the identity");
  inverse_.assign(h, -1);
  for (int a = 0; a < h; ++a) {
    for (int b = 0; b < h; ++b)
      if (table_[a][b] == 0) {
        if (table_[b][a] != 0) throw std::invalid_argument("missing two-sided inverse");
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0) throw std::invalid_argument("missing inverse");
  }
  auto check = [&](int a, int b, int c) {
    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
      throw std::invalid_argument("group table is not associative");
  };
  if (h <= 64) {
    for (int a = 0; a < h; ++a)
      for (int b = 0; b < h; ++b)
        for (int c = 0; c < h; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, h - 1);
    for (int t = 0; t < 20000; ++t) check(pick(rng), pick(rng), pick(rng));
  }
}

int FiniteGroup::power(int a, long long k) const {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  int r = 0;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators,
                                           std::string name, int cap) {
  int degree = 0;
  for (const auto& g : generators) degree = std::max(degree, static_cast<int>(g.size()));
  auto pad = [degree](Permutation p) {
    for (int i = static_cast<int>(p.size()); i < degree; ++i) p.push_back(i);
    return p;
  };
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elems{id};
  std::map<Permutation, int> index{{id, 0}};
  std::vector<Permutation> gens;
  for (const auto& g : generators) gens.push_back(pad(g));
  auto compose = [degree](const Permutation& a, const Permutation& b) {
    Permutation r(degree);
    for (int x = 0; x < degree; ++x) r[x] = b[a[x]];
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Permutation p = compose(elems[i], g);
      if (index.count(p)) continue;
      if (static_cast<int>(elems.size()) >= cap)
        throw std::invalid_argument("generated group exceeds the size cap of " + std::to_string(cap));
      index.emplace(p, static_cast<int>(elems.size()));
      elems.push_back(std::move(p));
    }
  const int h = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(h, std::vector<int>(h));
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < h; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  FiniteGroup g(std::move(table), std::move(name));
  g.perms_ = std::move(elems);
  return g;
}

Permutation parse_cycles(const std::string& text, int degree, int line) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int maxpt = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip();
  if (i == text.size()) throw ParseError("empty permutation", line);
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + text, line);
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip();
      if (i >= text.size()) throw ParseError("unterminated cycle: " + text, line);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in cycle", line);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1) throw ParseError("points are numbered from 1", line);
      if (std::find(cyc.begin(), cyc.end(), v) != cyc.end())
        throw ParseError("point " + std::to_string(v) + " repeated in a cycle", line);
      cyc.push_back(v);
      maxpt = std::max(maxpt, v);
    }
    cycles.push_back(std::move(cyc));
    skip();
  }
  const int n = std::max(degree, maxpt);
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  // Only disjoint cycles are accepted.
  std::vector<char> moved(n, 0);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int from = c[k] - 1, to = c[(k + 1) % c.size()] - 1;
      if (c.size() > 1 && moved[from]) throw ParseError("cycles are not disjoint", line);
      if (c.size() > 1) moved[from] = 1;
      p[from] = to;
    }
  return p;
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      out += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace {

std::string strip_comment(const std::string& s) {
  const auto pos = s.find('#');
  return pos == std::string::npos ? s : s.substr(0, pos);
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

FiniteGroup parse_table(std::istream& in, const std::string& name) {
  std::string line;
  int lineno = 0;
  int h = -1;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_comment(line);
    if (blank(line)) continue;
    std::istringstream ls(line);
    if (h < 0) {
      if (!(ls >> h) || h < 1) throw ParseError("first line must be the group order", lineno);
      std::string extra;
      if (ls >> extra) throw ParseError("unexpected text after the group order", lineno);
      continue;
    }
    if (static_cast<int>(rows.size()) == h) throw ParseError("more than h table rows", lineno);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (...) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError("not an integer: '" + tok + "'", lineno);
      if (v < 0 || v >= h) throw ParseError("index " + tok + " outside 0.." + std::to_string(h - 1), lineno);
      row.push_back(v);
    }
    if (static_cast<int>(row.size()) != h)
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(h), lineno);
    std::vector<int> sorted(row);
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < h; ++k)
      if (sorted[k] != k) throw ParseError("row is not a permutation of 0.." + std::to_string(h - 1), lineno);
    rows.push_back(std::move(row));
  }
  if (h < 0) throw ParseError("empty group table", 0);
  if (static_cast<int>(rows.size()) != h)
    throw ParseError("expected " + std::to_string(h) + " table rows, found " +
                         std::to_string(rows.size()), lineno);
  try {
    return FiniteGroup(std::move(rows), name);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

FiniteGroup parse_generators(std::istream& in, const std::string& name, int cap) {
  std::string line;
  int lineno = 0;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_comment(line);
    if (blank(line)) continue;
    gens.push_back(parse_cycles(line, 0, lineno));
  }
  if (gens.empty()) throw ParseError("no generators found", 0);
  try {
    return FiniteGroup::from_permutations(gens, name, cap);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

FiniteGroup load_group(const std::string& path, int cap) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open group file '" + path + "'");
  std::string line;
  bool generators = false;
  while (std::getline(f, line)) {
    line = strip_comment(line);
    if (blank(line)) continue;
    generators = line.find('(') != std::string::npos;
    break;
  }
  f.clear();
  f.seekg(0);
  std::string name = path;
  const auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  return generators ? parse_generators(f, name, cap) : parse_table(f, name);
}

FiniteGroup cyclic_group(int m) {
  if (m < 1) throw std::invalid_argument("cyclic_group: order must be positive");
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  return FiniteGroup(std::move(t), "Z" + std::to_string(m));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int ha = a.order(), hb = b.order(), h = ha * hb;
  std::vector<std::vector<int>> t(h, std::vector<int>(h));
  for (int x = 0; x < h; ++x)
    for (int y = 0; y < h; ++y) t[x][y] = a.mul(x / hb, y / hb) * hb + b.mul(x % hb, y % hb);
  return FiniteGroup(std::move(t), a.name() + "x" + b.name());
}

FiniteGroup symmetric_group(int n) {
  if (n < 1) throw std::invalid_argument("symmetric_group: n must be positive");
  if (n == 1) return cyclic_group(1);
  std::vector<Permutation> gens{parse_cycles("(1 2)", n)};
  if (n > 2) {
    std::string cyc = "(";
    for (int i = 1; i <= n; ++i) cyc += std::to_string(i) + (i < n ? " " : ")");
    gens.push_back(parse_cycles(cyc, n));
  }
  return FiniteGroup::from_permutations(gens, "S" + std::to_string(n));
}

FiniteGroup alternating_group(int n) {
  if (n < 3) return cyclic_group(1);
  std::vector<Permutation> gens;
  for (int i = 3; i <= n; ++i) gens.push_back(parse_cycles("(1 2 " + std::to_string(i) + ")", n));
  return FiniteGroup::from_permutations(gens, "A" + std::to_string(n));
}

FiniteGroup dihedral_group(int n) {
  if (n < 3) throw std::invalid_argument("dihedral_group: n must be >= 3");
  std::string rot = "(";
  for (int i = 1; i <= n; ++i) rot += std::to_string(i) + (i < n ? " " : ")");
  std::string refl;
  for (int i = 2, j = n; i < j; ++i, --j) refl += "(" + std::to_string(i) + " " + std::to_string(j) + ")";
  return FiniteGroup::from_permutations({parse_cycles(rot, n), parse_cycles(refl, n)},
                                        "D" + std::to_string(n));
}

FiniteGroup quaternion_group() {
  return FiniteGroup::from_permutations(
      {parse_cycles("(1 2 3 4)(5 6 7 8)"), parse_cycles("(1 5 3 7)(2 8 4 6)")}, "Q8");
}

FiniteGroup psl2(int p) {
  if (p < 2) throw std::invalid_argument("psl2: p must be prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("psl2: p must be prime");
  // Points 0..p-1 of F_p and infinity = p; x -> x + 1 and x -> -1/x.
  Permutation t(p + 1), s(p + 1);
  for (int x = 0; x < p; ++x) t[x] = (x + 1) % p;
  t[p] = p;
  auto inv = [p](int x) {
    for (int y = 1; y < p; ++y)
      if (x * y % p == 1) return y;
    return -1;
  };
  for (int x = 1; x < p; ++x) s[x] = (p - inv(x)) % p;
  s[0] = p;
  s[p] = 0;
  return FiniteGroup::from_permutations({t, s}, "PSL2_" + std::to_string(p));
}

FiniteGroup builtin_group(const std::string& name) {
  if (name == "Z2xZ2") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name == "Q8") return quaternion_group();
  auto number = [&](std::size_t from) {
    const std::string digits = name.substr(from);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw std::invalid_argument("unknown builtin group '" + name + "'");
    return std::stoi(digits);
  };
  if (name.rfind("PSL2_", 0) == 0) return psl2(number(5));
  if (!name.empty() && name[0] == 'Z') return cyclic_group(number(1));
  if (!name.empty() && name[0] == 'S') return symmetric_group(number(1));
  if (!name.empty() && name[0] == 'A') return alternating_group(number(1));
  if (!name.empty() && name[0] == 'D') return dihedral_group(number(1));
  throw std::invalid_argument("unknown builtin group '" + name + "'");
}

std::vector<std::string> corpus_names() {
  return {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "Q8", "D4", "A4", "S4"};
}

ConjClasses conjugacy_classes(const FiniteGroup& g) {
  const int h = g.order();
  std::vector<int> owner(h, -1);
  std::vector<std::vector<int>> found;
  for (int a = 0; a < h; ++a) {
    if (owner[a] >= 0) continue;
    std::vector<int> cls;
    for (int v = 0; v < h; ++v) {
      const int c = g.mul(g.mul(v, a), g.inverse(v));
      if (owner[c] < 0) {
        owner[c] = static_cast<int>(found.size());
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    found.push_back(std::move(cls));
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x.front() < y.front();
  });
  ConjClasses out;
  out.classes = std::move(found);
  out.class_of.assign(h, -1);
  for (int c = 0; c < out.count(); ++c) {
    out.sizes.push_back(static_cast<int>(out.classes[c].size()));
    out.representatives.push_back(out.classes[c].front());
    for (int x : out.classes[c]) out.class_of[x] = c;
  }
  for (int c = 0; c < out.count(); ++c)
    out.inverse_class.push_back(out.class_of[g.inverse(out.representatives[c])]);
  return out;
}

StructureConstants structure_constants(const FiniteGroup& g, const ConjClasses& cls) {
  const int k = cls.count();
  StructureConstants sc;
  sc.k = k;
  sc.data.assign(static_cast<std::size_t>(k) * k * k, 0);
  // ABC = E  <=>  C = (AB)^{-1}: one pass over A in a, B in b.
#pragma omp parallel for schedule(dynamic)
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int A : cls.classes[a])
        for (int B : cls.classes[b]) ++sc.at(a, b, cls.class_of[g.inverse(g.mul(A, B))]);
  return sc;
}

StructureConstants structure_constants_reference(const FiniteGroup& g, const ConjClasses& cls) {
  const int k = cls.count();
  StructureConstants sc;
  sc.k = k;
  sc.data.assign(static_cast<std::size_t>(k) * k * k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int A : cls.classes[a])
          for (int B : cls.classes[b])
            for (int C : cls.classes[c])
              if (g.mul(g.mul(A, B), C) == g.identity()) ++sc.at(a, b, c);
  return sc;
}

}  // namespace haarlab
