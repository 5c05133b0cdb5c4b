#include "posetdyn/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace posetdyn {

namespace {

struct Token {
  std::string text;
  std::size_t position;
};

bool is_number(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isdigit(c) != 0; });
}

int to_int(const Token& tok) {
  if (!is_number(tok.text)) throw ParseError("expected an integer, got '" + tok.text + "'", tok.position);
  if (tok.text.size() > 6) throw ParseError("integer '" + tok.text + "' is too large", tok.position);
  return std::stoi(tok.text);
}

}  // namespace

FamilySpec parse_spec(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
  const std::string head(text.substr(0, pos));
  if (head.empty()) throw ParseError("expected a family name", 0);
  if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
  ++pos;
  std::vector<Token> args;
  while (true) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected an argument", pos);
    args.push_back({std::string(text.substr(start, pos - start)), start});
    if (pos >= text.size()) throw ParseError("expected ')'", pos);
    if (text[pos] == ',') {
      ++pos;
      continue;
    }
    if (text[pos] == ')') {
      ++pos;
      break;
    }
    throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
  }
  if (pos != text.size()) throw ParseError("trailing characters", pos);

  auto ints = [&](std::size_t count, std::size_t from = 0) {
    if (args.size() != count + from) {
      throw ParseError(head + " takes " + std::to_string(count + from) + " argument(s)",
                       args.back().position);
    }
    std::vector<int> out;
    for (std::size_t i = from; i < args.size(); ++i) out.push_back(to_int(args[i]));
    return out;
  };

  FamilySpec spec;
  if (head == "R") {
    spec = {Family::Rectangle, ints(2)};
  } else if (head == "S") {
    spec = {Family::Staircase, ints(1)};
  } else if (head == "T") {
    spec = {Family::Trapezoid, ints(2)};
  } else if (head == "DS") {
    spec = {Family::DoubleStaircase, ints(2)};
  } else if (head == "AP") {
    spec = {Family::ArithProg, ints(3)};
  } else if (head == "V") {
    spec = {Family::ChainOfVs, ints(1)};
  } else if (head == "Phi") {
    const auto& kind = args.front();
    if (kind.text == "A" || kind.text == "B" || kind.text == "C" || kind.text == "D") {
      static const std::map<std::string, Family> families{{"A", Family::RootA},
                                                          {"B", Family::RootB},
                                                          {"C", Family::RootC},
                                                          {"D", Family::RootD}};
      spec = {families.at(kind.text), ints(1, 1)};
    } else if (kind.text == "I2") {
      spec = {Family::RootI2, ints(1, 1)};
    } else if (kind.text == "G2") {
      spec = {Family::RootG2, ints(0, 1)};
    } else if (kind.text == "H3") {
      spec = {Family::RootH3, ints(0, 1)};
    } else {
      throw ParseError("unknown root system '" + kind.text + "'", kind.position);
    }
  } else if (head == "Min") {
    const auto& kind = args.front();
    if (kind.text == "D") {
      spec = {Family::MinusculeD, ints(1, 1)};
    } else if (kind.text == "E6") {
      spec = {Family::MinusculeE6, ints(0, 1)};
    } else if (kind.text == "E7") {
      spec = {Family::MinusculeE7, ints(0, 1)};
    } else {
      throw ParseError("unknown minuscule type '" + kind.text + "'", kind.position);
    }
  } else {
    throw ParseError("unknown family '" + head + "'", 0);
  }
  validate(spec);
  return spec;
}

std::string FamilySpec::to_string() const {
  auto join = [&](std::string head, std::string prefix = {}) {
    std::ostringstream out;
    out << head << '(' << prefix;
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i > 0 || !prefix.empty()) out << ',';
      out << params[i];
    }
    out << ')';
    return out.str();
  };
  switch (family) {
    case Family::Rectangle: return join("R");
    case Family::Staircase: return join("S");
    case Family::Trapezoid: return join("T");
    case Family::DoubleStaircase: return join("DS");
    case Family::ArithProg: return join("AP");
    case Family::RootA: return join("Phi", "A");
    case Family::RootB: return join("Phi", "B");
    case Family::RootC: return join("Phi", "C");
    case Family::RootD: return join("Phi", "D");
    case Family::RootG2: return "Phi(G2)";
    case Family::RootI2: return join("Phi", "I2");
    case Family::RootH3: return "Phi(H3)";
    case Family::MinusculeD: return join("Min", "D");
    case Family::MinusculeE6: return "Min(E6)";
    case Family::MinusculeE7: return "Min(E7)";
    case Family::ChainOfVs: return join("V");
  }
  return "?";
}

void validate(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw ParameterError(spec.to_string() + ": requires " + what);
  };
  auto arity = [&](std::size_t k) {
    need(p.size() == k, std::to_string(k) + " parameter(s)");
  };
  switch (spec.family) {
    case Family::Rectangle:
      arity(2);
      need(p[0] >= 1 && p[1] >= 1, "a >= 1 and b >= 1");
      break;
    case Family::Staircase:
    case Family::ChainOfVs:
    case Family::RootA:
    case Family::RootB:
    case Family::RootC:
    case Family::MinusculeD:
      arity(1);
      need(p[0] >= 1, "n >= 1");
      break;
    case Family::Trapezoid:
      arity(2);
      need(p[0] >= 1 && p[0] <= p[1], "1 <= a <= b");
      break;
    case Family::DoubleStaircase:
      arity(2);
      need(p[0] >= 1, "n >= 1");
      need(p[1] >= 0 && p[1] <= p[0], "0 <= k <= n");
      break;
    case Family::ArithProg:
      arity(3);
      need(p[2] >= 1, "l >= 1");
      need(p[1] >= 0, "d >= 0");
      need(p[0] - p[2] * p[1] >= 0, "M - l*d >= 0");
      need(p[0] - p[1] >= 1, "M - d >= 1 (nonempty first row)");
      break;
    case Family::RootD:
      arity(1);
      need(p[0] >= 2, "n >= 2");
      break;
    case Family::RootI2:
      arity(1);
      need(p[0] >= 2, "l >= 2");
      break;
    case Family::RootG2:
    case Family::RootH3:
    case Family::MinusculeE6:
    case Family::MinusculeE7:
      arity(0);
      break;
  }
}

bool is_shape(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Rectangle:
    case Family::Staircase:
    case Family::Trapezoid:
    case Family::DoubleStaircase:
    case Family::ArithProg:
      return true;
    default:
      return false;
  }
}

bool is_minuscule(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Rectangle:
    case Family::MinusculeD:
    case Family::MinusculeE6:
    case Family::MinusculeE7:
      return true;
    case Family::DoubleStaircase:
      return spec.params.at(1) == 0;
    default:
      return false;
  }
}

bool is_root_poset(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::RootA:
    case Family::RootB:
    case Family::RootC:
    case Family::RootD:
    case Family::RootG2:
    case Family::RootI2:
    case Family::RootH3:
      return true;
    default:
      return false;
  }
}

bool is_coincidental_root(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::RootA:
    case Family::RootB:
    case Family::RootC:
    case Family::RootI2:
    case Family::RootH3:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Root systems

namespace {

// Gram matrix of the simple roots, scaled to integers.
std::vector<std::vector<int>> gram_matrix(char type, int n) {
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };
  switch (type) {
    case 'A':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 1;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      if (n >= 2) link(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      if (n >= 3) link(n - 3, n - 1, -1);
      break;
    case 'E':  // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
      if (n < 6 || n > 8) throw ParameterError("E_n needs 6 <= n <= 8");
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'G':
      if (n != 2) throw ParameterError("G has rank 2");
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
    default:
      throw ParameterError(std::string("unsupported root system type ") + type);
  }
  return g;
}

}  // namespace

std::vector<std::vector<int>> positive_roots(char type, int rank) {
  if (rank < 1) throw ParameterError("root system rank must be >= 1");
  const auto g = gram_matrix(type, rank);
  const int n = rank;
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    known.insert(e);
    roots.push_back(e);
  }
  // Roots are generated height by height via alpha_i-strings:
  // beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0.
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const auto beta = roots[k];
    for (int i = 0; i < n; ++i) {
      const bool is_simple_i =
          beta[i] == 1 && std::accumulate(beta.begin(), beta.end(), 0) == 1;
      if (is_simple_i) continue;
      int p = 0;
      auto down = beta;
      while (down[i] > 0) {
        --down[i];
        if (!known.count(down)) break;
        ++p;
      }
      int pairing2 = 0;  // 2 * (beta, alpha_i)
      for (int j = 0; j < n; ++j) pairing2 += 2 * beta[j] * g[j][i];
      const int coroot = pairing2 / g[i][i];
      if (p - coroot > 0) {
        auto up = beta;
        ++up[i];
        if (known.insert(up).second) roots.push_back(up);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  return roots;
}

Poset root_poset(const std::vector<std::vector<int>>& roots, std::string name) {
  const int n = static_cast<int>(roots.size());
  std::vector<Cover> covers;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int diff_total = 0;
      bool nonneg = true;
      for (std::size_t i = 0; i < roots[x].size(); ++i) {
        const int d = roots[y][i] - roots[x][i];
        if (d < 0) nonneg = false;
        diff_total += d;
      }
      if (nonneg && diff_total == 1) covers.emplace_back(x, y);
    }
  }
  return Poset(n, std::move(covers), std::move(name));
}

// ---------------------------------------------------------------------------
// Families

namespace {

CatalogPoset make_shape(const FamilySpec& spec, const std::vector<int>& rows, bool shifted) {
  CatalogPoset out;
  out.spec = spec;
  std::map<std::pair<int, int>, int> id;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    const int start = shifted ? i + 1 : 1;
    for (int j = start; j < start + rows[i]; ++j) {
      id[{i + 1, j}] = static_cast<int>(out.boxes.size());
      out.boxes.emplace_back(i + 1, j);
    }
  }
  std::vector<Cover> covers;
  for (const auto& [box, x] : id) {
    const auto [i, j] = box;
    if (auto it = id.find({i, j + 1}); it != id.end()) covers.emplace_back(x, it->second);
    if (auto it = id.find({i + 1, j}); it != id.end()) covers.emplace_back(x, it->second);
  }
  out.poset = Poset(static_cast<int>(out.boxes.size()), std::move(covers), spec.to_string());
  return out;
}

// Relabels a box map (i,j) -> (i',j') into a permutation of ids.
PosetMap box_map(const CatalogPoset& shape, MapKind kind,
                 const std::function<std::pair<int, int>(int, int)>& f) {
  std::map<std::pair<int, int>, int> id;
  for (int x = 0; x < static_cast<int>(shape.boxes.size()); ++x) id[shape.boxes[x]] = x;
  PosetMap map{std::vector<Element>(shape.boxes.size()), kind};
  for (int x = 0; x < static_cast<int>(shape.boxes.size()); ++x) {
    const auto [i, j] = shape.boxes[x];
    map.perm[x] = id.at(f(i, j));
  }
  return map;
}

// Hasse data transcribed from drawings: elements are named by drawing labels,
// listed bottom-to-top; ids follow the listing order.
Poset from_labels(const std::vector<int>& labels,
                  const std::vector<std::pair<int, int>>& label_covers, std::string name) {
  std::map<int, int> id;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) id[labels[i]] = i;
  std::vector<Cover> covers;
  for (const auto& [lo, hi] : label_covers) covers.emplace_back(id.at(lo), id.at(hi));
  return Poset(static_cast<int>(labels.size()), std::move(covers), std::move(name));
}

// Phi+(H3), and the upper half of Lambda_E7, share this diagram on labels 1..15.
const std::vector<std::pair<int, int>> kH3Covers = {
    {1, 4},  {2, 4},  {2, 5},   {3, 5},   {4, 6},   {5, 6},   {5, 7},   {7, 8},
    {6, 8},  {7, 9},  {9, 11},  {8, 11},  {8, 10},  {10, 12}, {11, 12}, {12, 13},
    {13, 14}, {14, 15}};

Poset make_h3(const std::string& name) {
  std::vector<int> labels(15);
  std::iota(labels.begin(), labels.end(), 1);
  return from_labels(labels, kH3Covers, name);
}

Poset make_e6(const std::string& name) {
  const std::vector<int> labels = {-4, -3, -2, 1, -1, 0, 2, 6, 3, 7, 4, 11, 8, 12, 13, 14};
  const std::vector<std::pair<int, int>> covers = {
      {-4, -3}, {-3, -2}, {-2, -1}, {-1, 2}, {2, 6},  {0, 6},  {1, 0},
      {-2, 1},  {1, 2},   {2, 3},   {3, 4},  {4, 8},  {8, 12}, {12, 13},
      {13, 14}, {3, 7},   {6, 7},   {7, 8},  {7, 11}, {11, 12}};
  return from_labels(labels, covers, name);
}

Poset make_e7(const std::string& name) {
  const std::vector<int> labels = {-15, -14, -13, -12, -10, -11, -8, -9, -6,
                                   -7,  -4,  -5,  1,   2,   3,   4,  5,  6,
                                   7,   8,   9,   10,  11,  12,  13, 14, 15};
  std::vector<std::pair<int, int>> covers = kH3Covers;
  // The lower half is the mirror image: label -k sits below wherever k sits
  // above, and the middle row 1, 2, 3 is shared.
  for (const auto& [lo, hi] : kH3Covers) {
    const int a = lo <= 3 ? lo : -lo;
    const int b = -hi;
    covers.emplace_back(b, a);
  }
  return from_labels(labels, covers, name);
}

// Involutive anti-automorphisms of the exceptional minuscule posets, as
// permutations of the ids produced by make_e6 / make_e7.
const std::vector<Element> kIotaE6 = {15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0};
const std::vector<Element> kIotaE7 = {26, 25, 24, 23, 21, 22, 19, 20, 17, 18, 15, 16, 12, 13,
                                      14, 10, 11, 8,  9,  6,  7,  4,  5,  3,  2,  1,  0};

CatalogPoset make_root(const FamilySpec& spec, char type, int rank) {
  CatalogPoset out;
  out.spec = spec;
  out.roots = positive_roots(type, rank);
  out.poset = root_poset(out.roots, spec.to_string());
  return out;
}

PosetMap identity_map(int n) {
  PosetMap id{std::vector<Element>(n), MapKind::Automorphism};
  std::iota(id.perm.begin(), id.perm.end(), 0);
  return id;
}

}  // namespace

CatalogPoset build(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  const std::string name = spec.to_string();
  switch (spec.family) {
    case Family::Rectangle: {
      const int a = p[0], b = p[1];
      auto out = make_shape(spec, std::vector<int>(a, b), false);
      out.iota = box_map(out, MapKind::AntiAutomorphism,
                         [&](int i, int j) { return std::pair{a + 1 - i, b + 1 - j}; });
      return out;
    }
    case Family::Staircase: {
      const int n = p[0];
      std::vector<int> rows;
      for (int i = n; i >= 1; --i) rows.push_back(i);
      auto out = make_shape(spec, rows, false);
      out.delta = box_map(out, MapKind::Automorphism,
                          [](int i, int j) { return std::pair{j, i}; });
      return out;
    }
    case Family::Trapezoid: {
      const int a = p[0], b = p[1];
      std::vector<int> rows;
      for (int i = 0; i < a; ++i) rows.push_back(a + b - 1 - 2 * i);
      return make_shape(spec, rows, true);
    }
    case Family::DoubleStaircase: {
      const int n = p[0], k = p[1];
      std::vector<int> rows;
      for (int i = 1; i <= n; ++i) rows.push_back(n + 1 - i + std::max(k + 1 - i, 0));
      auto out = make_shape(spec, rows, true);
      if (k == 0) {
        out.iota = box_map(out, MapKind::AntiAutomorphism,
                           [&](int i, int j) { return std::pair{n + 1 - j, n + 1 - i}; });
      }
      return out;
    }
    case Family::ArithProg: {
      const int M = p[0], d = p[1], l = p[2];
      std::vector<int> rows;
      for (int i = 1; i <= l; ++i) {
        if (M - i * d > 0) rows.push_back(M - i * d);
      }
      return make_shape(spec, rows, false);
    }
    case Family::RootA: {
      auto out = make_root(spec, 'A', p[0]);
      std::map<std::vector<int>, int> id;
      for (int x = 0; x < static_cast<int>(out.roots.size()); ++x) id[out.roots[x]] = x;
      PosetMap delta{std::vector<Element>(out.roots.size()), MapKind::Automorphism};
      for (int x = 0; x < static_cast<int>(out.roots.size()); ++x) {
        auto r = out.roots[x];
        std::reverse(r.begin(), r.end());
        delta.perm[x] = id.at(r);
      }
      out.delta = delta;
      return out;
    }
    case Family::RootB:
    case Family::RootC: {
      auto out = make_root(spec, spec.family == Family::RootB ? 'B' : 'C', p[0]);
      out.delta = identity_map(out.poset.size());
      return out;
    }
    case Family::RootD:
      return make_root(spec, 'D', p[0]);
    case Family::RootG2:
      return make_root(spec, 'G', 2);
    case Family::RootI2: {
      const int l = p[0];
      CatalogPoset out;
      out.spec = spec;
      std::vector<Cover> covers;
      if (l >= 3) {
        covers = {{0, 2}, {1, 2}};
        for (int x = 2; x + 1 < l; ++x) covers.emplace_back(x, x + 1);
      }
      out.poset = Poset(l, std::move(covers), name);
      out.delta = identity_map(l);
      if (l % 2 == 1) std::swap(out.delta->perm[0], out.delta->perm[1]);
      return out;
    }
    case Family::RootH3: {
      CatalogPoset out;
      out.spec = spec;
      out.poset = make_h3(name);
      out.delta = identity_map(15);
      return out;
    }
    case Family::MinusculeD: {
      const int n = p[0];
      CatalogPoset out;
      out.spec = spec;
      // ids 0..n-2 lower tail, n-1 and n the middle pair, n+1..2n-1 upper tail
      std::vector<Cover> covers;
      for (int x = 0; x + 1 <= n - 2; ++x) covers.emplace_back(x, x + 1);
      for (int mid : {n - 1, n}) {
        if (n >= 2) covers.emplace_back(n - 2, mid);
        if (n >= 2) covers.emplace_back(mid, n + 1);
      }
      for (int x = n + 1; x + 1 <= 2 * n - 1; ++x) covers.emplace_back(x, x + 1);
      out.poset = Poset(2 * n, std::move(covers), name);
      PosetMap iota{std::vector<Element>(2 * n), MapKind::AntiAutomorphism};
      for (int x = 0; x < 2 * n; ++x) iota.perm[x] = 2 * n - 1 - x;
      // The middle pair is swapped for even n and fixed for odd n.
      if (n % 2 == 1) std::swap(iota.perm[n - 1], iota.perm[n]);
      out.iota = iota;
      return out;
    }
    case Family::MinusculeE6: {
      CatalogPoset out;
      out.spec = spec;
      out.poset = make_e6(name);
      out.iota = PosetMap{kIotaE6, MapKind::AntiAutomorphism};
      return out;
    }
    case Family::MinusculeE7: {
      CatalogPoset out;
      out.spec = spec;
      out.poset = make_e7(name);
      out.iota = PosetMap{kIotaE7, MapKind::AntiAutomorphism};
      return out;
    }
    case Family::ChainOfVs: {
      const int n = p[0];
      CatalogPoset out;
      out.spec = spec;
      std::vector<Cover> covers;
      for (int i = 0; i < n; ++i) {
        const int base = 3 * i;
        covers.emplace_back(base, base + 1);
        covers.emplace_back(base, base + 2);
        if (i + 1 < n) {
          for (int v = 0; v < 3; ++v) covers.emplace_back(base + v, base + 3 + v);
        }
      }
      out.poset = Poset(3 * n, std::move(covers), name);
      PosetMap delta = identity_map(3 * n);
      for (int i = 0; i < n; ++i) std::swap(delta.perm[3 * i + 1], delta.perm[3 * i + 2]);
      out.delta = delta;
      return out;
    }
  }
  throw ParameterError("unknown family");
}

// ---------------------------------------------------------------------------
// Numerology

CoxeterData coxeter_data_from_rank_sizes(const std::vector<int>& rank_sizes) {
  for (std::size_t i = 1; i < rank_sizes.size(); ++i) {
    if (rank_sizes[i] > rank_sizes[i - 1]) {
      throw std::logic_error("rank sizes do not form a partition");
    }
  }
  CoxeterData w;
  const int rows = rank_sizes.empty() ? 0 : rank_sizes.front();
  for (int k = 1; k <= rows; ++k) {
    int conj = 0;
    for (int s : rank_sizes) conj += s >= k ? 1 : 0;
    w.degrees.push_back(conj + 1);
  }
  std::sort(w.degrees.begin(), w.degrees.end());
  w.h = w.degrees.empty() ? 0 : w.degrees.back();
  return w;
}

CoxeterData coxeter_data(const FamilySpec& spec) {
  if (!is_root_poset(spec)) throw ParameterError(spec.to_string() + " is not a root poset");
  const auto built = build(spec);
  const auto grading = grading_of(built.poset);
  if (!grading) throw std::logic_error(spec.to_string() + ": root poset is not graded");
  return coxeter_data_from_rank_sizes(grading->rank_sizes());
}

BigRational multi_catalan_at_one(const CoxeterData& w, int m) {
  BigRational value = 1;
  for (int j = 0; j < m; ++j) {
    for (int d : w.degrees) value *= BigRational(w.h + d + 2 * j, d + 2 * j);
  }
  return value;
}

namespace {

using RatPoly = std::vector<BigRational>;  // coefficients in m, index = degree

BigRational eval(const RatPoly& f, const BigRational& x) {
  BigRational acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Newton interpolation through (k, values[k]), k = 0..N.
RatPoly interpolate(const std::vector<BigRational>& values) {
  const std::size_t N = values.size();
  std::vector<BigRational> coef = values;
  for (std::size_t level = 1; level < N; ++level) {
    for (std::size_t k = N - 1; k >= level; --k) {
      coef[k] = (coef[k] - coef[k - 1]) / BigRational(static_cast<int>(level));
    }
  }
  // Expand sum_k coef[k] * m (m-1) ... (m-k+1).
  RatPoly result(N, BigRational(0));
  RatPoly basis{BigRational(1)};
  for (std::size_t k = 0; k < N; ++k) {
    for (std::size_t i = 0; i < basis.size(); ++i) result[i] += coef[k] * basis[i];
    RatPoly next(basis.size() + 1, BigRational(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i];
      next[i] -= basis[i] * static_cast<int>(k);
    }
    basis = std::move(next);
  }
  while (result.size() > 1 && result.back() == 0) result.pop_back();
  return result;
}

// Divides f by (m - root), assuming f(root) = 0.
RatPoly deflate(const RatPoly& f, const BigRational& root) {
  RatPoly q(f.size() - 1, BigRational(0));
  BigRational carry = 0;
  for (std::size_t i = f.size() - 1; i >= 1; --i) {
    carry = f[i] + carry * root;
    q[i - 1] = carry;
  }
  return q;
}

std::optional<int> kappa_of(const std::vector<BigRational>& roots) {
  int worst = 1;
  for (const auto& r : roots) {
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 2) {
      worst = 2;
    } else if (den != 1) {
      return std::nullopt;
    }
  }
  return worst;
}

OmegaRoots finish(std::vector<BigRational> roots) {
  std::sort(roots.begin(), roots.end(), std::greater<>());
  OmegaRoots out;
  out.kappa = kappa_of(roots);
  out.roots = std::move(roots);
  return out;
}

std::vector<BigRational> rectangle_roots(int a, int b) {
  std::vector<BigRational> roots;
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) roots.emplace_back(-(i + j - 1));
  }
  return roots;
}

std::vector<BigRational> arith_prog_roots(int M, int d, int l) {
  std::vector<BigRational> roots;
  for (int i = 1; i <= l; ++i) {
    for (int j = 1; j <= M - i * d; ++j) {
      const int lc = l + j - i;
      if (lc <= M - i * d) {
        roots.emplace_back(-lc);
      } else {
        roots.emplace_back(BigRational(-lc, d + 1));
      }
    }
  }
  return roots;
}

std::vector<BigRational> interpolated_root_roots(const FamilySpec& spec) {
  const auto w = coxeter_data(spec);
  const int size = build(spec).poset.size();
  std::vector<BigRational> values;
  for (int m = 0; m <= size; ++m) values.push_back(multi_catalan_at_one(w, m));
  RatPoly f = interpolate(values);
  std::vector<BigRational> roots;
  const int bound = 4 * (size + w.h) + 4;
  for (int k = 1; k <= bound && f.size() > 1; ++k) {
    const BigRational candidate(-k, 2);
    while (f.size() > 1 && eval(f, candidate) == 0) {
      f = deflate(f, candidate);
      roots.push_back(candidate);
    }
  }
  if (f.size() > 1) {
    throw NoProductFormula(spec.to_string() + ": no half-integer root decomposition");
  }
  return roots;
}

}  // namespace

OmegaRoots omega_roots(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::Rectangle:
    case Family::Trapezoid:
      return finish(rectangle_roots(p[0], p[1]));
    case Family::Staircase:
      return finish(arith_prog_roots(p[0] + 1, 1, p[0]));
    case Family::ArithProg:
      return finish(arith_prog_roots(p[0], p[1], p[2]));
    case Family::DoubleStaircase: {
      const int n = p[0], k = p[1];
      std::vector<BigRational> roots;
      for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) roots.emplace_back(-(i + j - 1));
      }
      for (int i = 1; i <= k; ++i) {
        for (int j = i; j <= k; ++j) roots.emplace_back(-(i + j));
      }
      return finish(std::move(roots));
    }
    case Family::ChainOfVs: {
      const int n = p[0];
      std::vector<BigRational> roots;
      for (int i = 1; i <= n; ++i) roots.emplace_back(-(i + 1));
      for (int i = 1; i <= 2 * n; ++i) roots.emplace_back(BigRational(-(i + 1), 2));
      return finish(std::move(roots));
    }
    case Family::MinusculeD:
    case Family::MinusculeE6:
    case Family::MinusculeE7: {
      const auto built = build(spec);
      const auto grading = grading_of(built.poset);
      std::vector<BigRational> roots;
      for (int r : grading->rank) roots.emplace_back(-(r + 1));
      return finish(std::move(roots));
    }
    case Family::RootD:
      throw NoProductFormula(spec.to_string() +
                             ": type D is not coincidental; no order polynomial product formula");
    case Family::RootA:
    case Family::RootB:
    case Family::RootC:
    case Family::RootG2:
    case Family::RootI2:
    case Family::RootH3:
      return finish(interpolated_root_roots(spec));
  }
  throw ParameterError("unknown family");
}

}  // namespace posetdyn
