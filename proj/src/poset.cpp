#include "posetdyn/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace posetdyn {

namespace {

// Kahn's algorithm on the relation graph; empty result means a cycle.
std::vector<Element> topological_order(int n,
                                       const std::vector<std::vector<Element>>& up) {
  std::vector<int> indeg(n, 0);
  for (const auto& ys : up) {
    for (Element y : ys) ++indeg[y];
  }
  std::vector<Element> order;
  order.reserve(n);
  std::vector<Element> ready;
  for (Element x = n - 1; x >= 0; --x) {
    if (indeg[x] == 0) ready.push_back(x);
  }
  while (!ready.empty()) {
    const Element x = ready.back();
    ready.pop_back();
    order.push_back(x);
    for (Element y : up[x]) {
      if (--indeg[y] == 0) ready.push_back(y);
    }
  }
  if (static_cast<int>(order.size()) != n) return {};
  return order;
}

void check_ids(int n, const std::vector<Cover>& rel) {
  if (n < 0) throw std::invalid_argument("poset: negative element count");
  for (const auto& [x, y] : rel) {
    if (x < 0 || x >= n || y < 0 || y >= n) {
      throw std::invalid_argument("poset: relation (" + std::to_string(x) + "," +
                                  std::to_string(y) + ") names an id outside 0.." +
                                  std::to_string(n - 1));
    }
    if (x == y) {
      throw std::invalid_argument("poset: reflexive pair (" + std::to_string(x) +
                                  "," + std::to_string(x) + ") in cover list");
    }
  }
}

// Reflexive-transitive closure from the relation graph, as an n*n byte matrix.
std::vector<std::uint8_t> closure_of(int n, const std::vector<std::vector<Element>>& up,
                                     const std::vector<Element>& topo) {
  const auto N = static_cast<std::size_t>(n);
  std::vector<std::uint8_t> leq(N * N, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const auto x = static_cast<std::size_t>(*it);
    leq[x * N + x] = 1;
    for (Element y : up[x]) {
      const auto yy = static_cast<std::size_t>(y);
      for (std::size_t z = 0; z < N; ++z) leq[x * N + z] |= leq[yy * N + z];
    }
  }
  return leq;
}

}  // namespace

Poset::Poset(int n, std::vector<Cover> covers, std::string name)
    : n_(n), covers_(std::move(covers)), name_(std::move(name)) {
  check_ids(n, covers_);
  std::sort(covers_.begin(), covers_.end());
  if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end()) {
    throw std::invalid_argument("poset: duplicate cover");
  }
  up_.assign(n, {});
  down_.assign(n, {});
  for (const auto& [x, y] : covers_) {
    up_[x].push_back(y);
    down_[y].push_back(x);
  }
  const auto topo = topological_order(n, up_);
  if (topo.empty() && n > 0) throw std::invalid_argument("poset: cover relation has a cycle");
  closure_ = closure_of(n, up_, topo);
  const auto N = static_cast<std::size_t>(n);
  cover_.assign(N * N, 0);
  for (const auto& [x, y] : covers_) cover_[index(x, y)] = 1;
  // A cover x < y is redundant iff some other upper cover z of x has z < y.
  for (const auto& [x, y] : covers_) {
    for (Element z : up_[x]) {
      if (z != y && leq(z, y)) {
        throw std::invalid_argument("poset: cover (" + std::to_string(x) + "," +
                                    std::to_string(y) + ") is implied by others");
      }
    }
  }
}

Poset Poset::from_relations(int n, const std::vector<Cover>& relations, std::string name) {
  std::vector<Cover> rel;
  rel.reserve(relations.size());
  for (const auto& r : relations) {
    if (r.first != r.second) rel.push_back(r);
  }
  check_ids(n, rel);
  std::sort(rel.begin(), rel.end());
  rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
  std::vector<std::vector<Element>> up(n);
  for (const auto& [x, y] : rel) up[x].push_back(y);
  const auto topo = topological_order(n, up);
  if (topo.empty() && n > 0) throw std::invalid_argument("poset: relations contain a cycle");
  const auto leq = closure_of(n, up, topo);
  const auto N = static_cast<std::size_t>(n);
  auto lt = [&](Element x, Element y) {
    return x != y && leq[static_cast<std::size_t>(x) * N + static_cast<std::size_t>(y)];
  };
  std::vector<Cover> covers;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!lt(x, y)) continue;
      bool direct = true;
      for (Element z = 0; z < n && direct; ++z) {
        if (lt(x, z) && lt(z, y)) direct = false;
      }
      if (direct) covers.emplace_back(x, y);
    }
  }
  return Poset(n, std::move(covers), std::move(name));
}

std::vector<Element> Poset::minimal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < n_; ++x) {
    if (down_[x].empty()) out.push_back(x);
  }
  return out;
}

std::vector<Element> Poset::maximal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < n_; ++x) {
    if (up_[x].empty()) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<Element>> Grading::levels() const {
  std::vector<std::vector<Element>> out(static_cast<std::size_t>(rmax) + 1);
  for (Element x = 0; x < static_cast<Element>(rank.size()); ++x) {
    out[static_cast<std::size_t>(rank[x])].push_back(x);
  }
  return out;
}

std::vector<int> Grading::rank_sizes() const {
  std::vector<int> out(static_cast<std::size_t>(rmax) + 1, 0);
  for (int r : rank) ++out[static_cast<std::size_t>(r)];
  return out;
}

int PPartition::size() const { return std::accumulate(vals.begin(), vals.end(), 0); }

bool PosetMap::is_identity() const {
  for (Element x = 0; x < static_cast<Element>(perm.size()); ++x) {
    if (perm[x] != x) return false;
  }
  return true;
}

bool PosetMap::is_involution() const {
  for (Element x = 0; x < static_cast<Element>(perm.size()); ++x) {
    if (perm[perm[x]] != x) return false;
  }
  return true;
}

PosetMap PosetMap::inverse() const {
  PosetMap inv{std::vector<Element>(perm.size()), kind};
  for (Element x = 0; x < static_cast<Element>(perm.size()); ++x) inv.perm[perm[x]] = x;
  return inv;
}

Poset dual(const Poset& poset) {
  std::vector<Cover> rev;
  rev.reserve(poset.covers().size());
  for (const auto& [x, y] : poset.covers()) rev.emplace_back(y, x);
  std::string name = poset.name().empty() ? std::string{} : poset.name() + "*";
  return Poset(poset.size(), std::move(rev), std::move(name));
}

std::optional<Grading> grading_of(const Poset& poset) {
  const int n = poset.size();
  Grading g;
  g.rank.assign(n, -1);
  // Longest chain from a minimal element, via memoised DFS over lower covers.
  std::vector<Element> stack;
  for (Element start = 0; start < n; ++start) {
    if (g.rank[start] >= 0) continue;
    stack.push_back(start);
    while (!stack.empty()) {
      const Element x = stack.back();
      bool ready = true;
      int h = 0;
      for (Element y : poset.lower_covers(x)) {
        if (g.rank[y] < 0) {
          stack.push_back(y);
          ready = false;
        } else {
          h = std::max(h, g.rank[y] + 1);
        }
      }
      if (ready) {
        g.rank[x] = h;
        stack.pop_back();
      }
    }
  }
  for (const auto& [x, y] : poset.covers()) {
    if (g.rank[y] != g.rank[x] + 1) return std::nullopt;
  }
  int top = -1;
  for (Element x : poset.maximal_elements()) {
    if (top < 0) top = g.rank[x];
    if (g.rank[x] != top) return std::nullopt;
  }
  g.rmax = std::max(top, 0);
  return g;
}

bool is_linear_extension(const Poset& poset, std::span<const Element> seq) {
  const int n = poset.size();
  if (static_cast<int>(seq.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (seq[i] < 0 || seq[i] >= n || pos[seq[i]] >= 0) return false;
    pos[seq[i]] = i;
  }
  for (const auto& [x, y] : poset.covers()) {
    if (pos[x] > pos[y]) return false;
  }
  return true;
}

bool is_p_partition(const Poset& poset, const PPartition& pi) {
  if (static_cast<int>(pi.vals.size()) != poset.size()) return false;
  for (int v : pi.vals) {
    if (v < 0 || v > pi.m) return false;
  }
  for (const auto& [x, y] : poset.covers()) {
    if (pi.vals[x] > pi.vals[y]) return false;
  }
  return true;
}

PPartition ideal_to_p_partition(const Poset& poset, const std::vector<Element>& ideal) {
  PPartition pi{1, std::vector<int>(poset.size(), 1)};
  for (Element x : ideal) pi.vals[x] = 0;
  return pi;
}

std::vector<Element> p_partition_to_ideal(const PPartition& pi) {
  std::vector<Element> ideal;
  for (Element x = 0; x < static_cast<Element>(pi.vals.size()); ++x) {
    if (pi.vals[x] == 0) ideal.push_back(x);
  }
  return ideal;
}

namespace detail {

PPartitionBounds p_partition_bounds(const Poset& poset) {
  const int n = poset.size();
  PPartitionBounds b;
  b.below.assign(n, {});
  b.above.assign(n, {});
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < i; ++j) {
      if (poset.less(j, i)) b.below[i].push_back(j);
      if (poset.less(i, j)) b.above[i].push_back(j);
    }
  }
  return b;
}

}  // namespace detail

std::vector<LinearExtension> linear_extensions(const Poset& poset) {
  std::vector<LinearExtension> out;
  for_each_linear_extension(poset, [&](std::span<const Element> seq) {
    out.push_back(LinearExtension{{seq.begin(), seq.end()}});
    return true;
  });
  return out;
}

std::vector<PPartition> p_partitions(const Poset& poset, int m) {
  std::vector<PPartition> out;
  for_each_p_partition(poset, m, [&](const PPartition& pi) {
    out.push_back(pi);
    return true;
  });
  return out;
}

BigInt count_linear_extensions(const Poset& poset) {
  const int n = poset.size();
  if (n > 64) throw std::invalid_argument("count_linear_extensions: more than 64 elements");
  if (n == 0) return BigInt(1);
  std::vector<std::uint64_t> lower(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y : poset.lower_covers(x)) lower[x] |= std::uint64_t{1} << y;
  }
  // Number of ways to remove the remaining (up-closed) set from the bottom.
  std::map<std::uint64_t, BigInt> memo;
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  auto rec = [&](auto& self, std::uint64_t taken) -> BigInt {
    if (taken == full) return BigInt(1);
    if (auto it = memo.find(taken); it != memo.end()) return it->second;
    BigInt total = 0;
    for (Element x = 0; x < n; ++x) {
      const std::uint64_t bit = std::uint64_t{1} << x;
      if ((taken & bit) == 0 && (lower[x] & ~taken) == 0) total += self(self, taken | bit);
    }
    memo.emplace(taken, total);
    return total;
  };
  return rec(rec, 0);
}

std::optional<std::uint64_t> count_p_partitions(const Poset& poset, int m,
                                                std::uint64_t limit) {
  std::uint64_t count = 0;
  bool exceeded = false;
  for_each_p_partition(poset, m, [&](const PPartition&) {
    if (++count > limit) {
      exceeded = true;
      return false;
    }
    return true;
  });
  if (exceeded) return std::nullopt;
  return count;
}

bool is_automorphism(const Poset& poset, std::span<const Element> perm) {
  const int n = poset.size();
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<std::uint8_t> seen(n, 0);
  for (Element p : perm) {
    if (p < 0 || p >= n || seen[p]) return false;
    seen[p] = 1;
  }
  for (const auto& [x, y] : poset.covers()) {
    if (!poset.covers(perm[x], perm[y])) return false;
  }
  return true;
}

bool is_anti_automorphism(const Poset& poset, std::span<const Element> perm) {
  const int n = poset.size();
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<std::uint8_t> seen(n, 0);
  for (Element p : perm) {
    if (p < 0 || p >= n || seen[p]) return false;
    seen[p] = 1;
  }
  for (const auto& [x, y] : poset.covers()) {
    if (!poset.covers(perm[y], perm[x])) return false;
  }
  return true;
}

namespace {

// Backtracking search for bijections f: a -> b with cover_a(x, y) iff
// cover_b(f x, f y) (or f y, f x when `reverse`). Assigns ids in order.
class MapSearch {
 public:
  MapSearch(const Poset& a, const Poset& b, bool reverse, bool involutive)
      : a_(a), b_(b), reverse_(reverse), involutive_(involutive),
        f_(a.size(), -1), used_(b.size(), 0) {}

  template <class Visitor>
  void run(Visitor&& visit) {
    if (a_.size() != b_.size() || a_.covers().size() != b_.covers().size()) return;
    recurse(0, visit);
  }

 private:
  bool signature_matches(Element x, Element t) const {
    const auto ux = a_.upper_covers(x).size();
    const auto dx = a_.lower_covers(x).size();
    const auto ut = b_.upper_covers(t).size();
    const auto dt = b_.lower_covers(t).size();
    return reverse_ ? (ux == dt && dx == ut) : (ux == ut && dx == dt);
  }

  bool consistent(Element x, Element t) const {
    for (Element y = 0; y < x; ++y) {
      const Element s = f_[y];
      const bool a_xy = a_.covers(x, y);
      const bool a_yx = a_.covers(y, x);
      const bool b_ts = reverse_ ? b_.covers(s, t) : b_.covers(t, s);
      const bool b_st = reverse_ ? b_.covers(t, s) : b_.covers(s, t);
      if (a_xy != b_ts || a_yx != b_st) return false;
    }
    if (involutive_) {
      if (t < x && f_[t] != x) return false;
      for (Element y = 0; y < x; ++y) {
        if (f_[y] == x && t != y) return false;
      }
    }
    return true;
  }

  template <class Visitor>
  bool recurse(Element x, Visitor& visit) {
    const int n = a_.size();
    if (x == n) return visit(static_cast<const std::vector<Element>&>(f_));
    for (Element t = 0; t < n; ++t) {
      if (used_[t] || !signature_matches(x, t) || !consistent(x, t)) continue;
      f_[x] = t;
      used_[t] = 1;
      const bool go_on = recurse(x + 1, visit);
      used_[t] = 0;
      f_[x] = -1;
      if (!go_on) return false;
    }
    return true;
  }

  const Poset& a_;
  const Poset& b_;
  bool reverse_;
  bool involutive_;
  std::vector<Element> f_;
  std::vector<std::uint8_t> used_;
};

}  // namespace

std::vector<PosetMap> find_maps(const Poset& poset, MapKind kind) {
  const bool anti = kind == MapKind::AntiAutomorphism;
  std::vector<PosetMap> out;
  MapSearch search(poset, poset, anti, anti);
  search.run([&](const std::vector<Element>& f) {
    out.push_back(PosetMap{f, kind});
    return true;
  });
  return out;
}

std::optional<std::vector<Element>> find_isomorphism(const Poset& a, const Poset& b) {
  std::optional<std::vector<Element>> found;
  MapSearch search(a, b, false, false);
  search.run([&](const std::vector<Element>& f) {
    found = f;
    return false;
  });
  return found;
}

std::vector<std::pair<Element, Element>> comparability_graph(const Poset& poset) {
  std::vector<std::pair<Element, Element>> edges;
  for (Element x = 0; x < poset.size(); ++x) {
    for (Element y = x + 1; y < poset.size(); ++y) {
      if (poset.comparable(x, y)) edges.emplace_back(x, y);
    }
  }
  return edges;
}

Poset random_poset(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Cover> relations;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) relations.emplace_back(i, j);
    }
  }
  return Poset::from_relations(n, relations, "random");
}

}  // namespace posetdyn
