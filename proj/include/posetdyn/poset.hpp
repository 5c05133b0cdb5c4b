#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posetdyn/bigint.hpp"

namespace posetdyn {

using Element = int;
/// A cover relation (lower, upper).
using Cover = std::pair<Element, Element>;

/// Finite poset on the dense ids 0..n-1, stored as its Hasse diagram plus the
/// full comparability closure for O(1) order queries.
///
/// The cover list must be acyclic and transitively reduced; the constructor
/// rejects anything else. Use from_relations() to start from an arbitrary
/// generating relation instead.
class Poset {
 public:
  Poset() = default;
  Poset(int n, std::vector<Cover> covers, std::string name = {});

  /// Builds the poset generated by `relations` (x <= y for each pair), taking
  /// the transitive reduction. Throws on cycles.
  static Poset from_relations(int n, const std::vector<Cover>& relations,
                              std::string name = {});

  int size() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Sorted cover list.
  const std::vector<Cover>& covers() const noexcept { return covers_; }
  std::span<const Element> upper_covers(Element x) const { return up_[x]; }
  std::span<const Element> lower_covers(Element x) const { return down_[x]; }

  bool covers(Element lower, Element upper) const {
    return cover_[index(lower, upper)] != 0;
  }
  bool leq(Element x, Element y) const { return closure_[index(x, y)] != 0; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  std::vector<Element> minimal_elements() const;
  std::vector<Element> maximal_elements() const;

  /// Same element count and cover set; the name is ignored.
  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.covers_ == b.covers_;
  }

 private:
  std::size_t index(Element x, Element y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(y);
  }

  int n_ = 0;
  std::vector<Cover> covers_;
  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
  std::vector<std::uint8_t> cover_;
  std::vector<std::uint8_t> closure_;
  std::string name_;
};

/// Rank function of a graded poset: every minimal element has rank 0 and
/// every cover raises the rank by one.
struct Grading {
  std::vector<int> rank;
  int rmax = 0;

  /// Elements of each rank P_0, ..., P_rmax, each sorted by id.
  std::vector<std::vector<Element>> levels() const;
  std::vector<int> rank_sizes() const;
};

/// A linear extension listed as (p_1, ..., p_n).
struct LinearExtension {
  std::vector<Element> seq;

  std::size_t size() const noexcept { return seq.size(); }
  Element operator[](std::size_t i) const { return seq[i]; }
  friend auto operator<=>(const LinearExtension&, const LinearExtension&) = default;
};

/// A weakly order-preserving map P -> {0, ..., m}; `vals` is indexed by id.
struct PPartition {
  int m = 0;
  std::vector<int> vals;

  int size() const;  ///< |pi|, the sum of all values
  friend auto operator<=>(const PPartition&, const PPartition&) = default;
};

enum class MapKind { Automorphism, AntiAutomorphism };

struct PosetMap {
  std::vector<Element> perm;
  MapKind kind = MapKind::Automorphism;

  Element operator()(Element x) const { return perm[x]; }
  bool is_identity() const;
  bool is_involution() const;
  PosetMap inverse() const;
  friend bool operator==(const PosetMap&, const PosetMap&) = default;
};

/// The dual poset P*: same ids, every cover reversed.
Poset dual(const Poset& poset);

std::optional<Grading> grading_of(const Poset& poset);

bool is_linear_extension(const Poset& poset, std::span<const Element> seq);
bool is_p_partition(const Poset& poset, const PPartition& pi);

/// Order ideal <-> height-1 P-partition: the ideal is the zero set.
PPartition ideal_to_p_partition(const Poset& poset, const std::vector<Element>& ideal);
std::vector<Element> p_partition_to_ideal(const PPartition& pi);

/// Visits every linear extension once, in lexicographic order of the id
/// sequences. The visitor returns false to stop early.
template <class Visitor>
void for_each_linear_extension(const Poset& poset, Visitor&& visit);

/// Visits every element of PP^m(P) once, in lexicographic order of the value
/// vectors. The visitor returns false to stop early.
template <class Visitor>
void for_each_p_partition(const Poset& poset, int m, Visitor&& visit);

std::vector<LinearExtension> linear_extensions(const Poset& poset);
std::vector<PPartition> p_partitions(const Poset& poset, int m);

/// e(P) by dynamic programming over order ideals (needs #P <= 64).
BigInt count_linear_extensions(const Poset& poset);

/// Counts PP^m(P) by enumeration, giving up once the count exceeds `limit`.
std::optional<std::uint64_t> count_p_partitions(const Poset& poset, int m,
                                                std::uint64_t limit);

/// All automorphisms, or all involutive anti-automorphisms, in lexicographic
/// order of their permutations.
std::vector<PosetMap> find_maps(const Poset& poset, MapKind kind);

bool is_automorphism(const Poset& poset, std::span<const Element> perm);
bool is_anti_automorphism(const Poset& poset, std::span<const Element> perm);

/// A bijection f with x < y in `a` iff f(x) < f(y) in `b`, if one exists.
std::optional<std::vector<Element>> find_isomorphism(const Poset& a, const Poset& b);

/// Unordered comparable pairs {x, y} with x < y as ids.
std::vector<std::pair<Element, Element>> comparability_graph(const Poset& poset);

/// Random poset on n elements: each pair i < j is a relation with
/// probability `density`, then the generated order is taken.
Poset random_poset(std::mt19937_64& rng, int n, double density);

// ---------------------------------------------------------------------------

namespace detail {

template <class Visitor>
bool linext_recurse(const Poset& poset, std::vector<int>& pending,
                    std::vector<Element>& seq, std::vector<std::uint8_t>& used,
                    Visitor& visit) {
  const int n = poset.size();
  if (static_cast<int>(seq.size()) == n) {
    return visit(std::span<const Element>(seq));
  }
  for (Element x = 0; x < n; ++x) {
    if (used[x] || pending[x] != 0) continue;
    used[x] = 1;
    seq.push_back(x);
    for (Element y : poset.upper_covers(x)) --pending[y];
    const bool go_on = linext_recurse(poset, pending, seq, used, visit);
    for (Element y : poset.upper_covers(x)) ++pending[y];
    seq.pop_back();
    used[x] = 0;
    if (!go_on) return false;
  }
  return true;
}

struct PPartitionBounds {
  // For each id i, the smaller ids strictly below / strictly above it.
  std::vector<std::vector<Element>> below;
  std::vector<std::vector<Element>> above;
};

PPartitionBounds p_partition_bounds(const Poset& poset);

template <class Visitor>
bool pp_recurse(const PPartitionBounds& bounds, int m, int i, PPartition& pi,
                Visitor& visit) {
  const int n = static_cast<int>(pi.vals.size());
  if (i == n) return visit(static_cast<const PPartition&>(pi));
  int lo = 0;
  int hi = m;
  for (Element x : bounds.below[i]) lo = std::max(lo, pi.vals[x]);
  for (Element y : bounds.above[i]) hi = std::min(hi, pi.vals[y]);
  for (int v = lo; v <= hi; ++v) {
    pi.vals[i] = v;
    if (!pp_recurse(bounds, m, i + 1, pi, visit)) return false;
  }
  pi.vals[i] = 0;
  return true;
}

}  // namespace detail

template <class Visitor>
void for_each_linear_extension(const Poset& poset, Visitor&& visit) {
  const int n = poset.size();
  std::vector<int> pending(n);
  for (Element x = 0; x < n; ++x) {
    pending[x] = static_cast<int>(poset.lower_covers(x).size());
  }
  std::vector<Element> seq;
  seq.reserve(n);
  std::vector<std::uint8_t> used(n, 0);
  detail::linext_recurse(poset, pending, seq, used, visit);
}

template <class Visitor>
void for_each_p_partition(const Poset& poset, int m, Visitor&& visit) {
  if (m < 0) return;
  const auto bounds = detail::p_partition_bounds(poset);
  PPartition pi{m, std::vector<int>(poset.size(), 0)};
  detail::pp_recurse(bounds, m, 0, pi, visit);
}

}  // namespace posetdyn
