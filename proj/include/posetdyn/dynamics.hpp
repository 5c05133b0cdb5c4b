#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "posetdyn/poset.hpp"

namespace posetdyn {

class GradingError : public std::domain_error {
  using std::domain_error::domain_error;
};

class WrongFamily : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Bender-Knuth toggles, promotion and evacuation on linear extensions.
/// States are plain id sequences so they can feed StateSet directly.
class Promotion {
 public:
  explicit Promotion(Poset poset);

  const Poset& poset() const noexcept { return poset_; }

  /// tau_i for 1 <= i <= n-1: swap positions i and i+1 when incomparable.
  std::vector<int> toggle(std::vector<int> seq, int i) const;
  std::vector<int> promote(std::vector<int> seq) const;
  std::vector<int> promote_inverse(std::vector<int> seq) const;
  std::vector<int> evacuate(std::vector<int> seq) const;
  /// Evac*(L) = Evac(L*)*, evacuating the reversed listing in P*.
  std::vector<int> dual_evacuate(std::vector<int> seq) const;

 private:
  void toggle_in_place(std::vector<int>& seq, int i, const Poset& p) const;
  std::vector<int> evacuate_in(std::vector<int> seq, const Poset& p) const;

  Poset poset_;
  Poset dual_;
};

/// Piecewise-linear toggles, rowmotion and rowvacuation on PP^m(P).
/// States are the value vectors indexed by element id.
class Rowmotion {
 public:
  Rowmotion(Poset poset, int m);

  const Poset& poset() const noexcept { return poset_; }
  int height() const noexcept { return m_; }
  bool graded() const noexcept { return grading_.has_value(); }
  const std::optional<Grading>& grading() const noexcept { return grading_; }

  std::vector<int> toggle(std::vector<int> vals, Element p) const;
  /// Toggles top-first along the lexicographically first linear extension.
  std::vector<int> rowmote(std::vector<int> vals) const;
  /// The same composition along an explicit linear extension (p_1..p_n).
  std::vector<int> rowmote_along(std::vector<int> vals, std::span<const Element> order) const;
  std::vector<int> rowmote_inverse(std::vector<int> vals) const;

  /// Toggle of every element of rank i (they commute). Needs a grading.
  std::vector<int> rank_toggle(std::vector<int> vals, int i) const;
  std::vector<int> rowvacuate(std::vector<int> vals) const;
  /// Rvac*(pi) = Rvac_{P*}(pi*)* with pi*(p) = m - pi(p).
  std::vector<int> dual_rowvacuate(std::vector<int> vals) const;

 private:
  void toggle_in_place(std::vector<int>& vals, Element p) const;
  const Grading& require_grading() const;

  Poset poset_;
  int m_;
  std::vector<Element> order_;
  std::optional<Grading> grading_;
  std::vector<std::vector<Element>> levels_;
};

std::vector<int> complement(std::vector<int> vals, int m);

/// Actions of poset maps on states. An automorphism g relabels a linear
/// extension entrywise and moves a P-partition by (g pi)(x) = pi(g^-1 x).
std::vector<int> act_on_extension(const PosetMap& g, std::span<const int> seq);
std::vector<int> act_on_partition(const PosetMap& g, std::span<const int> vals);
/// iota(L)*: relabel through iota, then reverse.
std::vector<int> iota_star_extension(const PosetMap& iota, std::span<const int> seq);
/// iota(pi)*(x) = m - pi(iota^-1 x).
std::vector<int> iota_star_partition(const PosetMap& iota, std::span<const int> vals, int m);

/// Outcome of comparing two maps on every state.
struct MatchReport {
  bool holds = true;
  std::uint64_t checked = 0;
  std::optional<std::vector<int>> witness;  ///< first state where they differ
  std::vector<int> lhs;                     ///< both images at the witness
  std::vector<int> rhs;
};

using StateMap = std::function<std::vector<int>(const std::vector<int>&)>;

MatchReport maps_agree(const std::vector<std::vector<int>>& states, const StateMap& lhs,
                       const StateMap& rhs);
/// step^k against `target` on every state.
MatchReport power_matches(const std::vector<std::vector<int>>& states, const StateMap& step,
                          std::uint64_t k, const StateMap& target);

std::vector<int> iterate(const StateMap& step, std::vector<int> state, std::uint64_t k);

// Stanley-Thomas words: J(R(a,b)) <-> binary words of length a+b with a ones,
// rowmotion <-> rotation.

struct SymmetryWord {
  std::vector<int> bits;
  friend bool operator==(const SymmetryWord&, const SymmetryWord&) = default;
};

/// Cyclic left rotation: (w_1, ..., w_N) -> (w_2, ..., w_N, w_1).
SymmetryWord rotate(const SymmetryWord& w, int steps = 1);

/// `vals` is a height-1 P-partition of R(a,b) (row-major ids).
SymmetryWord stanley_thomas(int a, int b, std::span<const int> vals);
std::vector<int> stanley_thomas_inverse(int a, int b, const SymmetryWord& w);

// Noncrossing matchings: L(R(2,n)) <-> perfect noncrossing matchings of [2n].

struct Matching {
  std::vector<std::pair<int, int>> pairs;  ///< 1-based, each (a < b), sorted
  bool is_noncrossing() const;
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Rotates every point i to i - steps (mod 2n, kept in 1..2n).
Matching rotate(const Matching& mt, int steps = 1);

/// Position t is an opener when the t-th listed element lies in row 1.
Matching matching_model(int n, std::span<const int> seq);
std::vector<int> matching_model_inverse(int n, const Matching& mt);

// Plane-partition symmetries on R(a,b).

std::vector<int> transpose(int a, int b, std::span<const int> vals);
std::vector<int> complement_rect(int a, int b, std::span<const int> vals, int m);

enum class SymClass {
  Symmetric,            ///< (i)   Tr pi = pi on PP^m(n x n)
  RowTranspose,         ///< (ii)  Row^{n+1} pi = Tr pi on PP^{2m}((n+1) x (n+1))
  SymmetricRowPeriodic  ///< (iii) Tr pi = pi and Row^{2n} pi = pi on PP^{2m}(2n x 2n)
};

std::uint64_t symclass_fixed_count(int n, int m, SymClass condition);

}  // namespace posetdyn
