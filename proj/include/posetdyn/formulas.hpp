#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetdyn/bigint.hpp"
#include "posetdyn/catalog.hpp"
#include "posetdyn/poset.hpp"
#include "posetdyn/qpoly.hpp"

namespace posetdyn {

/// Enumeration gives up past this many states.
inline constexpr std::uint64_t kBruteForceLimit = 10'000'000;

/// Omega_P(m) from the family's product formula, over exact rationals.
/// Root posets use Cat(W,m;1); type D only where it is coincidental in
/// disguise (D2 = A1 x A1, D3 = A3). Throws NoProductFormula otherwise.
BigInt omega_closed(const FamilySpec& spec, int m);

/// Omega(m;q) and e(P;q) from the root multiset. `kappa` overrides the
/// family's own value (any multiple of every root denominator works).
CycloProduct omega_q_product(const FamilySpec& spec, int m, std::optional<int> kappa = {});
CycloProduct e_q_product(const FamilySpec& spec, std::optional<int> kappa = {});
QPoly omega_q(const FamilySpec& spec, int m);
QPoly e_q(const FamilySpec& spec);

CycloProduct cat_product(const CoxeterData& w);
CycloProduct cat_multi_product(const CoxeterData& w, int m);
QPoly cat_q(const CoxeterData& w);
QPoly cat_multi_q(const CoxeterData& w, int m);

/// Number of order ideals, by antichain enumeration.
BigInt count_order_ideals(const Poset& poset);

/// F_P(m;q) = sum of q^|pi| over PP^m(P).
QPoly size_genfn(const Poset& poset, int m);

/// lim_{m -> inf} F_P(m;q) as a power series truncated above `degree`: all
/// order-preserving P -> N with |pi| <= degree.
QPoly size_series(const Poset& poset, int degree);

/// sum of q^maj(L) over L(P), descents taken with respect to the natural
/// labeling given by `labeling` (a linear extension; lexicographically first
/// when omitted).
QPoly maj_genfn(const Poset& poset, const std::optional<std::vector<Element>>& labeling = {});

/// Symmetric plane partitions in PP^m(n x n): generating functions of |pi|
/// and of |pi|' (the sum over the upper triangle i <= j).
struct SymPPGenfns {
  QPoly size;
  QPoly size_prime;
};
SymPPGenfns sym_pp_genfns(int n, int m);
CycloProduct sym_pp_product(int n, int m);
CycloProduct sym_pp_prime_product(int n, int m);

CycloProduct macmahon_product(int a, int b, int m);
/// prod over p of (1-q^{m+r(p)+1}) / (1-q^{r(p)+1}).
CycloProduct minuscule_product(const Poset& poset, int m);
/// (1-q)...(1-q^#P) prod over p of 1/(1-q^{r(p)+1}).
CycloProduct minuscule_maj_product(const Poset& poset);

// Conjectural (and theorem) CSP polynomials.

/// V(n) promotion: prod_{i<=3n}(1-q^{2i}) / (prod_{i=2}^{2n+1}(1-q^i) prod_{i=2}^{n+1}(1-q^{2i})).
CycloProduct v_promotion_product(int n);
/// DS(n,k) promotion.
CycloProduct ds_promotion_product(int n, int k);
/// V(n) rowmotion, both products.
CycloProduct v_rowmotion_product(int n, int m);
/// (1-q^2)(1-q^4)...(1-q^{nh}) times lim Cat(W,m;q), as a power series
/// truncated above `degree`.
QPoly root_promotion_series(const CoxeterData& w, int degree);

/// The CSP polynomial and cyclic order for promotion / rowmotion on a family,
/// or nothing when the family carries no such claim.
struct CspClaim {
  CycloProduct product;
  int order = 1;
  bool conjecture = false;
};
std::optional<CspClaim> promotion_csp_claim(const FamilySpec& spec);
std::optional<CspClaim> rowmotion_csp_claim(const FamilySpec& spec, int m);

/// The three minuscule doppelganger pairs (P, Q) at a given size: R(a,b)
/// with T(a,b)*, DS(5,0) with Phi(H3), Min(D,l) with Phi(I2,2l). The second
/// poset of the pair is dualized where needed.
struct DoppelPair {
  FamilySpec p;
  FamilySpec q;
  bool dual_q = false;
  std::string label() const;
};
std::vector<DoppelPair> doppelganger_pairs(int max_size);

struct FormulaReport {
  FamilySpec spec;
  int m = 0;
  BigInt closed_value;
  std::optional<BigInt> brute_value;  ///< absent when too large to enumerate
  bool agrees = true;
};
FormulaReport formula_report(const FamilySpec& spec, int m,
                             std::uint64_t limit = kBruteForceLimit);

}  // namespace posetdyn
