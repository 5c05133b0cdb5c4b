#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetdyn/bigint.hpp"
#include "posetdyn/poset.hpp"

namespace posetdyn {

enum class Family {
  Rectangle,        // R(a,b)
  Staircase,        // S(n)
  Trapezoid,        // T(a,b)
  DoubleStaircase,  // DS(n,k)
  ArithProg,        // AP(M,d,l)
  RootA,            // Phi(A,n)
  RootB,            // Phi(B,n)
  RootC,            // Phi(C,n)
  RootD,            // Phi(D,n)
  RootG2,           // Phi(G2)
  RootI2,           // Phi(I2,l)
  RootH3,           // Phi(H3)
  MinusculeD,       // Min(D,n)
  MinusculeE6,      // Min(E6)
  MinusculeE7,      // Min(E7)
  ChainOfVs,        // V(n)
};

struct FamilySpec {
  Family family = Family::Rectangle;
  std::vector<int> params;

  std::string to_string() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ParameterError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when a family has no order-polynomial product formula to offer.
class NoProductFormula : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses the compact grammar `R(3,4)`, `Phi(I2,5)`, `Min(E7)`, ... exactly:
/// case-sensitive, no whitespace.
FamilySpec parse_spec(std::string_view text);

/// Throws ParameterError naming the violated range.
void validate(const FamilySpec& spec);

bool is_shape(const FamilySpec& spec);
bool is_minuscule(const FamilySpec& spec);
bool is_root_poset(const FamilySpec& spec);
/// Types A, B(=C), I2 and H3 (G2 is I2(6) but is kept out of these claims).
bool is_coincidental_root(const FamilySpec& spec);

/// A catalog poset with its distinguished maps.
///
/// Shapes use row-major ids over their boxes; `boxes[id]` is the 1-based
/// (row, column). Crystallographic root posets order roots by height, then by
/// coefficient vector (descending), so ids 0..n-1 are the simple roots
/// alpha_1..alpha_n; `roots[id]` holds the coefficient vector. V(n) uses
/// id 3(i-1)+{0,1,2} for the bottom, left and right element of the i-th V.
struct CatalogPoset {
  FamilySpec spec;
  Poset poset;
  std::optional<PosetMap> delta;  ///< involutive automorphism (S(n), root posets, V(n))
  std::optional<PosetMap> iota;   ///< involutive anti-automorphism (minuscule)
  std::vector<std::pair<int, int>> boxes;
  std::vector<std::vector<int>> roots;
};

CatalogPoset build(const FamilySpec& spec);
inline CatalogPoset build(std::string_view text) { return build(parse_spec(text)); }

struct CoxeterData {
  std::vector<int> degrees;  ///< d_1 <= ... <= d_n
  int h = 0;                 ///< Coxeter number d_n

  int rank() const noexcept { return static_cast<int>(degrees.size()); }
};

/// Degrees read off the built root poset: the rank-size partition is
/// conjugated and every part increased by one.
CoxeterData coxeter_data(const FamilySpec& spec);
CoxeterData coxeter_data_from_rank_sizes(const std::vector<int>& rank_sizes);

/// Cat(W,m;q) evaluated at q = 1.
BigRational multi_catalan_at_one(const CoxeterData& w, int m);

struct OmegaRoots {
  std::vector<BigRational> roots;  ///< with multiplicity, sorted descending
  std::optional<int> kappa;        ///< 1, 2, or absent when neither applies
};

/// Roots of the order polynomial, so that Omega_P(m) = prod (m - a) / (-a).
OmegaRoots omega_roots(const FamilySpec& spec);

/// Positive roots of the crystallographic root system of the given type
/// ('A', 'B', 'C', 'D', 'E', 'G') in simple-root coordinates.
std::vector<std::vector<int>> positive_roots(char type, int rank);

/// Root poset on the given positive roots: x covers y iff x - y is simple.
Poset root_poset(const std::vector<std::vector<int>>& roots, std::string name = {});

}  // namespace posetdyn
