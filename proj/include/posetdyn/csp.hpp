#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posetdyn/bigint.hpp"
#include "posetdyn/orbits.hpp"
#include "posetdyn/qpoly.hpp"

namespace posetdyn {

enum class CspStatus {
  Pass,
  Fail,
  OrderMismatch,  ///< some orbit size does not divide the declared order
};

std::string to_string(CspStatus status);

struct CspVerdict {
  CspStatus status = CspStatus::Pass;
  int order = 1;
  /// sum over orbits O of sum_{i < |O|} q^{i n / |O|}, as n coefficients
  std::vector<BigInt> orbit_poly;
  /// f reduced modulo q^n - 1
  std::vector<BigInt> folded;
  /// On Fail: the smallest k with #Fix(c^k) != f(zeta^k).
  std::optional<int> failing_k;
  BigInt fixed_points;
  /// f(zeta^k) as a polynomial in zeta reduced modulo Phi_d, d = n / gcd(n, k).
  QPoly f_value;
  /// On OrderMismatch: the offending orbit size.
  std::optional<std::uint64_t> bad_orbit;

  bool passed() const noexcept { return status == CspStatus::Pass; }
  std::string summary() const;
};

/// Exact cyclic sieving check: the orbit polynomial against f mod q^n - 1.
CspVerdict csp_check(const OrbitDecomposition& orbits, int order, const QPoly& f);

/// #{x : c^k x = x}, from the orbit sizes.
BigInt fixed_point_count(const OrbitDecomposition& orbits, std::uint64_t k);

/// f(zeta_n^k) reduced modulo the cyclotomic polynomial Phi_d.
QPoly evaluate_at_root_of_unity(const QPoly& f, int n, int k);

}  // namespace posetdyn
