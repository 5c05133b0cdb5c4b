#include "posetdyn/csp.hpp"

#include <numeric>
#include <sstream>

namespace posetdyn {

std::string to_string(CspStatus status) {
  switch (status) {
    case CspStatus::Pass:
      return "PASS";
    case CspStatus::Fail:
      return "FAIL";
    case CspStatus::OrderMismatch:
      return "ORDER_MISMATCH";
  }
  return "?";
}

BigInt fixed_point_count(const OrbitDecomposition& orbits, std::uint64_t k) {
  BigInt count = 0;
  for (auto size : orbits.orbit_sizes) {
    if (k % size == 0) count += size;
  }
  return count;
}

QPoly evaluate_at_root_of_unity(const QPoly& f, int n, int k) {
  if (n < 1) throw std::invalid_argument("root of unity order must be positive");
  const int kk = ((k % n) + n) % n;
  const int d = n / std::gcd(n, kk);
  // zeta^k is a primitive d-th root of unity: fold mod q^d - 1, then Phi_d.
  return divmod(QPoly(f.fold(d)), cyclotomic(d)).second;
}

CspVerdict csp_check(const OrbitDecomposition& orbits, int order, const QPoly& f) {
  if (order < 1) throw std::invalid_argument("csp_check: order must be positive");
  CspVerdict v;
  v.order = order;
  const auto n = static_cast<std::uint64_t>(order);
  for (auto size : orbits.orbit_sizes) {
    if (n % size != 0) {
      v.status = CspStatus::OrderMismatch;
      v.bad_orbit = size;
      return v;
    }
  }
  v.orbit_poly.assign(static_cast<std::size_t>(order), BigInt(0));
  for (auto size : orbits.orbit_sizes) {
    const std::uint64_t stride = n / size;
    for (std::uint64_t i = 0; i < size; ++i) ++v.orbit_poly[static_cast<std::size_t>(i * stride)];
  }
  v.folded = f.fold(order);
  if (v.folded == v.orbit_poly) return v;

  v.status = CspStatus::Fail;
  for (int k = 0; k < order; ++k) {
    const BigInt fixed = fixed_point_count(orbits, static_cast<std::uint64_t>(k));
    const QPoly value = evaluate_at_root_of_unity(f, order, k);
    if (value != QPoly(fixed)) {
      v.failing_k = k;
      v.fixed_points = fixed;
      v.f_value = value;
      return v;
    }
  }
  throw std::logic_error("csp_check: folds differ but every evaluation agrees");
}

std::string CspVerdict::summary() const {
  std::ostringstream out;
  out << to_string(status) << " n=" << order;
  if (status == CspStatus::OrderMismatch) {
    out << " orbit of size " << *bad_orbit << " does not divide n";
  } else if (failing_k) {
    out << " k=" << *failing_k << " fixed=" << fixed_points << " f(zeta^k)=" << f_value.to_string("z");
  }
  return out.str();
}

}  // namespace posetdyn
