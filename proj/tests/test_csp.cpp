#include <doctest.h>

#include <complex>
#include <random>

#include "oracles.hpp"
#include "posetdyn/catalog.hpp"
#include "posetdyn/csp.hpp"
#include "posetdyn/dynamics.hpp"
#include "posetdyn/formulas.hpp"
#include "posetdyn/orbits.hpp"

using namespace posetdyn;

namespace {

QPoly poly(const std::vector<long long>& cs) {
  std::vector<BigInt> v;
  for (auto c : cs) v.emplace_back(c);
  return QPoly(std::move(v));
}

OrbitDecomposition with_sizes(const std::multiset<std::uint64_t>& sizes) {
  OrbitDecomposition d;
  for (auto s : sizes) {
    d.orbit_sizes.push_back(s);
    d.total += s;
  }
  return d;
}

StateSet row_states(const Poset& p, int m) {
  StateSet set(p.size());
  for (const auto& v : oracle::labelings(p, m)) set.add(v);
  set.finalize();
  return set;
}

std::complex<double> eval_at(const QPoly& f, std::complex<double> z) {
  std::complex<double> out = 0;
  for (int e = f.degree(); e >= 0; --e) out = out * z + f.coeff(e).convert_to<double>();
  return out;
}

}  // namespace

TEST_CASE("state sets") {
  StateSet s(3);
  s.add(std::vector<int>{2, 0, 1});
  s.add(std::vector<int>{0, 0, 0});
  s.add(std::vector<int>{2, 0, 1});
  s.finalize();
  CHECK(s.size() == 2);
  CHECK(s.decode(0) == std::vector<int>{0, 0, 0});
  CHECK(s.find(std::vector<int>{2, 0, 1}) == 1u);
  CHECK_FALSE(s.find(std::vector<int>{1, 1, 1}));
}

TEST_CASE("orbit decomposition basics") {
  StateSet s(1);
  for (int i = 0; i < 5; ++i) s.add(std::vector<int>{i});
  s.finalize();
  const auto id = orbits(s, [](const std::vector<int>& x) { return x; });
  CHECK(id.orbit_sizes == std::vector<std::uint64_t>(5, 1));
  CHECK(id.order() == 1);
  const auto shift = orbits(s, [](const std::vector<int>& x) { return std::vector<int>{(x[0] + 2) % 5}; });
  CHECK(shift.orbit_sizes == std::vector<std::uint64_t>{5});
  CHECK(shift.representatives[0] == std::vector<int>{0});
  CHECK_THROWS_AS(orbits(s, [](const std::vector<int>& x) { return std::vector<int>{x[0] + 1}; }), StateEscape);
  CHECK_THROWS_AS(orbits(s, [](const std::vector<int>&) { return std::vector<int>{0}; }), StateEscape);
}

TEST_CASE("rowmotion orbits on small state spaces") {
  const Poset r22 = build("R(2,2)").poset;
  const Rowmotion row(r22, 1);
  const auto orb = orbits(row_states(r22, 1), [&](const std::vector<int>& x) { return row.rowmote(x); });
  CHECK(orb.size_histogram() == std::map<std::uint64_t, std::uint64_t>{{2, 1}, {4, 1}});
  CHECK(orb.order() == 4);

  const Poset a2 = build("Phi(A,2)").poset;
  const Rowmotion ra(a2, 1);
  CHECK(orbits(row_states(a2, 1), [&](const std::vector<int>& x) { return ra.rowmote(x); }).total == 5);
}

TEST_CASE("csp examples") {
  const auto trivial = with_sizes({1, 1, 1});
  CHECK(csp_check(trivial, 1, QPoly(3)).passed());

  const Poset r22 = build("R(2,2)").poset;
  const Rowmotion row(r22, 1);
  const auto orb = orbits(row_states(r22, 1), [&](const std::vector<int>& x) { return row.rowmote(x); });
  const CspVerdict ok = csp_check(orb, 4, omega_q(parse_spec("R(2,2)"), 1));
  CHECK(ok.passed());
  CHECK(ok.orbit_poly == std::vector<BigInt>{2, 1, 2, 1});
  CHECK(ok.folded == std::vector<BigInt>{2, 1, 2, 1});

  const CspVerdict bad = csp_check(orb, 4, poly({1, 1, 1, 1, 2}));
  CHECK(bad.status == CspStatus::Fail);
  REQUIRE(bad.failing_k);
  CHECK(*bad.failing_k == 1);
  CHECK(bad.fixed_points == 0);
  CHECK(bad.f_value == QPoly(2));

  const CspVerdict mismatch = csp_check(orb, 3, QPoly(6));
  CHECK(mismatch.status == CspStatus::OrderMismatch);
  CHECK(mismatch.bad_orbit == 4u);
  CHECK_THROWS(csp_check(orb, 0, QPoly(6)));
}

TEST_CASE("root of unity evaluation") {
  // 1 + q + q^2 at a primitive cube root of unity is zero; at -1 it is 1.
  CHECK(evaluate_at_root_of_unity(poly({1, 1, 1}), 3, 1).is_zero());
  CHECK(evaluate_at_root_of_unity(poly({1, 1, 1}), 6, 3) == QPoly(1));
  CHECK(evaluate_at_root_of_unity(poly({1, 1, 1}), 6, 0) == QPoly(3));
}

TEST_CASE("exact verdicts agree with complex evaluation on 200 random instances") {
  std::mt19937_64 rng(2024);
  int passes = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    std::vector<int> divisors;
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) divisors.push_back(d);
    }
    std::multiset<std::uint64_t> sizes;
    const int count = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int i = 0; i < count; ++i) {
      sizes.insert(static_cast<std::uint64_t>(divisors[rng() % divisors.size()]));
    }
    // Start from the orbit polynomial, add a random multiple of q^n - 1, and
    // perturb half of the time.
    std::vector<long long> f(static_cast<std::size_t>(3 * n + 1), 0);
    for (auto s : sizes) {
      for (std::uint64_t i = 0; i < s; ++i) ++f[i * static_cast<std::uint64_t>(n) / s];
    }
    for (int j = 0; j <= n; ++j) {
      const long long c = std::uniform_int_distribution<int>(0, 2)(rng);
      f[static_cast<std::size_t>(j + n)] += c;
      f[static_cast<std::size_t>(j)] -= c;
    }
    if (t % 2 == 1) {
      const auto e = static_cast<std::size_t>(std::uniform_int_distribution<int>(0, 3 * n)(rng));
      f[e] += std::uniform_int_distribution<int>(1, 2)(rng);
    }
    const bool expected = oracle::csp_holds_numerically(sizes, n, f);
    const CspVerdict v = csp_check(with_sizes(sizes), n, poly(f));
    CHECK_MESSAGE(v.passed() == expected, "trial ", t, " n=", n);
    passes += v.passed();
    if (!v.passed()) {
      REQUIRE(v.failing_k);
      const double pi = std::acos(-1.0);
      const auto z = std::polar(1.0, 2 * pi * *v.failing_k / n);
      CHECK(std::abs(eval_at(poly(f), z) - eval_at(v.f_value, z)) < 1e-6);
      CHECK(std::abs(eval_at(v.f_value, z) - v.fixed_points.convert_to<double>()) > 1e-6);
    }
  }
  CHECK(passes >= 100);
  CHECK(passes < 200);
}
