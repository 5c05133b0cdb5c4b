#include <doctest.h>

#include "oracles.hpp"
#include "posetdyn/catalog.hpp"
#include "posetdyn/checks.hpp"
#include "posetdyn/formulas.hpp"

using namespace posetdyn;

namespace {

QPoly poly(const std::vector<long long>& cs) {
  std::vector<BigInt> v;
  for (auto c : cs) v.emplace_back(c);
  return QPoly(std::move(v));
}

// Symmetric labelings of the n x n rectangle: |pi| and the upper-triangle sum.
std::pair<std::vector<long long>, std::vector<long long>> sym_pp_brute(int n, int m) {
  const Poset sq = build(FamilySpec{Family::Rectangle, {n, n}}).poset;
  std::vector<long long> size(static_cast<std::size_t>(n * n * m + 1), 0);
  std::vector<long long> prime(size.size(), 0);
  for (const auto& v : oracle::labelings(sq, m)) {
    bool symmetric = true;
    int total = 0;
    int upper = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int x = v[static_cast<std::size_t>(i * n + j)];
        symmetric = symmetric && x == v[static_cast<std::size_t>(j * n + i)];
        total += x;
        if (i <= j) upper += x;
      }
    }
    if (!symmetric) continue;
    ++size[static_cast<std::size_t>(total)];
    ++prime[static_cast<std::size_t>(upper)];
  }
  return {size, prime};
}

}  // namespace

TEST_CASE("closed forms for Omega match enumeration") {
  CHECK(omega_closed(parse_spec("V(1)"), 1) == 5);
  CHECK(omega_closed(parse_spec("R(2,2)"), 1) == 6);
  CHECK(omega_closed(parse_spec("DS(2,1)"), 1) == 6);
  CHECK(omega_closed(parse_spec("R(3,3)"), 3) == 980);
  for (int m = 0; m <= 10; ++m) CHECK_NOTHROW(omega_closed(parse_spec("AP(5,2,2)"), m));
  CHECK(omega_closed(parse_spec("AP(5,2,2)"), 2) == oracle::pp_count(build("AP(5,2,2)").poset, 2));
  CHECK_THROWS_AS(omega_closed(parse_spec("Phi(D,4)"), 1), NoProductFormula);
  for (const auto& s : catalog_instances(8)) {
    const Poset p = build(s).poset;
    for (int m = 0; m <= 3; ++m) {
      try {
        CHECK_MESSAGE(omega_closed(s, m) == oracle::pp_count(p, m), s.to_string(), " m=", m);
      } catch (const NoProductFormula&) {
        CHECK(s.family == Family::RootD);
      }
    }
  }
}

TEST_CASE("formula reports") {
  const FormulaReport r = formula_report(parse_spec("R(3,3)"), 2);
  CHECK(r.agrees);
  CHECK(r.closed_value == 175);
  REQUIRE(r.brute_value);
  CHECK(*r.brute_value == 175);
  const FormulaReport big = formula_report(parse_spec("R(6,6)"), 6, 1000);
  CHECK_FALSE(big.brute_value);
}

TEST_CASE("q-Catalan numbers") {
  const CoxeterData a2 = coxeter_data(parse_spec("Phi(A,2)"));
  const CoxeterData b2 = coxeter_data(parse_spec("Phi(B,2)"));
  CHECK(cat_q(a2) == poly({1, 0, 1, 1, 1, 0, 1}));
  CHECK(cat_q(a2).at_one() == 5);
  CHECK(cat_q(b2).at_one() == 6);
  CHECK(cat_multi_q(a2, 0) == QPoly(1));
  CHECK(cat_multi_q(a2, 1) == cat_q(a2));
  // Cat(W,m;1) counts PP^m of the root poset for the coincidental types.
  for (const auto& s : catalog_instances(9)) {
    if (!is_coincidental_root(s)) continue;
    const Poset p = build(s).poset;
    for (int m = 0; m <= 2; ++m) {
      CHECK_MESSAGE(cat_multi_q(coxeter_data(s), m).at_one() == oracle::pp_count(p, m), s.to_string());
    }
  }
}

TEST_CASE("order ideal counts") {
  CHECK(count_order_ideals(build("Phi(A,3)").poset) == 14);
  CHECK(count_order_ideals(build("Phi(D,4)").poset) == 50);
  CHECK(count_order_ideals(build("Phi(G2)").poset) == oracle::ideal_count(build("Phi(G2)").poset));
  for (const auto& s : catalog_instances(14)) {
    const Poset p = build(s).poset;
    CHECK_MESSAGE(count_order_ideals(p) == oracle::ideal_count(p), s.to_string());
  }
}

TEST_CASE("size generating functions") {
  for (const auto& s : catalog_instances(8)) {
    const Poset p = build(s).poset;
    for (int m = 0; m <= 2; ++m) {
      const QPoly f = size_genfn(p, m);
      CHECK_MESSAGE(f == poly(oracle::size_genfn(p, m)), s.to_string(), " m=", m);
      // Coefficients of degree at most m are already stable.
      CHECK(size_series(p, m) == f.truncated(m));
    }
  }
  const auto [a, b] = std::make_pair(2, 3);
  for (int m = 0; m <= 3; ++m) {
    CHECK(expand(macmahon_product(a, b, m)) == poly(oracle::size_genfn(build("R(2,3)").poset, m)));
  }
}

TEST_CASE("maj generating functions") {
  for (const auto& s : catalog_instances(8)) {
    const Poset p = build(s).poset;
    const auto ls = oracle::linexts(p);
    const QPoly f = maj_genfn(p);
    CHECK_MESSAGE(f == poly(oracle::maj_genfn(p, ls.front())), s.to_string());
    CHECK(f == maj_genfn(p, ls.back()));
    CHECK(maj_genfn(p, ls[ls.size() / 2]) == poly(oracle::maj_genfn(p, ls[ls.size() / 2])));
    CHECK(f.at_one() == oracle::linext_count(p));
  }
}

TEST_CASE("minuscule product formulas") {
  for (const auto& s : catalog_instances(10)) {
    if (!is_minuscule(s)) continue;
    const Poset p = build(s).poset;
    for (int m = 0; m <= 2; ++m) {
      CHECK_MESSAGE(expand(minuscule_product(p, m)) == poly(oracle::size_genfn(p, m)), s.to_string(), " m=", m);
    }
    const auto ls = oracle::linexts(p);
    CHECK_MESSAGE(expand(minuscule_maj_product(p)) == poly(oracle::maj_genfn(p, ls.front())), s.to_string());
  }
}

TEST_CASE("symmetric plane partitions") {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      if (n == 3 && m == 3) continue;
      const auto [size, prime] = sym_pp_brute(n, m);
      const SymPPGenfns g = sym_pp_genfns(n, m);
      CHECK(g.size == poly(size));
      CHECK(g.size_prime == poly(prime));
      CHECK(expand(sym_pp_prime_product(n, m)) == g.size_prime);
      CHECK(expand(sym_pp_product(n, m)).at_one() == g.size.at_one());
    }
  }
}

TEST_CASE("linear extension q-analogues") {
  for (const auto& s : catalog_instances(8)) {
    if (s.family == Family::RootD || !omega_roots(s).kappa) continue;
    const Poset p = build(s).poset;
    CHECK_MESSAGE(e_q_product(s).at_one() == BigRational(oracle::linext_count(p)), s.to_string());
  }
}

TEST_CASE("conjectural CSP polynomials at q = 1") {
  CHECK(expand(v_promotion_product(1)).at_one() == 2);
  for (int n = 1; n <= 3; ++n) {
    const Poset v = build(FamilySpec{Family::ChainOfVs, {n}}).poset;
    CHECK(expand(v_promotion_product(n)).at_one() == oracle::linext_count(v));
    for (int m = 0; m <= 2; ++m) {
      CHECK(expand(v_rowmotion_product(n, m)).at_one() == oracle::pp_count(v, m));
    }
  }
  CHECK(expand(v_rowmotion_product(1, 1)).at_one() == 5);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= n; ++k) {
      const Poset ds = build(FamilySpec{Family::DoubleStaircase, {n, k}}).poset;
      CHECK_MESSAGE(expand(ds_promotion_product(n, k)).at_one() == oracle::linext_count(ds), "DS(", n, ",", k, ")");
    }
  }
  const auto claim = promotion_csp_claim(parse_spec("R(2,3)"));
  REQUIRE(claim);
  CHECK(claim->order == 6);
  CHECK(expand(claim->product).at_one() == 5);
  CHECK_FALSE(claim->conjecture);
  const auto vrow = rowmotion_csp_claim(parse_spec("V(2)"), 1);
  REQUIRE(vrow);
  CHECK(vrow->conjecture);
}

TEST_CASE("root promotion series") {
  const CoxeterData a2 = coxeter_data(parse_spec("Phi(A,2)"));
  CHECK(root_promotion_series(a2, 6) == poly({1, 0, 0, 1}));
  // Once the truncation passes the degree of the polynomial, q = 1 gives e(P).
  for (const auto& s : catalog_instances(8)) {
    if (!is_coincidental_root(s)) continue;
    const CoxeterData w = coxeter_data(s);
    const Poset p = build(s).poset;
    const int top = p.size() * w.h;
    CHECK_MESSAGE(root_promotion_series(w, top).at_one() == oracle::linext_count(p), s.to_string());
  }
}

TEST_CASE("doppelganger pairs share e(P) and Omega") {
  const auto pairs = doppelganger_pairs(10);
  REQUIRE_FALSE(pairs.empty());
  for (const auto& d : pairs) {
    const Poset p = build(d.p).poset;
    const Poset q = d.dual_q ? dual(build(d.q).poset) : build(d.q).poset;
    CHECK_MESSAGE(p.size() == q.size(), d.label());
    CHECK_MESSAGE(oracle::linext_count(p) == oracle::linext_count(q), d.label());
    for (int m = 0; m <= 2; ++m) CHECK_MESSAGE(oracle::pp_count(p, m) == oracle::pp_count(q, m), d.label());
  }
}
