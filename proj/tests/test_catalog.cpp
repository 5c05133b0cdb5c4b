#include <doctest.h>

#include "oracles.hpp"
#include "posetdyn/catalog.hpp"
#include "posetdyn/checks.hpp"
#include "posetdyn/formulas.hpp"

using namespace posetdyn;

namespace {

std::size_t parse_error_at(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for ", text);
  return 0;
}

std::vector<BigRational> rationals(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<BigRational> out;
  for (auto [a, b] : xs) out.emplace_back(a, b);
  return out;
}

}  // namespace

TEST_CASE("spec grammar") {
  CHECK(parse_spec("R(3,4)") == FamilySpec{Family::Rectangle, {3, 4}});
  CHECK(parse_spec("Phi(I2,5)") == FamilySpec{Family::RootI2, {5}});
  CHECK(parse_spec("Phi(H3)") == FamilySpec{Family::RootH3, {}});
  CHECK(parse_spec("Min(E7)") == FamilySpec{Family::MinusculeE7, {}});
  CHECK(parse_spec("Phi(B,3)") == FamilySpec{Family::RootB, {3}});
  CHECK(parse_spec("AP(5,2,2)") == FamilySpec{Family::ArithProg, {5, 2, 2}});
  CHECK(parse_error_at("X(1)") == 0);
  CHECK(parse_error_at("r(2,2)") == 0);
  CHECK(parse_error_at("R(3, 4)") == 4);
  CHECK(parse_error_at("R(3,4") == 5);
  CHECK(parse_error_at("R(3,4)x") == 6);
  CHECK(parse_error_at("Phi(Q,2)") == 4);
  CHECK_THROWS_AS(parse_spec("R(3)"), ParseError);
  CHECK_THROWS_AS(parse_spec("R(a,2)"), ParseError);
  CHECK_THROWS_AS(parse_spec(""), ParseError);
}

TEST_CASE("spec round trip") {
  for (const auto& s : catalog_instances(12)) CHECK(parse_spec(s.to_string()) == s);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build("R(0,2)"), ParameterError);
  CHECK_THROWS_AS(build("DS(2,3)"), ParameterError);
  CHECK_THROWS_AS(build("AP(3,2,2)"), ParameterError);  // M - l d < 0
  CHECK_THROWS_AS(build("Phi(I2,1)"), ParameterError);
  CHECK_THROWS_AS(build("V(0)"), ParameterError);
  CHECK_NOTHROW(build("AP(4,2,2)"));  // M - l d = 0 drops the last row
}

TEST_CASE("construction examples") {
  const CatalogPoset r = build("R(3,4)");
  CHECK(r.poset.size() == 12);
  CHECK(grading_of(r.poset)->rmax == 5);

  const Poset a3 = build("Phi(A,3)").poset;
  CHECK(a3.size() == 6);
  CHECK(a3.minimal_elements().size() == 3);
  CHECK(a3.maximal_elements().size() == 1);
  CHECK(grading_of(a3)->rmax == 2);

  const Poset v2 = build("V(2)").poset;
  CHECK(v2.size() == 6);
  CHECK(grading_of(v2)->rmax == 2);

  const Poset e7 = build("Min(E7)").poset;
  CHECK(e7.size() == 27);
  CHECK(count_order_ideals(e7) == 56);
  CHECK(count_p_partitions(e7, 1, 1000) == 56u);
  CHECK(find_isomorphism(e7, dual(e7)));
  CHECK(build("Min(E6)").poset.size() == 16);

  for (int n = 1; n <= 5; ++n) {
    const Poset d = build(FamilySpec{Family::MinusculeD, {n}}).poset;
    CHECK(d.size() == 2 * n);
    CHECK(grading_of(d)->rmax == 2 * n - 2);
  }
  CHECK(grading_of(build("Phi(H3)").poset)->rank_sizes() == std::vector<int>{3, 2, 2, 2, 2, 1, 1, 1, 1});
  CHECK_FALSE(grading_of(build("DS(3,1)").poset));
}

TEST_CASE("family identities up to isomorphism") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(find_isomorphism(build(FamilySpec{Family::Trapezoid, {n, n}}).poset,
                           build(FamilySpec{Family::DoubleStaircase, {n, n - 1}}).poset));
    CHECK(find_isomorphism(build(FamilySpec{Family::Trapezoid, {n, n + 1}}).poset,
                           build(FamilySpec{Family::DoubleStaircase, {n, n}}).poset));
    CHECK(find_isomorphism(build(FamilySpec{Family::RootA, {n}}).poset,
                           dual(build(FamilySpec{Family::Staircase, {n}}).poset)));
    CHECK(find_isomorphism(build(FamilySpec{Family::Staircase, {n}}).poset,
                           build(FamilySpec{Family::ArithProg, {n + 1, 1, n}}).poset));
    if (n >= 2) {
      CHECK(find_isomorphism(build(FamilySpec{Family::RootB, {n}}).poset,
                             dual(build(FamilySpec{Family::Trapezoid, {n, n}}).poset)));
    }
  }
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      CHECK(find_isomorphism(build(FamilySpec{Family::Rectangle, {a, b}}).poset,
                             build(FamilySpec{Family::ArithProg, {b, 0, a}}).poset));
    }
  }
  CHECK(find_isomorphism(build("Phi(I2,6)").poset, build("Phi(G2)").poset));
}

TEST_CASE("attached delta and iota are validated against exhaustive map search") {
  for (const auto& s : catalog_instances(16)) {
    const CatalogPoset c = build(s);
    if (c.delta) {
      const auto autos = find_maps(c.poset, MapKind::Automorphism);
      CHECK_MESSAGE(std::find(autos.begin(), autos.end(), *c.delta) != autos.end(), s.to_string());
      CHECK(c.delta->is_involution());
    }
    if (c.iota) {
      CHECK_MESSAGE(is_anti_automorphism(c.poset, c.iota->perm), s.to_string());
      CHECK(c.iota->is_involution());
    }
    CHECK(c.delta.has_value() ==
          (s.family == Family::Staircase || s.family == Family::ChainOfVs || is_coincidental_root(s)));
    CHECK(c.iota.has_value() == is_minuscule(s));
  }
  CHECK(build("Min(E7)").iota->is_involution());
}

TEST_CASE("delta conventions on coincidental root posets") {
  CHECK(build("Phi(B,3)").delta->is_identity());
  CHECK(build("Phi(H3)").delta->is_identity());
  CHECK(build("Phi(I2,6)").delta->is_identity());
  CHECK_FALSE(build("Phi(I2,5)").delta->is_identity());
  CHECK_FALSE(build("Phi(A,3)").delta->is_identity());
  CHECK(build("Phi(A,1)").delta->is_identity());
  const CatalogPoset i5 = build("Phi(I2,5)");
  const auto mins = i5.poset.minimal_elements();
  REQUIRE(mins.size() == 2);
  CHECK((*i5.delta)(mins[0]) == mins[1]);
}

TEST_CASE("Coxeter numerology") {
  CHECK(coxeter_data(parse_spec("Phi(A,2)")).degrees == std::vector<int>{2, 3});
  CHECK(coxeter_data(parse_spec("Phi(A,2)")).h == 3);
  CHECK(coxeter_data(parse_spec("Phi(B,2)")).degrees == std::vector<int>{2, 4});
  CHECK(coxeter_data(parse_spec("Phi(H3)")).degrees == std::vector<int>{2, 6, 10});
  CHECK(coxeter_data(parse_spec("Phi(D,4)")).degrees == std::vector<int>{2, 4, 4, 6});
  CHECK(coxeter_data(parse_spec("Phi(G2)")).degrees == std::vector<int>{2, 6});
  CHECK(coxeter_data(parse_spec("Phi(I2,7)")).degrees == std::vector<int>{2, 7});
  CHECK_THROWS(coxeter_data(parse_spec("R(2,2)")));
  for (const auto& s : catalog_instances(30)) {
    if (!is_root_poset(s)) continue;
    const CoxeterData w = coxeter_data(s);
    const Poset p = build(s).poset;
    CHECK_MESSAGE(p.size() * 2 == w.rank() * w.h, s.to_string());
    CHECK(grading_of(p)->rmax + 2 == w.h);
  }
}

TEST_CASE("Omega roots") {
  const OmegaRoots r22 = omega_roots(parse_spec("R(2,2)"));
  CHECK(r22.roots == rationals({{-1, 1}, {-2, 1}, {-2, 1}, {-3, 1}}));
  CHECK(r22.kappa == 1);
  const OmegaRoots s2 = omega_roots(parse_spec("S(2)"));
  CHECK(s2.roots == rationals({{-1, 1}, {-3, 2}, {-2, 1}}));
  CHECK(s2.kappa == 2);
  const OmegaRoots v1 = omega_roots(parse_spec("V(1)"));
  CHECK(v1.roots == rationals({{-1, 1}, {-3, 2}, {-2, 1}}));
  CHECK(v1.kappa == 2);
  CHECK_FALSE(omega_roots(parse_spec("AP(5,2,2)")).kappa);
  for (const auto& s : catalog_instances(10)) {
    if (s.family == Family::RootD) continue;
    const OmegaRoots r = omega_roots(s);
    if (r.kappa) CHECK_MESSAGE(static_cast<int>(r.roots.size()) == build(s).poset.size(), s.to_string());
  }
  CHECK_THROWS_AS(omega_roots(parse_spec("Phi(D,4)")), NoProductFormula);
}

TEST_CASE("order polynomial roots reproduce brute-force counts") {
  for (const auto& s : catalog_instances(7)) {
    if (s.family == Family::RootD) continue;
    const OmegaRoots r = omega_roots(s);
    const Poset p = build(s).poset;
    for (int m = 0; m <= 3; ++m) {
      BigRational v = 1;
      for (const auto& a : r.roots) v *= (BigRational(m) - a) / (-a);
      CHECK_MESSAGE(v == BigRational(oracle::pp_count(p, m)), s.to_string(), " m=", m);
    }
  }
}
