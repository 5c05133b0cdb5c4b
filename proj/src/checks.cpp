#include "posetdyn/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "posetdyn/csp.hpp"
#include "posetdyn/dynamics.hpp"
#include "posetdyn/formulas.hpp"
#include "posetdyn/orbits.hpp"

namespace posetdyn {

using nlohmann::json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Skipped:
      return "SKIPPED";
    case Verdict::Error:
      return "ERROR";
  }
  return "?";
}

std::string CheckReport::to_json(bool timing) const {
  json j;
  j["schema"] = 1;
  j["check_id"] = check_id;
  j["spec"] = spec;
  j["params"] = params;
  j["verdict"] = posetdyn::to_string(verdict);
  j["conjecture"] = conjecture;
  j["detail"] = detail;
  j["witness"] = witness ? json::parse(*witness) : json(nullptr);
  if (timing) j["runtime_ms"] = runtime_ms;
  return j.dump();
}

namespace {

using States = std::vector<std::vector<int>>;

struct TooLarge {
  std::string what;
};

struct Outcome {
  bool pass = true;
  std::string detail;
  std::optional<json> witness;
  std::optional<bool> conjecture;  ///< per-instance override of the id's flag
};

FamilySpec spec_of(const CheckInstance& in) {
  if (in.spec.empty()) throw UsageError("this check needs a family spec");
  return parse_spec(in.spec);
}

int m_of(const CheckInstance& in) {
  const int m = in.m.value_or(1);
  if (m < 0) throw UsageError("--m must be nonnegative");
  return m;
}

std::string big_str(const BigInt& x) { return x.str(); }

States extension_states(const Poset& p, const CheckContext& ctx) {
  const BigInt count = count_linear_extensions(p);
  if (count > ctx.max_states) throw TooLarge{"e(P) = " + big_str(count)};
  States out;
  for_each_linear_extension(p, [&](std::span<const Element> seq) {
    out.emplace_back(seq.begin(), seq.end());
    return true;
  });
  return out;
}

std::uint64_t partition_count(const Poset& p, int m, const CheckContext& ctx) {
  const auto count = count_p_partitions(p, m, ctx.max_states);
  if (!count) throw TooLarge{"#PP^" + std::to_string(m) + " exceeds " + std::to_string(ctx.max_states)};
  return *count;
}

States partition_states(const Poset& p, int m, const CheckContext& ctx) {
  partition_count(p, m, ctx);
  States out;
  for_each_p_partition(p, m, [&](const PPartition& pi) {
    out.push_back(pi.vals);
    return true;
  });
  return out;
}

StateSet to_set(const States& states, int width) {
  StateSet set(width);
  for (const auto& s : states) set.add(s);
  set.finalize();
  return set;
}

json orbit_histogram(const OrbitDecomposition& orb) {
  json h = json::object();
  for (auto [size, count] : orb.size_histogram()) h[std::to_string(size)] = count;
  return h;
}

Outcome from_match(const MatchReport& r, const std::string& what) {
  Outcome out;
  if (r.holds) {
    out.detail = what + " on " + std::to_string(r.checked) + " states";
    return out;
  }
  out.pass = false;
  out.detail = what + " fails";
  out.witness = json{{"identity", what}, {"state", *r.witness}, {"lhs", r.lhs}, {"rhs", r.rhs}};
  return out;
}

Outcome pass(std::string detail) { return Outcome{true, std::move(detail), std::nullopt, std::nullopt}; }

Outcome fail(std::string detail, json witness) {
  return Outcome{false, std::move(detail), std::move(witness), std::nullopt};
}

template <class T>
Outcome compare(const T& closed, const T& brute, const std::string& what) {
  std::ostringstream a;
  std::ostringstream b;
  a << closed;
  b << brute;
  if (closed == brute) return pass(what + " = " + a.str());
  return fail(what + " mismatch", json{{"closed", a.str()}, {"brute", b.str()}});
}

Outcome compare_poly(const QPoly& closed, const QPoly& brute, const std::string& what) {
  if (closed == brute) return pass(what + " = " + closed.to_string());
  return fail(what + " mismatch", json{{"closed", closed.to_string()}, {"brute", brute.to_string()}});
}

// Runs each sub-check in turn and keeps the first failure.
Outcome all_of(const std::vector<std::function<Outcome()>>& parts) {
  std::vector<std::string> details;
  for (const auto& part : parts) {
    Outcome o = part();
    if (!o.pass) return o;
    details.push_back(o.detail);
  }
  std::string joined;
  for (std::size_t i = 0; i < details.size(); ++i) joined += (i ? "; " : "") + details[i];
  return pass(joined);
}

// ------------------------------------------------------------------ scopes

void require(bool ok, const std::string& spec, const std::string& scope) {
  if (!ok) throw UsageError(spec + " is outside the scope of this check (" + scope + ")");
}

/// Spec of the second member of a doppelganger pair, and whether it is dualized.
std::pair<FamilySpec, bool> doppel_partner(const FamilySpec& p) {
  switch (p.family) {
    case Family::Rectangle:
      require(p.params[0] <= p.params[1], p.to_string(), "R(a,b) with a <= b");
      return {FamilySpec{Family::Trapezoid, p.params}, true};
    case Family::DoubleStaircase:
      require(p.params[0] == 5 && p.params[1] == 0, p.to_string(), "DS(5,0)");
      return {FamilySpec{Family::RootH3, {}}, false};
    case Family::MinusculeD:
      return {FamilySpec{Family::RootI2, {2 * p.params[0]}}, false};
    default:
      break;
  }
  throw UsageError(p.to_string() + " has no doppelganger partner (R(a,b), DS(5,0), Min(D,l))");
}

enum class Target { Identity, Delta };

PosetMap target_map(const CatalogPoset& c, Target t) {
  if (t == Target::Delta) {
    if (!c.delta) throw std::logic_error(c.spec.to_string() + " has no delta attached");
    return *c.delta;
  }
  PosetMap id{std::vector<Element>(static_cast<std::size_t>(c.poset.size())), MapKind::Automorphism};
  for (int x = 0; x < c.poset.size(); ++x) id.perm[static_cast<std::size_t>(x)] = x;
  return id;
}

Target promotion_target(const FamilySpec& s) {
  switch (s.family) {
    case Family::Rectangle:
    case Family::Trapezoid:
    case Family::DoubleStaircase:
    case Family::MinusculeD:
    case Family::MinusculeE6:
    case Family::MinusculeE7:
      return Target::Identity;
    case Family::Staircase:
    case Family::ChainOfVs:
      return Target::Delta;
    default:
      break;
  }
  if (is_coincidental_root(s)) return Target::Delta;
  throw UsageError(s.to_string() + ": no promotion order claim");
}

// ------------------------------------------------------------------ identity suites

Outcome prop_pro_on(const Poset& p, const States& states) {
  const Promotion pro(p);
  const auto n = static_cast<std::uint64_t>(p.size());
  const StateMap evac = [&](const std::vector<int>& s) { return pro.evacuate(s); };
  const StateMap devac = [&](const std::vector<int>& s) { return pro.dual_evacuate(s); };
  const StateMap promote = [&](const std::vector<int>& s) { return pro.promote(s); };
  const StateMap ident = [](const std::vector<int>& s) { return s; };
  return all_of({
      [&] { return from_match(power_matches(states, evac, 2, ident), "Evac^2 = id"); },
      [&] { return from_match(power_matches(states, devac, 2, ident), "Evac*^2 = id"); },
      [&] {
        return from_match(
            maps_agree(
                states, [&](const std::vector<int>& s) { return pro.evacuate(pro.promote(s)); },
                [&](const std::vector<int>& s) { return pro.promote_inverse(pro.evacuate(s)); }),
            "Evac Pro = Pro^-1 Evac");
      },
      [&] {
        return from_match(power_matches(states, promote, n,
                                        [&](const std::vector<int>& s) {
                                          return pro.dual_evacuate(pro.evacuate(s));
                                        }),
                          "Pro^#P = Evac* Evac");
      },
  });
}

Outcome row_inverse_on(const Rowmotion& row, const States& states, const Poset& p) {
  std::vector<Element> last;
  for_each_linear_extension(p, [&](std::span<const Element> seq) {
    last.assign(seq.begin(), seq.end());
    return true;
  });
  return all_of({
      [&] {
        return from_match(
            maps_agree(
                states, [&](const std::vector<int>& s) { return row.rowmote_inverse(row.rowmote(s)); },
                [](const std::vector<int>& s) { return s; }),
            "Row^-1 Row = id");
      },
      [&] {
        return from_match(
            maps_agree(
                states, [&](const std::vector<int>& s) { return row.rowmote(s); },
                [&](const std::vector<int>& s) { return row.rowmote_along(s, last); }),
            "Row independent of the linear extension");
      },
  });
}

Outcome prop_row_on(const Poset& p, int m, const States& states) {
  const Rowmotion row(p, m);
  const int r = row.grading()->rmax;
  const StateMap rvac = [&](const std::vector<int>& s) { return row.rowvacuate(s); };
  const StateMap drvac = [&](const std::vector<int>& s) { return row.dual_rowvacuate(s); };
  const StateMap rowmote = [&](const std::vector<int>& s) { return row.rowmote(s); };
  const StateMap ident = [](const std::vector<int>& s) { return s; };
  return all_of({
      [&] { return row_inverse_on(row, states, p); },
      [&] { return from_match(power_matches(states, rvac, 2, ident), "Rvac^2 = id"); },
      [&] { return from_match(power_matches(states, drvac, 2, ident), "Rvac*^2 = id"); },
      [&] {
        return from_match(
            maps_agree(
                states, [&](const std::vector<int>& s) { return row.rowvacuate(row.rowmote(s)); },
                [&](const std::vector<int>& s) { return row.rowmote_inverse(row.rowvacuate(s)); }),
            "Rvac Row = Row^-1 Rvac");
      },
      [&] {
        return from_match(power_matches(states, rowmote, static_cast<std::uint64_t>(r + 2),
                                        [&](const std::vector<int>& s) {
                                          return row.dual_rowvacuate(row.rowvacuate(s));
                                        }),
                          "Row^(r+2) = Rvac* Rvac");
      },
  });
}

json poset_json(const Poset& p) {
  json covers = json::array();
  for (auto [a, b] : p.covers()) covers.push_back({a, b});
  return json{{"n", p.size()}, {"covers", covers}};
}

// ------------------------------------------------------------------ runners

Outcome run_formula_omega(const CheckInstance& in, const CheckContext& ctx) {
  const FamilySpec s = spec_of(in);
  const int m = m_of(in);
  const BigInt closed = omega_closed(s, m);
  const BigInt brute = partition_count(build(s).poset, m, ctx);
  return compare(closed, brute, "Omega(" + std::to_string(m) + ")");
}

Outcome run_formula_doppel(const CheckInstance& in, const CheckContext& ctx) {
  const FamilySpec s = spec_of(in);
  const int m = m_of(in);
  const auto [q, dual_q] = doppel_partner(s);
  const Poset qp = dual_q ? dual(build(q).poset) : build(q).poset;
  const BigInt closed = omega_closed(s, m);
  const BigInt brute_p = partition_count(build(s).poset, m, ctx);
  const BigInt brute_q = partition_count(qp, m, ctx);
  if (closed == brute_p && closed == brute_q) {
    return pass("Omega(" + std::to_string(m) + ") = " + big_str(closed) + " for both " + s.to_string() +
                " and " + q.to_string() + (dual_q ? "*" : ""));
  }
  return fail("doppelganger counts differ",
              json{{"closed", big_str(closed)}, {"brute_p", big_str(brute_p)}, {"brute_q", big_str(brute_q)}});
}

Outcome run_formula_catalan(const CheckInstance& in, const CheckContext&) {
  const FamilySpec s = spec_of(in);
  require(is_root_poset(s), s.to_string(), "root posets");
  const CatalogPoset c = build(s);
  const CoxeterData w = coxeter_data(s);
  const int r = grading_of(c.poset)->rmax;
  Outcome o = all_of({
      [&] { return compare(BigInt(cat_q(w).at_one()), count_order_ideals(c.poset), "#J = Cat(W;1)"); },
      [&] { return compare(w.h, r + 2, "h = r+2"); },
      [&] { return compare(c.poset.size(), w.rank() * w.h / 2, "#P = nh/2"); },
  });
  // Only the crystallographic case is a theorem here.
  const bool crystallographic = s.family != Family::RootI2 && s.family != Family::RootH3;
  if (!crystallographic) o.conjecture = true;
  return o;
}

Outcome run_formula_sym_pp(const CheckInstance& in, const CheckContext& ctx) {
  const FamilySpec s = spec_of(in);
  require(s.family == Family::DoubleStaircase && s.params[1] == 0, s.to_string(), "DS(n,0)");
  const int n = s.params[0];
  const int m = m_of(in);
  partition_count(build(FamilySpec{Family::Rectangle, {n, n}}).poset, m, ctx);
  const SymPPGenfns g = sym_pp_genfns(n, m);
  return all_of({
      [&] { return compare_poly(expand(sym_pp_product(n, m)), g.size, "sum q^|pi|"); },
      [&] { return compare_poly(expand(sym_pp_prime_product(n, m)), g.size_prime, "sum q^|pi|'"); },
      [&] { return compare_poly(omega_q(s, m), g.size_prime, "Omega_DS(n,0)(m;q) = sum q^|pi|'"); },
  });
}

Outcome run_formula_minuscule_q(const CheckInstance& in, const CheckContext& ctx) {
  const FamilySpec s = spec_of(in);
  require(is_minuscule(s), s.to_string(), "minuscule posets");
  const int m = m_of(in);
  const Poset p = build(s).poset;
  partition_count(p, m, ctx);
  return all_of({
      [&] { return compare_poly(expand(minuscule_product(p, m)), size_genfn(p, m), "F_P(m;q)"); },
      [&] { return compare_poly(size_genfn(dual(p), m), size_genfn(p, m), "F_P* = F_P"); },
      [&] {
        extension_states(p, ctx);
        return compare_poly(expand(minuscule_maj_product(p)), maj_genfn(p), "sum q^maj");
      },
  });
}

Outcome run_eq_limit(const CheckInstance& in, const CheckContext& ctx) {
  const FamilySpec s = spec_of(in);
  const Poset p = build(s).poset;
  const int n = p.size();
  std::vector<std::function<Outcome()>> parts;
  if (n <= 8) {
    parts.push_back([&] {
      extension_states(p, ctx);
      const int top = n * (n - 1) / 2;
      CycloProduct pref;
      for (int j = 1; j <= n; ++j) pref.numerator.push_back(j);
      const QPoly series = (expand(pref) * size_series(dual(p), top)).truncated(top);
      return compare_poly(series, maj_genfn(p), "(1-q)..(1-q^n) F_P*(inf;q) = sum q^maj");
    });
  }
  if (is_minuscule(s)) {
    parts.push_back([&] { return compare_poly(e_q(s), maj_genfn(p), "e(P;q) = sum q^maj"); });
  }
  if (is_coincidental_root(s)) {
    parts.push_back([&] {
      const QPoly closed = expand(e_q_product(s, 2));
      const QPoly series = root_promotion_series(coxeter_data(s), closed.degree() + 2);
      return compare_poly(closed, series, "kappa=2 e(P;q) = (1-q^2)..(1-q^nh) lim Cat(W,m;q)");
    });
  }
  if (s.family == Family::ChainOfVs) {
    parts.push_back([&] {
      return compare_poly(expand(e_q_product(s, 2)), expand(v_promotion_product(s.params[0])),
                          "kappa=2 e(V(n);q) = promotion polynomial");
    });
  }
  if (parts.empty()) throw UsageError(s.to_string() + ": no e(P;q) identity applies");
  return all_of(parts);
}

Outcome run_prop_pro(const CheckInstance& in, const CheckContext& ctx) {
  const Poset p = build(spec_of(in)).poset;
  return prop_pro_on(p, extension_states(p, ctx));
}

Outcome run_prop_row(const CheckInstance& in, const CheckContext& ctx) {
  const FamilySpec s = spec_of(in);
  const Poset p = build(s).poset;
  require(grading_of(p).has_value(), s.to_string(), "graded posets");
  const int m = m_of(in);
  return prop_row_on(p, m, partition_states(p, m, ctx));
}

Outcome run_prop_random(const CheckInstance&, const CheckContext& ctx) {
  std::mt19937_64 rng(ctx.seed);
  std::uniform_int_distribution<int> size(1, 7);
  std::uniform_real_distribution<double> density(0.1, 0.6);
  int graded = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Poset p = random_poset(rng, size(rng), density(rng));
    Outcome o = prop_pro_on(p, extension_states(p, ctx));
    for (int m = 1; o.pass && m <= 2; ++m) {
      const States states = partition_states(p, m, ctx);
      if (grading_of(p)) {
        o = prop_row_on(p, m, states);
      } else {
        o = row_inverse_on(Rowmotion(p, m), states, p);
      }
    }
    if (grading_of(p)) ++graded;
    if (!o.pass) {
      (*o.witness)["poset"] = poset_json(p);
      (*o.witness)["trial"] = trial;
      return o;
    }
  }
  return pass("50 random posets (seed " + std::to_string(ctx.seed) + ", " + std::to_string(graded) +
              " graded): promotion and rowmotion identities hold");
}

Outcome order_check(const CatalogPoset& c, const States& states, const StateMap& step, std::uint64_t k,
                    Target t, bool on_extensions, const std::string& what) {
  const PosetMap g = target_map(c, t);
  const StateMap action = [&](const std::vector<int>& s) {
    return on_extensions ? act_on_extension(g, s) : act_on_partition(g, s);
  };
  Outcome o = from_match(power_matches(states, step, k, action),
                         what + " = " + (t == Target::Delta ? "delta" : "id"));
  if (o.pass && !g.is_involution()) return fail("target automorphism is not an involution", json{{"perm", g.perm}});
  return o;
}

Outcome run_order_pro(const CheckInstance& in, const CheckContext& ctx) {
  const FamilySpec s = spec_of(in);
  const Target t = promotion_target(s);
  const CatalogPoset c = build(s);
  const Promotion pro(c.poset);
  return order_check(c, extension_states(c.poset, ctx),
                     [&](const std::vector<int>& x) { return pro.promote(x); },
                     static_cast<std::uint64_t>(c.poset.size()), t, true, "Pro^#P");
}

Outcome row_order(const CheckInstance& in, const CheckContext& ctx, Target t) {
  const FamilySpec s = spec_of(in);
  const CatalogPoset c = build(s);
  const int m = m_of(in);
  const Rowmotion row(c.poset, m);
  require(row.graded(), s.to_string(), "graded posets");
  return order_check(c, partition_states(c.poset, m, ctx),
                     [&](const std::vector<int>& x) { return row.rowmote(x); },
                     static_cast<std::uint64_t>(row.grading()->rmax + 2), t, false, "Row^(r+2)");
}

Outcome run_order_row(const CheckInstance& in, const CheckContext& ctx) {
  const FamilySpec s = spec_of(in);
  if (is_minuscule(s)) return row_order(in, ctx, Target::Identity);
  require(is_coincidental_root(s), s.to_string(), "minuscule or coincidental root posets");
  return row_order(in, ctx, Target::Delta);
}

Outcome run_order_row_conj(const CheckInstance& in, const CheckContext& ctx) {
  const FamilySpec s = spec_of(in);
  if (s.family == Family::Trapezoid) {
    Outcome o = row_order(in, ctx, Target::Identity);
    if (m_of(in) <= 1) o.conjecture = false;  // the m = 1 case is settled
    return o;
  }
  require(s.family == Family::ChainOfVs, s.to_string(), "T(a,b) or V(n)");
  return row_order(in, ctx, Target::Delta);
}

Outcome run_evac_iota(const CheckInstance& in, const CheckContext& ctx) {
  const FamilySpec s = spec_of(in);
  require(is_minuscule(s), s.to_string(), "minuscule posets");
  const CatalogPoset c = build(s);
  const Promotion pro(c.poset);
  return from_match(maps_agree(
                        extension_states(c.poset, ctx),
                        [&](const std::vector<int>& x) { return pro.evacuate(x); },
                        [&](const std::vector<int>& x) { return iota_star_extension(*c.iota, x); }),
                    "Evac(L) = iota(L)*");
}

Outcome run_rvac_iota(const CheckInstance& in, const CheckContext& ctx) {
  const FamilySpec s = spec_of(in);
  require(is_minuscule(s), s.to_string(), "minuscule posets");
  const CatalogPoset c = build(s);
  const int m = m_of(in);
  const Rowmotion row(c.poset, m);
  return from_match(maps_agree(
                        partition_states(c.poset, m, ctx),
                        [&](const std::vector<int>& x) { return row.rowvacuate(x); },
                        [&](const std::vector<int>& x) { return iota_star_partition(*c.iota, x, m); }),
                    "Rvac(pi) = iota(pi)*");
}

Outcome csp_outcome(const OrbitDecomposition& orb, const CspClaim& claim) {
  QPoly f;
  try {
    f = expand(claim.product);
  } catch (const NotPolynomial& e) {
    Outcome o = fail("CSP polynomial is not a polynomial",
                     json{{"product", claim.product.to_string()}, {"factor", e.factor()}});
    o.conjecture = claim.conjecture;
    return o;
  }
  const CspVerdict v = csp_check(orb, claim.order, f);
  Outcome o;
  o.conjecture = claim.conjecture;
  o.pass = v.passed() && f.has_nonnegative_coeffs();
  o.detail = v.summary() + " |X|=" + std::to_string(orb.total) + " f=" + f.to_string();
  if (!f.has_nonnegative_coeffs()) o.detail += " (negative coefficient)";
  if (!o.pass) {
    json w{{"orbits", orbit_histogram(orb)}, {"f", f.to_string()}, {"status", to_string(v.status)}};
    if (v.failing_k) {
      w["k"] = *v.failing_k;
      w["fixed_points"] = v.fixed_points.str();
      w["f_at_zeta_k"] = v.f_value.to_string("z");
    }
    o.witness = w;
  }
  return o;
}

Outcome csp_pro(const CheckInstance& in, const CheckContext& ctx, const std::function<bool(const FamilySpec&)>& scope,
                const std::string& scope_text) {
  const FamilySpec s = spec_of(in);
  require(scope(s), s.to_string(), scope_text);
  const auto claim = promotion_csp_claim(s);
  require(claim.has_value(), s.to_string(), scope_text);
  const Poset p = build(s).poset;
  const Promotion pro(p);
  const StateSet set = to_set(extension_states(p, ctx), p.size());
  return csp_outcome(orbits(set, [&](const std::vector<int>& x) { return pro.promote(x); }), *claim);
}

Outcome csp_row(const CheckInstance& in, const CheckContext& ctx, const std::function<bool(const FamilySpec&)>& scope,
                const std::string& scope_text) {
  const FamilySpec s = spec_of(in);
  require(scope(s), s.to_string(), scope_text);
  const int m = m_of(in);
  const auto claim = rowmotion_csp_claim(s, m);
  require(claim.has_value(), s.to_string(), scope_text);
  const Poset p = build(s).poset;
  const Rowmotion row(p, m);
  const StateSet set = to_set(partition_states(p, m, ctx), p.size());
  return csp_outcome(orbits(set, [&](const std::vector<int>& x) { return row.rowmote(x); }), *claim);
}

Outcome symclass(const CheckInstance& in, const CheckContext& ctx, Family family, SymClass cls) {
  const FamilySpec s = spec_of(in);
  require(s.family == family && (family != Family::DoubleStaircase || s.params[1] == 0), s.to_string(),
          "DS(n,0), Phi(A,n) or Phi(B,n) as named by the check");
  const int n = s.params[0];
  const int m = m_of(in);
  int side = n;
  int height = m;
  if (cls == SymClass::RowTranspose) side = n + 1, height = 2 * m;
  if (cls == SymClass::SymmetricRowPeriodic) side = 2 * n, height = 2 * m;
  partition_count(build(FamilySpec{Family::Rectangle, {side, side}}).poset, height, ctx);
  const BigInt target = partition_count(build(s).poset, m, ctx);
  return compare(BigInt(symclass_fixed_count(n, m, cls)), target, "fixed-point count vs #PP^m");
}

std::map<std::uint64_t, std::uint64_t> histogram_of(const StateSet& set, const StateMap& step) {
  return orbits(set, step).size_histogram();
}

Outcome doppel_orbits(const CheckInstance& in, const CheckContext& ctx, bool rowmotion) {
  const FamilySpec s = spec_of(in);
  const auto [q, dual_q] = doppel_partner(s);
  const Poset pp = build(s).poset;
  const Poset qp = dual_q ? dual(build(q).poset) : build(q).poset;
  std::map<std::uint64_t, std::uint64_t> hp;
  std::map<std::uint64_t, std::uint64_t> hq;
  const int m = m_of(in);
  if (rowmotion) {
    const Rowmotion rp(pp, m);
    const Rowmotion rq(qp, m);
    hp = histogram_of(to_set(partition_states(pp, m, ctx), pp.size()),
                      [&](const std::vector<int>& x) { return rp.rowmote(x); });
    hq = histogram_of(to_set(partition_states(qp, m, ctx), qp.size()),
                      [&](const std::vector<int>& x) { return rq.rowmote(x); });
  } else {
    const Promotion pro_p(pp);
    const Promotion pro_q(qp);
    hp = histogram_of(to_set(extension_states(pp, ctx), pp.size()),
                      [&](const std::vector<int>& x) { return pro_p.promote(x); });
    hq = histogram_of(to_set(extension_states(qp, ctx), qp.size()),
                      [&](const std::vector<int>& x) { return pro_q.promote(x); });
  }
  auto hist_json = [](const std::map<std::uint64_t, std::uint64_t>& h) {
    json j = json::object();
    for (auto [k, v] : h) j[std::to_string(k)] = v;
    return j;
  };
  Outcome o;
  if (hp == hq) {
    o = pass("orbit sizes agree: " + hist_json(hp).dump());
  } else {
    o = fail("orbit sizes differ", json{{"p", hist_json(hp)}, {"q", hist_json(hq)}});
  }
  if (rowmotion) o.conjecture = m > 1;
  return o;
}

Outcome run_models_stanley_thomas(const CheckInstance& in, const CheckContext& ctx) {
  const FamilySpec s = spec_of(in);
  require(s.family == Family::Rectangle, s.to_string(), "R(a,b)");
  const int a = s.params[0];
  const int b = s.params[1];
  const Poset p = build(s).poset;
  const Rowmotion row(p, 1);
  const States states = partition_states(p, 1, ctx);
  std::vector<std::vector<int>> words;
  for (const auto& x : states) {
    const SymmetryWord w = stanley_thomas(a, b, x);
    if (std::count(w.bits.begin(), w.bits.end(), 1) != a) return fail("word weight is not a", json{{"state", x}});
    if (stanley_thomas_inverse(a, b, w) != x) return fail("inverse does not recover the ideal", json{{"state", x}});
    if (stanley_thomas(a, b, row.rowmote(x)) != rotate(w)) {
      return fail("Row does not match left rotation", json{{"state", x}, {"word", w.bits}});
    }
    words.push_back(w.bits);
  }
  std::sort(words.begin(), words.end());
  if (std::adjacent_find(words.begin(), words.end()) != words.end()) return fail("two ideals share a word", json{});
  return pass("bijection with weight-" + std::to_string(a) + " words, Row = left rotation, on " +
              std::to_string(states.size()) + " ideals");
}

Outcome run_models_matching(const CheckInstance& in, const CheckContext& ctx) {
  const FamilySpec s = spec_of(in);
  require(s.family == Family::Rectangle && s.params[0] == 2, s.to_string(), "R(2,n)");
  const int n = s.params[1];
  const Poset p = build(s).poset;
  const Promotion pro(p);
  const States states = extension_states(p, ctx);
  std::vector<Matching> seen;
  for (const auto& x : states) {
    const Matching mt = matching_model(n, x);
    if (!mt.is_noncrossing()) return fail("matching is crossing", json{{"state", x}});
    if (matching_model_inverse(n, mt) != x) return fail("inverse does not recover L", json{{"state", x}});
    if (matching_model(n, pro.promote(x)) != rotate(mt)) {
      return fail("Pro does not match rotation", json{{"state", x}});
    }
    seen.push_back(mt);
  }
  std::sort(seen.begin(), seen.end(), [](const Matching& u, const Matching& v) { return u.pairs < v.pairs; });
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i] == seen[i - 1]) return fail("two extensions share a matching", json{});
  }
  return pass("bijection onto noncrossing matchings, Pro = rotation, on " + std::to_string(states.size()) +
              " extensions");
}

Outcome run_positivity(const CheckInstance& in, const CheckContext&) {
  const FamilySpec s = spec_of(in);
  const OmegaRoots roots = omega_roots(s);
  require(roots.kappa.has_value(), s.to_string(), "families with kappa defined");
  const int m = m_of(in);
  const Poset p = build(s).poset;
  QPoly om;
  QPoly eq;
  const auto not_poly = [&](const char* which, const NotPolynomial& e) {
    return fail(std::string(which) + " is not a polynomial",
                json{{"product", which}, {"kappa", *roots.kappa}, {"factor", e.factor()}, {"reason", e.what()}});
  };
  try {
    om = omega_q(s, m);
  } catch (const NotPolynomial& e) {
    return not_poly("Omega(m;q)", e);
  }
  try {
    eq = e_q(s);
  } catch (const NotPolynomial& e) {
    return not_poly("e(P;q)", e);
  }
  if (!om.has_nonnegative_coeffs()) return fail("Omega(m;q) has a negative coefficient", json{{"poly", om.to_string()}});
  if (!eq.has_nonnegative_coeffs()) return fail("e(P;q) has a negative coefficient", json{{"poly", eq.to_string()}});
  if (BigInt(om.at_one()) != omega_closed(s, m)) return fail("Omega(m;1) != Omega(m)", json{{"poly", om.to_string()}});
  if (eq.at_one() != count_linear_extensions(p)) return fail("e(P;1) != e(P)", json{{"poly", eq.to_string()}});
  return pass("kappa=" + std::to_string(*roots.kappa) + " Omega(m;q)=" + om.to_string() + " e(P;q)=" + eq.to_string());
}

Outcome run_cat_vs_omegaq(const CheckInstance& in, const CheckContext&) {
  const FamilySpec s = spec_of(in);
  require(is_coincidental_root(s), s.to_string(), "coincidental root posets");
  const int m = m_of(in);
  return compare_poly(cat_multi_q(coxeter_data(s), m), expand(omega_q_product(s, m, 2)),
                      "Cat(W,m;q) vs kappa=2 Omega(m;q)");
}

// ------------------------------------------------------------------ registry

struct Entry {
  CheckInfo info;
  std::function<Outcome(const CheckInstance&, const CheckContext&)> run;
};

std::vector<CheckInstance> grid(const std::vector<std::string>& specs, std::vector<int> ms = {}) {
  std::vector<CheckInstance> out;
  for (const auto& s : specs) {
    if (ms.empty()) {
      out.push_back({s, std::nullopt});
    } else {
      for (int m : ms) out.push_back({s, m});
    }
  }
  return out;
}

std::vector<std::string> names(const std::vector<FamilySpec>& specs) {
  std::vector<std::string> out;
  for (const auto& s : specs) out.push_back(s.to_string());
  return out;
}

std::vector<std::string> graded_names(const std::vector<FamilySpec>& specs) {
  std::vector<std::string> out;
  for (const auto& s : specs) {
    if (grading_of(build(s).poset)) out.push_back(s.to_string());
  }
  return out;
}

std::vector<std::string> kappa_names(const std::vector<FamilySpec>& specs) {
  std::vector<std::string> out;
  for (const auto& s : specs) {
    if (s.family == Family::RootD) continue;
    if (omega_roots(s).kappa) out.push_back(s.to_string());
  }
  return out;
}

const std::vector<std::string> kMinusculeSmall = {"R(1,1)", "R(2,2)", "R(2,3)", "R(3,3)", "DS(2,0)", "DS(3,0)",
                                                  "Min(D,3)", "Min(D,4)", "Min(E6)"};
const std::vector<std::string> kCoincidentalSmall = {"Phi(A,1)", "Phi(A,2)", "Phi(A,3)", "Phi(B,2)",
                                                     "Phi(B,3)", "Phi(C,2)", "Phi(I2,3)", "Phi(I2,4)",
                                                     "Phi(I2,5)", "Phi(I2,6)", "Phi(H3)"};

std::vector<Entry> make_registry() {
  const auto small = catalog_instances(8);
  const std::vector<std::string> doppel = {"R(1,1)", "R(1,2)", "R(1,3)", "R(2,2)", "R(2,3)", "R(3,3)",
                                           "DS(5,0)", "Min(D,1)", "Min(D,2)", "Min(D,3)", "Min(D,4)"};
  std::vector<std::string> st;
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) st.push_back("R(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  std::vector<std::string> with_e7 = kMinusculeSmall;
  with_e7.push_back("Min(E7)");
  std::vector<Entry> r;
  auto add = [&](std::string id, bool conj, bool uses_m, std::string desc, std::string growth,
                 std::vector<CheckInstance> g, std::function<Outcome(const CheckInstance&, const CheckContext&)> f,
                 bool needs_spec = true) {
    r.push_back({CheckInfo{std::move(id), conj, uses_m, needs_spec, std::move(desc), std::move(growth), std::move(g)},
                 std::move(f)});
  };
  const std::string pp_growth = "#PP^m(P) = Omega_P(m), polynomial in m of degree #P";
  const std::string lin_growth = "#L(P) = e(P), up to (#P)!";

  add("prop-pro", false, false, "Evac, Evac* involutions; Evac Pro = Pro^-1 Evac; Pro^#P = Evac* Evac",
      lin_growth, grid(names(small)), run_prop_pro);
  add("prop-row", false, true, "Rvac, Rvac* involutions; Rvac Row = Row^-1 Rvac; Row^(r+2) = Rvac* Rvac",
      pp_growth, grid(graded_names(small), {1, 2, 3}), run_prop_row);
  add("prop-random", false, false, "both identity suites on 50 seeded random posets (#P <= 7)",
      "at most 7! extensions and 3^7 P-partitions per poset", {CheckInstance{"", std::nullopt}}, run_prop_random,
      false);
  add("order-pro", false, false, "Pro^#P is the identity, or delta where the family carries one", lin_growth,
      grid({"R(1,1)", "R(1,2)", "R(1,3)", "R(2,2)", "R(2,3)", "R(3,3)", "T(2,2)", "T(2,3)", "DS(1,0)", "DS(1,1)", "DS(2,0)",
            "DS(2,1)", "DS(2,2)", "DS(3,0)", "DS(3,1)", "DS(3,2)", "DS(3,3)", "Min(D,1)", "Min(D,2)", "Min(D,3)", "Min(D,4)", "Min(D,5)", "DS(4,0)",
            "Min(E6)", "Min(E7)", "S(2)", "S(3)", "Phi(A,2)", "Phi(A,3)", "Phi(B,2)", "Phi(B,3)", "Phi(I2,2)",
            "Phi(I2,3)", "Phi(I2,4)", "Phi(I2,5)", "Phi(I2,6)", "Phi(H3)", "V(1)", "V(2)"}),
      run_order_pro);
  {
    std::vector<std::string> specs = kMinusculeSmall;
    specs.push_back("Min(E7)");
    specs.insert(specs.end(), kCoincidentalSmall.begin(), kCoincidentalSmall.end());
    add("order-row", false, true, "Row^(r+2) is the identity (minuscule) or delta (coincidental root posets)",
        pp_growth, grid(specs, {1, 2, 3}), run_order_row);
  }
  add("order-row-conj", true, true, "Row^(r+2) = id on trapezoids, = delta on V(n)", pp_growth,
      grid({"T(2,2)", "T(2,3)", "T(3,3)", "T(2,4)", "V(1)", "V(2)", "V(3)"}, {1, 2, 3}), run_order_row_conj);
  add("evac-iota", false, false, "Evac(L) = iota(L)* on minuscule posets", lin_growth,
      grid({"R(2,2)", "R(2,3)", "R(2,4)", "R(3,3)", "R(3,4)", "R(2,6)", "DS(3,0)", "DS(4,0)", "Min(D,3)",
            "Min(D,4)", "Min(D,6)", "Min(E6)", "R(4,4)", "Min(E7)"}),
      run_evac_iota);
  add("rvac-iota", false, true, "Rvac(pi) = iota(pi)* on minuscule posets", pp_growth,
      grid({"R(2,2)", "R(2,3)", "R(2,4)", "R(3,3)", "DS(3,0)", "Min(D,3)", "Min(D,4)", "Min(E6)"}, {1, 2, 3}),
      run_rvac_iota);
  add("csp-pro-minuscule", false, false, "(L(P), Pro, sum q^maj) cyclic sieving, P minuscule", lin_growth,
      grid({"R(2,2)", "R(2,3)", "R(2,4)", "R(3,3)", "R(3,4)", "DS(3,0)", "DS(4,0)", "Min(D,3)", "Min(D,4)",
            "Min(E6)", "R(4,4)", "Min(E7)"}),
      [](const CheckInstance& in, const CheckContext& ctx) {
        return csp_pro(in, ctx, [](const FamilySpec& s) { return is_minuscule(s); }, "minuscule posets");
      });
  add("csp-pro-root", true, false, "(L(Phi+), Pro, kappa=2 e(P;q)) cyclic sieving, order nh", lin_growth,
      grid(kCoincidentalSmall),
      [](const CheckInstance& in, const CheckContext& ctx) {
        return csp_pro(in, ctx, [](const FamilySpec& s) { return is_coincidental_root(s); },
                       "coincidental root posets");
      });
  add("csp-pro-v", true, false, "(L(V(n)), Pro, V(n) promotion polynomial) cyclic sieving, order 6n", lin_growth,
      grid({"V(1)", "V(2)", "V(3)"}),
      [](const CheckInstance& in, const CheckContext& ctx) {
        return csp_pro(in, ctx, [](const FamilySpec& s) { return s.family == Family::ChainOfVs; }, "V(n)");
      });
  add("csp-pro-ds", true, false, "(L(DS(n,k)), Pro, DS promotion polynomial) cyclic sieving, 1 <= k <= n",
      lin_growth, grid({"DS(1,1)", "DS(2,1)", "DS(2,2)", "DS(3,1)", "DS(3,2)", "DS(3,3)"}),
      [](const CheckInstance& in, const CheckContext& ctx) {
        return csp_pro(in, ctx,
                       [](const FamilySpec& s) { return s.family == Family::DoubleStaircase && s.params[1] >= 1; },
                       "DS(n,k) with k >= 1");
      });
  add("csp-row-minuscule", true, true, "(PP^m(P), Row, F_P(m;q)) cyclic sieving, P minuscule", pp_growth,
      grid(with_e7, {1, 2, 3}),
      [](const CheckInstance& in, const CheckContext& ctx) {
        return csp_row(in, ctx, [](const FamilySpec& s) { return is_minuscule(s); }, "minuscule posets");
      });
  add("csp-row-root", true, true, "(PP^m(Phi+), Row, Cat(W,m;q)) cyclic sieving, order 2h", pp_growth,
      grid(kCoincidentalSmall, {1, 2, 3}),
      [](const CheckInstance& in, const CheckContext& ctx) {
        return csp_row(in, ctx, [](const FamilySpec& s) { return is_coincidental_root(s); },
                       "coincidental root posets");
      });
  add("csp-row-v", true, true, "(PP^m(V(n)), Row, V(n) rowmotion polynomial) cyclic sieving, order 2(n+2)",
      pp_growth, grid({"V(1)", "V(2)", "V(3)"}, {1, 2, 3}),
      [](const CheckInstance& in, const CheckContext& ctx) {
        return csp_row(in, ctx, [](const FamilySpec& s) { return s.family == Family::ChainOfVs; }, "V(n)");
      });
  add("formula-omega", false, true, "closed-form Omega_P(m) equals the P-partition count", pp_growth,
      grid(names(small), {0, 1, 2, 3}), run_formula_omega);
  add("formula-doppel", false, true, "doppelganger pairs share Omega(m), both counted by brute force",
      pp_growth, grid(doppel, {0, 1, 2, 3}), run_formula_doppel);
  add("formula-catalan", false, false, "#J(Phi+) = Cat(W;1), h = r+2, #Phi+ = nh/2", "number of antichains",
      grid({"Phi(A,1)", "Phi(A,2)", "Phi(A,3)", "Phi(A,4)", "Phi(B,2)", "Phi(B,3)", "Phi(C,2)", "Phi(C,3)",
            "Phi(D,2)", "Phi(D,3)", "Phi(D,4)", "Phi(G2)", "Phi(I2,2)", "Phi(I2,5)", "Phi(I2,8)", "Phi(H3)"}),
      run_formula_catalan);
  add("formula-sym-pp", false, true, "both symmetric plane partition generating functions", pp_growth,
      grid({"DS(1,0)", "DS(2,0)", "DS(3,0)"}, {0, 1, 2, 3}), run_formula_sym_pp);
  add("formula-minuscule-q", false, true, "F_P(m;q) product, F_P = F_P*, maj generating function",
      pp_growth, grid(kMinusculeSmall, {1, 2, 3}), run_formula_minuscule_q);
  add("eq-limit", false, false, "e(P;q) against the maj series and the literal limits", lin_growth,
      grid({"R(2,2)", "R(2,3)", "S(3)", "T(2,3)", "DS(3,0)", "DS(3,1)", "Min(D,4)", "Min(E6)", "Phi(A,2)",
            "Phi(A,3)", "Phi(B,2)", "Phi(B,3)", "Phi(I2,5)", "Phi(H3)", "V(1)", "V(2)"}),
      run_eq_limit);
  add("symclass-sym", false, true, "#{Tr pi = pi in PP^m(n x n)} = #PP^m(DS(n,0))", pp_growth,
      grid({"DS(1,0)", "DS(2,0)", "DS(3,0)"}, {0, 1, 2}),
      [](const CheckInstance& in, const CheckContext& ctx) {
        return symclass(in, ctx, Family::DoubleStaircase, SymClass::Symmetric);
      });
  add("symclass-a", false, true, "#{Row^(n+1) pi = Tr pi in PP^2m((n+1)^2)} = #PP^m(Phi+(A_n))", pp_growth,
      grid({"Phi(A,1)", "Phi(A,2)"}, {1}),
      [](const CheckInstance& in, const CheckContext& ctx) {
        return symclass(in, ctx, Family::RootA, SymClass::RowTranspose);
      });
  add("symclass-b", false, true, "#{Tr pi = pi, Row^2n pi = pi in PP^2m((2n)^2)} = #PP^m(Phi+(B_n))", pp_growth,
      grid({"Phi(B,1)", "Phi(B,2)"}, {1}),
      [](const CheckInstance& in, const CheckContext& ctx) {
        return symclass(in, ctx, Family::RootB, SymClass::SymmetricRowPeriodic);
      });
  add("doppel-pro", false, false, "doppelganger pairs have the same promotion orbit sizes", lin_growth,
      grid(doppel), [](const CheckInstance& in, const CheckContext& ctx) { return doppel_orbits(in, ctx, false); });
  add("doppel-row", true, true, "doppelganger pairs have the same rowmotion orbit sizes", pp_growth,
      grid(doppel, {1, 2}),
      [](const CheckInstance& in, const CheckContext& ctx) { return doppel_orbits(in, ctx, true); });
  add("models-stanley-thomas", false, false, "J(R(a,b)) <-> binary words, Row <-> left rotation",
      "C(a+b, a) ideals", grid(st), run_models_stanley_thomas);
  add("models-matching", false, false, "L(R(2,n)) <-> noncrossing matchings, Pro <-> rotation",
      "Catalan(n) extensions", grid({"R(2,1)", "R(2,2)", "R(2,3)", "R(2,4)", "R(2,5)"}), run_models_matching);
  {
    std::vector<CheckInstance> g;
    for (const auto& s : kappa_names(catalog_instances(10))) {
      for (int m = 0; m <= 3; ++m) g.push_back({s, m});
    }
    add("positivity", true, true, "Omega(m;q) and e(P;q) have nonnegative coefficients (observation)",
        "no enumeration; polynomial expansion only", g, run_positivity);
  }
  add("cat-vs-omegaq", true, true, "Cat(W,m;q) against the kappa=2 Omega(m;q) (reported, not claimed)",
      "no enumeration", grid(kCoincidentalSmall, {1, 2, 3}), run_cat_vs_omegaq);
  return r;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> registry = make_registry();
  return registry;
}

const Entry& find_entry(const std::string& id) {
  for (const auto& e : entries()) {
    if (e.info.id == id) return e;
  }
  throw UsageError("unknown check id '" + id + "'");
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const CheckInfo& find_check(const std::string& id) { return find_entry(id).info; }

CheckReport run_check(const std::string& id, const CheckInstance& instance, const CheckContext& ctx) {
  const Entry& entry = find_entry(id);
  CheckReport report;
  report.check_id = id;
  report.conjecture = entry.info.conjecture;
  if (entry.info.needs_spec) {
    if (instance.spec.empty()) throw UsageError(id + " needs a family spec");
    report.spec = parse_spec(instance.spec).to_string();
  }
  if (entry.info.uses_m) report.params["m"] = std::to_string(instance.m.value_or(1));
  if (id == "prop-random") report.params["seed"] = std::to_string(ctx.seed);
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = entry.run(instance, ctx);
    report.verdict = o.pass ? Verdict::Pass : Verdict::Fail;
    report.detail = std::move(o.detail);
    if (o.witness) report.witness = o.witness->dump();
    if (o.conjecture) report.conjecture = *o.conjecture;
  } catch (const UsageError&) {
    throw;
  } catch (const TooLarge& t) {
    report.verdict = Verdict::Skipped;
    report.detail = "too large: " + t.what + " (max-states " + std::to_string(ctx.max_states) + ")";
  } catch (const std::exception& e) {
    report.verdict = Verdict::Error;
    report.detail = e.what();
  }
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<CheckReport> run_grid(const std::vector<std::string>& ids, const CheckContext& ctx, int jobs) {
  std::vector<std::pair<std::string, CheckInstance>> work;
  for (const auto& e : entries()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), e.info.id) == ids.end()) continue;
    for (const auto& inst : e.info.default_grid) work.emplace_back(e.info.id, inst);
  }
  for (const auto& id : ids) find_entry(id);
  std::vector<CheckReport> out(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      try {
        out[i] = run_check(work[i].first, work[i].second, ctx);
      } catch (const std::exception& e) {
        // A grid entry outside a check's scope is a registry bug, not a usage error.
        out[i].check_id = work[i].first;
        out[i].spec = work[i].second.spec;
        out[i].verdict = Verdict::Error;
        out[i].detail = e.what();
      }
    }
  };
  const int threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<FamilySpec> catalog_instances(int max_size) {
  std::vector<FamilySpec> out;
  auto add = [&](Family f, std::vector<int> params) {
    FamilySpec s{f, std::move(params)};
    try {
      validate(s);
    } catch (const ParameterError&) {
      return;
    }
    if (build(s).poset.size() <= max_size) out.push_back(s);
  };
  for (int a = 1; a <= max_size; ++a) {
    for (int b = a; a * b <= max_size; ++b) add(Family::Rectangle, {a, b});
  }
  for (int n = 1; n * (n + 1) / 2 <= max_size; ++n) add(Family::Staircase, {n});
  for (int a = 1; a <= max_size; ++a) {
    for (int b = a; a * b <= max_size; ++b) add(Family::Trapezoid, {a, b});
  }
  for (int n = 1; n * (n + 1) / 2 <= max_size; ++n) {
    for (int k = 0; k <= n; ++k) add(Family::DoubleStaircase, {n, k});
  }
  for (int d = 1; d <= max_size; ++d) {
    for (int l = 1; l <= max_size; ++l) {
      for (int M = l * d; M <= l * d + max_size; ++M) {
        int size = 0;
        for (int i = 1; i <= l; ++i) size += std::max(M - i * d, 0);
        if (size <= max_size && M - d >= 1) add(Family::ArithProg, {M, d, l});
      }
    }
  }
  for (int n = 1; n * (n + 1) / 2 <= max_size; ++n) add(Family::RootA, {n});
  for (int n = 2; n * n <= max_size; ++n) add(Family::RootB, {n});
  for (int n = 2; n * n <= max_size; ++n) add(Family::RootC, {n});
  for (int n = 2; n * (n - 1) <= max_size; ++n) add(Family::RootD, {n});
  add(Family::RootG2, {});
  for (int l = 2; l <= max_size; ++l) add(Family::RootI2, {l});
  add(Family::RootH3, {});
  for (int n = 1; 2 * n <= max_size; ++n) add(Family::MinusculeD, {n});
  add(Family::MinusculeE6, {});
  add(Family::MinusculeE7, {});
  for (int n = 1; 3 * n <= max_size; ++n) add(Family::ChainOfVs, {n});
  return out;
}

}  // namespace posetdyn
