// One PASS/FAIL line per acceptance criterion. Criteria 1-7 are theorem-backed
// and set the exit code; criterion 8 is an observation and only reports.

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "oracles.hpp"
#include "posetdyn/catalog.hpp"
#include "posetdyn/checks.hpp"
#include "posetdyn/csp.hpp"
#include "posetdyn/dynamics.hpp"
#include "posetdyn/formulas.hpp"
#include "posetdyn/orbits.hpp"

using namespace posetdyn;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

std::string instance_name(const CheckReport& r) {
  std::string s = r.check_id + " " + r.spec;
  if (auto it = r.params.find("m"); it != r.params.end()) s += " m=" + it->second;
  return s;
}

// Runs the default grids of `ids`, keeping the instances `keep` selects, and
// requires each kept report to satisfy `ok`.
Result grid(const std::vector<std::string>& ids, const std::function<bool(const CheckReport&)>& keep,
            const std::function<bool(const CheckReport&)>& ok) {
  Result out;
  int count = 0;
  std::vector<std::string> bad;
  for (const auto& r : run_grid(ids, CheckContext{}, jobs())) {
    if (!keep(r)) continue;
    ++count;
    if (!ok(r)) bad.push_back(instance_name(r) + " " + to_string(r.verdict));
  }
  out.pass = bad.empty() && count > 0;
  std::ostringstream d;
  d << count << " instances";
  if (!bad.empty()) {
    d << ", " << bad.size() << " not passing:";
    for (std::size_t i = 0; i < std::min<std::size_t>(bad.size(), 6); ++i) d << " [" << bad[i] << "]";
  }
  out.detail = d.str();
  return out;
}

Result all_pass(const std::vector<std::string>& ids) {
  return grid(ids, [](const CheckReport&) { return true; }, [](const CheckReport& r) { return r.verdict == Verdict::Pass; });
}

Result both(Result a, const Result& b) {
  a.pass = a.pass && b.pass;
  a.detail += "; " + b.detail;
  return a;
}

Result formula_agreement() {
  Result out;
  int cells = 0;
  for (const auto& s : catalog_instances(8)) {
    const Poset p = build(s).poset;
    for (int m = 0; m <= 3; ++m) {
      ++cells;
      try {
        if (omega_closed(s, m) != oracle::pp_count(p, m)) {
          out.pass = false;
          out.detail += " " + s.to_string() + "/m=" + std::to_string(m);
        }
      } catch (const std::exception& e) {
        out.pass = false;
        out.detail += " " + s.to_string() + ": " + e.what();
      }
    }
  }
  out.detail = std::to_string(cells) + " cells against (m+1)^n enumeration" + out.detail;
  return both(out, all_pass({"formula-omega"}));
}

Result csp_exactness() {
  Result out;
  const Poset r22 = build("R(2,2)").poset;
  const Rowmotion row(r22, 1);
  StateSet states(r22.size());
  for (const auto& v : oracle::labelings(r22, 1)) states.add(v);
  states.finalize();
  const auto orb = orbits(states, [&](const std::vector<int>& x) { return row.rowmote(x); });
  const CspVerdict v = csp_check(orb, 4, omega_q(parse_spec("R(2,2)"), 1));
  const std::vector<BigInt> expected = {2, 1, 2, 1};
  out.pass = v.passed() && v.orbit_poly == expected;
  out.detail = std::string("J(R(2,2)) Row ") + (out.pass ? "PASS 2+q+2q^2+q^3" : "FAIL");

  const std::vector<std::string> pro_specs = {"R(2,3)", "R(2,4)", "R(3,3)", "DS(3,0)", "Min(D,3)"};
  out = both(out, grid({"csp-pro-minuscule"},
                       [&](const CheckReport& r) {
                         return std::find(pro_specs.begin(), pro_specs.end(), r.spec) != pro_specs.end();
                       },
                       [](const CheckReport& r) { return r.verdict == Verdict::Pass; }));
  out = both(out, grid({"csp-row-minuscule"}, [](const CheckReport& r) { return r.spec == "R(2,2)" || r.spec == "R(2,3)"; },
                       [](const CheckReport& r) { return r.verdict == Verdict::Pass; }));
  // Conjecture ids only need to reach an exact verdict.
  out = both(out, grid({"csp-pro-root", "csp-pro-v", "csp-pro-ds", "csp-row-root", "csp-row-v"},
                       [](const CheckReport& r) {
                         auto it = r.params.find("m");
                         return it == r.params.end() || std::stoi(it->second) <= 2;
                       },
                       [](const CheckReport& r) { return r.verdict == Verdict::Pass || r.verdict == Verdict::Fail; }));
  // Every theorem-backed CSP instance passes.
  return both(out, all_pass({"csp-pro-minuscule", "csp-row-minuscule"}));
}

Result numerology() {
  Result out;
  int roots = 0;
  for (const auto& s : catalog_instances(40)) {
    if (!is_root_poset(s)) continue;
    ++roots;
    const auto g = grading_of(build(s).poset);
    if (!g || coxeter_data(s).h != g->rmax + 2) {
      out.pass = false;
      out.detail += " h mismatch " + s.to_string();
    }
  }
  int ideals = 0;
  for (const auto& text : {"Phi(A,1)", "Phi(A,2)", "Phi(A,3)", "Phi(A,4)", "Phi(B,2)", "Phi(B,3)", "Phi(C,2)",
                           "Phi(C,3)", "Phi(D,4)", "Phi(G2)"}) {
    const FamilySpec s = parse_spec(text);
    ++ideals;
    if (cat_q(coxeter_data(s)).at_one() != oracle::ideal_count(build(s).poset)) {
      out.pass = false;
      out.detail += std::string(" #J mismatch ") + text;
    }
  }
  out.detail = std::to_string(roots) + " root posets h = r+2, " + std::to_string(ideals) +
               " #J = Cat(W;1) by subset enumeration" + out.detail;
  return both(out, all_pass({"formula-catalan"}));
}

Result positivity() {
  Result out;
  int count = 0;
  std::vector<std::string> findings;
  for (const auto& r : run_grid({"positivity"}, CheckContext{}, jobs())) {
    ++count;
    if (r.verdict != Verdict::Pass) findings.push_back(instance_name(r) + " " + to_string(r.verdict) + " " + r.detail);
  }
  out.pass = findings.empty();
  out.detail = std::to_string(count) + " instances";
  if (!findings.empty()) {
    out.detail += ", " + std::to_string(findings.size()) + " findings:";
    for (const auto& f : findings) out.detail += " [" + f + "]";
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    bool observation;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "formula agreement", false, formula_agreement},
      {2, "identity suites", false, [] { return all_pass({"prop-random", "prop-pro", "prop-row"}); }},
      {3, "order theorems", false,
       [] {
         return both(all_pass({"order-pro", "order-row"}),
                     grid({"order-row-conj"}, [](const CheckReport& r) { return r.spec.rfind("V(", 0) == 0; },
                          [](const CheckReport& r) { return r.verdict == Verdict::Pass; }));
       }},
      {4, "CSP exactness", false, csp_exactness},
      {5, "models and iota formulas", false,
       [] { return all_pass({"models-stanley-thomas", "models-matching", "evac-iota", "rvac-iota"}); }},
      {6, "symmetry classes", false,
       [] { return all_pass({"formula-sym-pp", "symclass-sym", "symclass-a", "symclass-b"}); }},
      {7, "numerology", false, numerology},
      {8, "polynomial positivity observations", true, positivity},
  };
  bool breaking = false;
  for (const auto& c : criteria) {
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << c.number << " " << c.name << (c.observation ? " (observation)" : "")
              << ": " << r.detail << "\n";
    breaking = breaking || (!r.pass && !c.observation);
  }
  return breaking ? 1 : 0;
}
