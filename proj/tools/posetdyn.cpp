#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "posetdyn/catalog.hpp"
#include "posetdyn/checks.hpp"
#include "posetdyn/dynamics.hpp"
#include "posetdyn/formulas.hpp"
#include "posetdyn/orbits.hpp"

using namespace posetdyn;
using nlohmann::json;

namespace {

constexpr int kExitBreaking = 1;
constexpr int kExitUsage = 2;

std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
  return out.str();
}

// Echo the spec with a caret under the offending character.
void report_parse_error(const std::string& text, const ParseError& e) {
  std::cerr << "error: " << e.what() << "\n  " << text << "\n  " << std::string(e.position(), ' ') << "^\n";
}

int poset_info(const std::string& text, bool as_json) {
  const CatalogPoset c = build(text);
  const Poset& p = c.poset;
  const auto g = grading_of(p);
  json j;
  j["schema"] = 1;
  j["spec"] = c.spec.to_string();
  j["n"] = p.size();
  j["covers"] = p.covers().size();
  j["graded"] = g.has_value();
  if (g) {
    j["r"] = g->rmax;
    j["rank_sizes"] = g->rank_sizes();
  }
  j["delta"] = c.delta.has_value();
  j["iota"] = c.iota.has_value();
  if (is_root_poset(c.spec)) {
    const CoxeterData w = coxeter_data(c.spec);
    j["degrees"] = w.degrees;
    j["h"] = w.h;
  }
  try {
    const OmegaRoots roots = omega_roots(c.spec);
    j["kappa"] = roots.kappa ? json(*roots.kappa) : json(nullptr);
  } catch (const NoProductFormula&) {
    j["kappa"] = nullptr;
  }
  if (as_json) {
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << c.spec.to_string() << "\n  n=" << p.size() << " covers=" << p.covers().size() << "\n";
  if (g) {
    std::cout << "  graded, r=" << g->rmax << ", rank sizes (" << join(g->rank_sizes()) << ")\n";
  } else {
    std::cout << "  not graded\n";
  }
  std::cout << "  delta: " << (c.delta ? "yes" : "no") << ", iota: " << (c.iota ? "yes" : "no") << "\n";
  if (j.contains("degrees")) {
    std::cout << "  degrees (" << join(j["degrees"].get<std::vector<int>>()) << "), h=" << j["h"].get<int>() << "\n";
  }
  if (!j["kappa"].is_null()) std::cout << "  kappa=" << j["kappa"].get<int>() << "\n";
  return 0;
}

int orbit_report(const std::string& op, const std::string& text, int m, std::uint64_t max_states, bool as_json) {
  const CatalogPoset c = build(text);
  const Poset& p = c.poset;
  StateSet states(p.size());
  std::function<std::vector<int>(const std::vector<int>&)> step;
  std::optional<Promotion> pro;
  std::optional<Rowmotion> row;
  std::string too_large;
  if (op == "pro") {
    const BigInt count = count_linear_extensions(p);
    if (count > max_states) too_large = "e(P) = " + count.str();
    pro.emplace(p);
    step = [&](const std::vector<int>& x) { return pro->promote(x); };
  } else {
    if (m < 0) throw UsageError("--m must be nonnegative");
    if (!count_p_partitions(p, m, max_states)) too_large = "#PP^m exceeds " + std::to_string(max_states);
    row.emplace(p, m);
    step = [&](const std::vector<int>& x) { return row->rowmote(x); };
  }
  json j;
  j["schema"] = 1;
  j["map"] = op;
  j["spec"] = c.spec.to_string();
  if (op == "row") j["m"] = m;
  if (!too_large.empty()) {
    j["verdict"] = "SKIPPED";
    j["detail"] = "too large: " + too_large;
    if (as_json) {
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "SKIPPED " << j["detail"].get<std::string>() << "\n";
    }
    return 0;
  }
  if (pro) {
    for_each_linear_extension(p, [&](std::span<const Element> seq) {
      states.add(std::vector<int>(seq.begin(), seq.end()));
      return true;
    });
  } else {
    for_each_p_partition(p, m, [&](const PPartition& pi) {
      states.add(pi.vals);
      return true;
    });
  }
  states.finalize();
  const OrbitDecomposition orb = orbits(states, step);
  const std::uint64_t order = orb.order();
  // Confirm the order by iterating every state, not only from the orbit sizes.
  std::vector<std::vector<int>> all;
  for (std::size_t i = 0; i < states.size(); ++i) all.push_back(states.decode(i));
  const MatchReport verified = power_matches(all, step, order, [](const std::vector<int>& x) { return x; });
  if (!verified.holds) throw std::logic_error("orbit order failed to verify");

  j["total"] = orb.total;
  j["orbits"] = orb.orbit_sizes.size();
  j["order"] = order;
  json hist = json::object();
  for (auto [size, count] : orb.size_histogram()) hist[std::to_string(size)] = count;
  j["sizes"] = hist;
  json table = json::array();
  for (std::size_t i = 0; i < orb.orbit_sizes.size(); ++i) {
    table.push_back({{"size", orb.orbit_sizes[i]}, {"representative", orb.representatives[i]}});
  }
  j["table"] = table;
  if (as_json) {
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << (op == "pro" ? "Pro" : "Row") << " on " << c.spec.to_string();
  if (op == "row") std::cout << " (m=" << m << ")";
  std::cout << ": " << orb.total << " states, " << orb.orbit_sizes.size() << " orbits, order " << order
            << " (verified)\n";
  std::cout << "  size  representative\n";
  for (std::size_t i = 0; i < orb.orbit_sizes.size(); ++i) {
    std::cout << "  " << std::setw(4) << orb.orbit_sizes[i] << "  [" << join(orb.representatives[i], " ") << "]\n";
  }
  return 0;
}

int run_checks(const std::string& id, const std::string& spec, std::optional<int> m, const CheckContext& ctx,
               int jobs, bool timing) {
  std::vector<CheckReport> reports;
  if (id == "all") {
    if (!spec.empty()) throw UsageError("check all takes no spec");
    reports = run_grid({}, ctx, jobs);
  } else {
    const CheckInfo& info = find_check(id);
    if (!info.needs_spec && !spec.empty()) throw UsageError(id + " takes no spec");
    if (info.needs_spec && spec.empty()) {
      // no spec: the id's default grid
      reports = run_grid({id}, ctx, jobs);
    } else {
      reports.push_back(run_check(id, CheckInstance{spec, m}, ctx));
    }
  }
  bool breaking = false;
  for (const auto& r : reports) {
    std::cout << r.to_json(timing) << "\n";
    breaking = breaking || r.is_breaking();
  }
  return breaking ? kExitBreaking : 0;
}

int list_checks() {
  for (const auto& info : check_registry()) {
    json j{{"schema", 1},
           {"check_id", info.id},
           {"conjecture", info.conjecture},
           {"uses_m", info.uses_m},
           {"needs_spec", info.needs_spec},
           {"description", info.description},
           {"growth", info.growth},
           {"default_instances", info.default_grid.size()}};
    std::cout << j.dump() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"posetdyn: promotion, rowmotion, order polynomials and cyclic sieving on catalog posets"};
  app.require_subcommand(1);

  std::string spec;
  bool as_json = false;
  auto* poset = app.add_subcommand("poset", "inspect a catalog poset");
  poset->require_subcommand(1);
  auto* info = poset->add_subcommand("info", "element count, grading, rank sizes, delta/iota, degrees");
  info->add_option("spec", spec, "family spec, e.g. R(3,4), Phi(I2,5), Min(E6)")->required();
  info->add_flag("--json", as_json, "emit one JSON object");

  std::string op;
  int m = 1;
  std::uint64_t max_states = CheckContext{}.max_states;
  auto* orb = app.add_subcommand("orbits", "orbit decomposition of promotion or rowmotion");
  orb->add_option("map", op, "pro or row")->required()->check(CLI::IsMember({"pro", "row"}));
  orb->add_option("spec", spec, "family spec")->required();
  orb->add_option("--m", m, "height bound for rowmotion")->capture_default_str();
  orb->add_option("--max-states", max_states, "skip above this many states")->capture_default_str();
  orb->add_flag("--json", as_json, "emit one JSON object");

  std::string id;
  std::optional<int> check_m;
  CheckContext ctx;
  int jobs = 1;
  bool no_timing = false;
  auto* check = app.add_subcommand("check", "verify one instance, one check's default grid (no spec), or `all`");
  check->add_option("id", id, "check id (see `list`) or all")->required();
  check->add_option("spec", spec, "family spec");
  check->add_option("--m", check_m, "height bound (default 1)");
  check->add_option("--max-states", ctx.max_states, "skip instances above this many states")->capture_default_str();
  check->add_option("--seed", ctx.seed, "seed for randomized suites")->capture_default_str();
  check->add_option("--jobs", jobs, "worker threads for grid runs")->capture_default_str()->check(CLI::PositiveNumber);
  check->add_flag("--no-timing", no_timing, "omit runtime_ms for byte-stable output");
  check->add_flag("--json", as_json, "accepted for symmetry; output is always JSON lines");

  auto* list = app.add_subcommand("list", "check ids with scope and state-space growth");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*info) return poset_info(spec, as_json);
    if (*orb) return orbit_report(op, spec, m, max_states, as_json);
    if (*check) return run_checks(id, spec, check_m, ctx, jobs, !no_timing);
    if (*list) return list_checks();
  } catch (const ParseError& e) {
    report_parse_error(spec, e);
    return kExitUsage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBreaking;
  }
  return kExitUsage;
}
