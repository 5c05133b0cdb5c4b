#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "posetdyn/catalog.hpp"

namespace posetdyn {

enum class Verdict { Pass, Fail, Skipped, Error };
std::string to_string(Verdict v);

/// One verified instance. `witness` is a compact JSON document.
struct CheckReport {
  std::string check_id;
  std::string spec;
  std::map<std::string, std::string> params;
  Verdict verdict = Verdict::Pass;
  bool conjecture = false;
  std::string detail;
  std::optional<std::string> witness;
  double runtime_ms = 0;

  /// One JSON line; runtime is left out when `timing` is false so that output
  /// can be compared byte for byte.
  std::string to_json(bool timing = true) const;
  /// Theorem-backed failures and errors; conjecture findings never count.
  bool is_breaking() const noexcept {
    return verdict == Verdict::Error || (verdict == Verdict::Fail && !conjecture);
  }
};

struct CheckContext {
  std::uint64_t max_states = 1'000'000;
  std::uint64_t seed = 1;
};

/// An instance of a check: a family spec (empty for spec-free checks) and
/// an optional height.
struct CheckInstance {
  std::string spec;
  std::optional<int> m;
};

struct CheckInfo {
  std::string id;
  bool conjecture = false;
  bool uses_m = false;
  bool needs_spec = true;
  std::string description;
  /// How the state space grows, for choosing --max-states.
  std::string growth;
  std::vector<CheckInstance> default_grid;
};

/// Bad check id, spec outside the check's scope, or missing arguments.
class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// All checks in declaration order.
const std::vector<CheckInfo>& check_registry();
const CheckInfo& find_check(const std::string& id);

/// Runs one instance. Never throws for mathematical outcomes: a too-large
/// state space gives SKIPPED, an unexpected exception gives ERROR. Usage
/// problems (unknown id, spec out of scope) throw UsageError.
CheckReport run_check(const std::string& id, const CheckInstance& instance, const CheckContext& ctx);

/// Every default-grid instance of the selected checks (all when empty), run
/// on `jobs` threads; results come back in declaration order regardless.
std::vector<CheckReport> run_grid(const std::vector<std::string>& ids, const CheckContext& ctx,
                                  int jobs);

/// Catalog specs with at most `max_size` elements, in a fixed order.
std::vector<FamilySpec> catalog_instances(int max_size);

}  // namespace posetdyn
