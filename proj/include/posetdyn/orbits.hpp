#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace posetdyn {

/// Sorted, duplicate-free set of fixed-width integer states, each stored as a
/// byte string (entries must lie in 0..255). Lookups are binary searches, so
/// indices follow the lexicographic order of the states.
class StateSet {
 public:
  explicit StateSet(int width) : width_(width) {}

  void add(std::span<const int> state);
  /// Sorts and deduplicates; must be called before find()/decode().
  void finalize();

  std::size_t size() const noexcept { return count_; }
  int width() const noexcept { return width_; }
  std::vector<int> decode(std::size_t index) const;
  std::optional<std::size_t> find(std::span<const int> state) const;

 private:
  int compare_at(std::size_t index, std::span<const int> state) const;

  int width_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Raised when a supposed bijection maps a state outside the set or is not
/// injective on it. Always indicates an implementation bug.
class StateEscape : public std::logic_error {
  using std::logic_error::logic_error;
};

struct OrbitDecomposition {
  std::vector<std::uint64_t> orbit_sizes;          ///< in order of representatives
  std::vector<std::vector<int>> representatives;   ///< lexicographically least per orbit
  std::uint64_t total = 0;

  /// orbit size -> number of orbits of that size
  std::map<std::uint64_t, std::uint64_t> size_histogram() const;
  /// Order of the map on the whole set (lcm of the orbit sizes).
  std::uint64_t order() const;
};

/// Cycle decomposition of `step` on `states`. Each orbit is walked from its
/// least unvisited state, so representatives come out minimal and sorted.
template <class Step>
OrbitDecomposition orbits(const StateSet& states, Step&& step) {
  OrbitDecomposition out;
  const std::size_t n = states.size();
  std::vector<std::uint8_t> visited(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<int> rep = states.decode(start);
    std::vector<int> cur = rep;
    std::uint64_t length = 0;
    std::size_t index = start;
    while (true) {
      visited[index] = 1;
      ++length;
      cur = step(cur);
      const auto next = states.find(cur);
      if (!next) throw StateEscape("orbit sweep: step left the state set");
      if (*next == start) break;
      if (visited[*next]) throw StateEscape("orbit sweep: step is not injective");
      index = *next;
    }
    out.orbit_sizes.push_back(length);
    out.representatives.push_back(std::move(rep));
    out.total += length;
  }
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace posetdyn
