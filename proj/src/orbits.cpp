#include "posetdyn/orbits.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace posetdyn {

void StateSet::add(std::span<const int> state) {
  if (static_cast<int>(state.size()) != width_) throw std::invalid_argument("StateSet: wrong state width");
  for (int v : state) {
    if (v < 0 || v > 255) throw std::out_of_range("StateSet: entry outside 0..255");
    data_.push_back(static_cast<std::uint8_t>(v));
  }
  ++count_;
}

void StateSet::finalize() {
  const auto w = static_cast<std::size_t>(width_);
  if (w == 0) {
    count_ = std::min<std::size_t>(count_, 1);
    return;
  }
  std::vector<std::size_t> order(count_);
  std::iota(order.begin(), order.end(), 0);
  auto row = [&](std::size_t i) { return data_.data() + i * w; };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::memcmp(row(a), row(b), w) < 0;
  });
  std::vector<std::uint8_t> sorted;
  sorted.reserve(data_.size());
  std::size_t kept = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (kept > 0 && std::memcmp(sorted.data() + (kept - 1) * w, row(order[k]), w) == 0) continue;
    sorted.insert(sorted.end(), row(order[k]), row(order[k]) + w);
    ++kept;
  }
  data_ = std::move(sorted);
  count_ = kept;
}

std::vector<int> StateSet::decode(std::size_t index) const {
  const auto w = static_cast<std::size_t>(width_);
  std::vector<int> out(w);
  for (std::size_t i = 0; i < w; ++i) out[i] = data_[index * w + i];
  return out;
}

int StateSet::compare_at(std::size_t index, std::span<const int> state) const {
  const auto w = static_cast<std::size_t>(width_);
  for (std::size_t i = 0; i < w; ++i) {
    const int a = data_[index * w + i];
    if (a != state[i]) return a < state[i] ? -1 : 1;
  }
  return 0;
}

std::optional<std::size_t> StateSet::find(std::span<const int> state) const {
  if (static_cast<int>(state.size()) != width_) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = count_;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const int c = compare_at(mid, state);
    if (c == 0) return mid;
    if (c < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return std::nullopt;
}

std::map<std::uint64_t, std::uint64_t> OrbitDecomposition::size_histogram() const {
  std::map<std::uint64_t, std::uint64_t> hist;
  for (auto s : orbit_sizes) ++hist[s];
  return hist;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::uint64_t OrbitDecomposition::order() const {
  std::uint64_t l = 1;
  for (auto s : orbit_sizes) l = std::lcm(l, s);
  return l;
}

}  // namespace posetdyn
