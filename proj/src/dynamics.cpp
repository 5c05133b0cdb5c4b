#include "posetdyn/dynamics.hpp"

#include <algorithm>
#include <numeric>

namespace posetdyn {

// ---------------------------------------------------------------- promotion

Promotion::Promotion(Poset poset) : poset_(std::move(poset)), dual_(dual(poset_)) {}

void Promotion::toggle_in_place(std::vector<int>& seq, int i, const Poset& p) const {
  const auto a = static_cast<std::size_t>(i - 1);
  if (!p.comparable(seq[a], seq[a + 1])) std::swap(seq[a], seq[a + 1]);
}

std::vector<int> Promotion::toggle(std::vector<int> seq, int i) const {
  const int n = static_cast<int>(seq.size());
  if (i < 1 || i > n - 1) {
    throw std::out_of_range("toggle position " + std::to_string(i) + " outside 1.." +
                            std::to_string(n - 1));
  }
  toggle_in_place(seq, i, poset_);
  return seq;
}

std::vector<int> Promotion::promote(std::vector<int> seq) const {
  const int n = static_cast<int>(seq.size());
  for (int i = 1; i <= n - 1; ++i) toggle_in_place(seq, i, poset_);
  return seq;
}

std::vector<int> Promotion::promote_inverse(std::vector<int> seq) const {
  const int n = static_cast<int>(seq.size());
  for (int i = n - 1; i >= 1; --i) toggle_in_place(seq, i, poset_);
  return seq;
}

std::vector<int> Promotion::evacuate_in(std::vector<int> seq, const Poset& p) const {
  // Rightmost factor tau_{n-1}...tau_1 acts first.
  const int n = static_cast<int>(seq.size());
  for (int top = n - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) toggle_in_place(seq, i, p);
  }
  return seq;
}

std::vector<int> Promotion::evacuate(std::vector<int> seq) const {
  return evacuate_in(std::move(seq), poset_);
}

std::vector<int> Promotion::dual_evacuate(std::vector<int> seq) const {
  std::reverse(seq.begin(), seq.end());
  seq = evacuate_in(std::move(seq), dual_);
  std::reverse(seq.begin(), seq.end());
  return seq;
}

// ---------------------------------------------------------------- rowmotion

Rowmotion::Rowmotion(Poset poset, int m) : poset_(std::move(poset)), m_(m) {
  if (m < 0) throw std::invalid_argument("rowmotion height must be nonnegative");
  for_each_linear_extension(poset_, [&](std::span<const Element> seq) {
    order_.assign(seq.begin(), seq.end());
    return false;
  });
  grading_ = grading_of(poset_);
  if (grading_) levels_ = grading_->levels();
}

void Rowmotion::toggle_in_place(std::vector<int>& vals, Element p) const {
  int hi = m_;
  int lo = 0;
  for (Element y : poset_.upper_covers(p)) hi = std::min(hi, vals[y]);
  for (Element x : poset_.lower_covers(p)) lo = std::max(lo, vals[x]);
  vals[p] = hi + lo - vals[p];
}

std::vector<int> Rowmotion::toggle(std::vector<int> vals, Element p) const {
  if (p < 0 || p >= poset_.size()) throw std::out_of_range("toggle: no such element");
  toggle_in_place(vals, p);
  return vals;
}

std::vector<int> Rowmotion::rowmote(std::vector<int> vals) const {
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) toggle_in_place(vals, *it);
  return vals;
}

std::vector<int> Rowmotion::rowmote_along(std::vector<int> vals,
                                          std::span<const Element> order) const {
  if (!is_linear_extension(poset_, order)) {
    throw std::invalid_argument("rowmote_along: not a linear extension");
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) toggle_in_place(vals, *it);
  return vals;
}

std::vector<int> Rowmotion::rowmote_inverse(std::vector<int> vals) const {
  for (Element p : order_) toggle_in_place(vals, p);
  return vals;
}

const Grading& Rowmotion::require_grading() const {
  if (!grading_) throw GradingError("rowvacuation needs a graded poset");
  return *grading_;
}

std::vector<int> Rowmotion::rank_toggle(std::vector<int> vals, int i) const {
  const Grading& g = require_grading();
  if (i < 0 || i > g.rmax) throw std::out_of_range("rank toggle: no such rank");
  for (Element p : levels_[i]) toggle_in_place(vals, p);
  return vals;
}

std::vector<int> Rowmotion::rowvacuate(std::vector<int> vals) const {
  // (tau_r)(tau_{r-1} tau_r)...(tau_0 ... tau_r), rightmost factor first.
  const int r = require_grading().rmax;
  for (int bottom = 0; bottom <= r; ++bottom) {
    for (int i = r; i >= bottom; --i) {
      for (Element p : levels_[i]) toggle_in_place(vals, p);
    }
  }
  return vals;
}

std::vector<int> Rowmotion::dual_rowvacuate(std::vector<int> vals) const {
  require_grading();
  const Rowmotion on_dual(dual(poset_), m_);
  return complement(on_dual.rowvacuate(complement(std::move(vals), m_)), m_);
}

std::vector<int> complement(std::vector<int> vals, int m) {
  for (int& v : vals) v = m - v;
  return vals;
}

// ---------------------------------------------------------------- map actions

std::vector<int> act_on_extension(const PosetMap& g, std::span<const int> seq) {
  std::vector<int> out(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) out[i] = g(seq[i]);
  return out;
}

std::vector<int> act_on_partition(const PosetMap& g, std::span<const int> vals) {
  std::vector<int> out(vals.size());
  for (std::size_t x = 0; x < vals.size(); ++x) out[static_cast<std::size_t>(g(static_cast<int>(x)))] = vals[x];
  return out;
}

std::vector<int> iota_star_extension(const PosetMap& iota, std::span<const int> seq) {
  auto out = act_on_extension(iota, seq);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<int> iota_star_partition(const PosetMap& iota, std::span<const int> vals, int m) {
  return complement(act_on_partition(iota, vals), m);
}

std::vector<int> iterate(const StateMap& step, std::vector<int> state, std::uint64_t k) {
  for (std::uint64_t i = 0; i < k; ++i) state = step(state);
  return state;
}

MatchReport maps_agree(const std::vector<std::vector<int>>& states, const StateMap& lhs,
                       const StateMap& rhs) {
  MatchReport report;
  for (const auto& s : states) {
    ++report.checked;
    auto l = lhs(s);
    auto r = rhs(s);
    if (l != r) {
      report.holds = false;
      report.witness = s;
      report.lhs = std::move(l);
      report.rhs = std::move(r);
      return report;
    }
  }
  return report;
}

MatchReport power_matches(const std::vector<std::vector<int>>& states, const StateMap& step,
                          std::uint64_t k, const StateMap& target) {
  return maps_agree(
      states, [&](const std::vector<int>& s) { return iterate(step, s, k); }, target);
}

// ---------------------------------------------------------------- Stanley-Thomas

SymmetryWord rotate(const SymmetryWord& w, int steps) {
  SymmetryWord out = w;
  const int n = static_cast<int>(w.bits.size());
  if (n == 0) return out;
  const int s = ((steps % n) + n) % n;
  std::rotate(out.bits.begin(), out.bits.begin() + s, out.bits.end());
  return out;
}

namespace {

void check_rect_state(int a, int b, std::size_t size) {
  if (a < 1 || b < 1 || size != static_cast<std::size_t>(a) * static_cast<std::size_t>(b)) {
    throw WrongFamily("state does not live on R(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
}

}  // namespace

// Read right to left: positions 1..a flag the rows the maximal antichain of
// the ideal misses, positions a+1..a+b flag the columns it hits. Stored
// reversed so that rowmotion is a left rotation.
SymmetryWord stanley_thomas(int a, int b, std::span<const int> vals) {
  check_rect_state(a, b, vals.size());
  auto at = [&](int i, int j) { return vals[static_cast<std::size_t>((i - 1) * b + (j - 1))]; };
  SymmetryWord w{std::vector<int>(static_cast<std::size_t>(a + b), 0)};
  for (int i = 1; i <= a; ++i) w.bits[i - 1] = 1;
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) {
      if (at(i, j) > 1) throw WrongFamily("stanley_thomas needs height 1");
      const bool in_ideal = at(i, j) == 0;
      const bool right_out = j == b || at(i, j + 1) != 0;
      const bool down_out = i == a || at(i + 1, j) != 0;
      if (in_ideal && right_out && down_out) {
        w.bits[i - 1] = 0;
        w.bits[a + j - 1] = 1;
      }
    }
  }
  std::reverse(w.bits.begin(), w.bits.end());
  return w;
}

std::vector<int> stanley_thomas_inverse(int a, int b, const SymmetryWord& w) {
  if (static_cast<int>(w.bits.size()) != a + b) throw WrongFamily("word length is not a+b");
  std::vector<int> bits(w.bits.rbegin(), w.bits.rend());
  std::vector<int> rows;
  std::vector<int> cols;
  for (int i = 1; i <= a; ++i) {
    if (bits[i - 1] == 0) rows.push_back(i);
  }
  for (int j = b; j >= 1; --j) {
    if (bits[a + j - 1] == 1) cols.push_back(j);
  }
  if (rows.size() != cols.size()) throw std::invalid_argument("word does not have weight a");
  std::vector<int> vals(static_cast<std::size_t>(a * b), 1);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (int i = 1; i <= rows[k]; ++i) {
      for (int j = 1; j <= cols[k]; ++j) vals[static_cast<std::size_t>((i - 1) * b + (j - 1))] = 0;
    }
  }
  return vals;
}

// ---------------------------------------------------------------- matchings

bool Matching::is_noncrossing() const {
  for (const auto& [a, c] : pairs) {
    for (const auto& [b, d] : pairs) {
      if (a < b && b < c && c < d) return false;
    }
  }
  return true;
}

Matching rotate(const Matching& mt, int steps) {
  const int n2 = static_cast<int>(mt.pairs.size()) * 2;
  Matching out;
  if (n2 == 0) return out;
  auto move = [&](int x) { return (((x - 1 - steps) % n2) + n2) % n2 + 1; };
  for (auto [x, y] : mt.pairs) {
    int u = move(x);
    int v = move(y);
    if (u > v) std::swap(u, v);
    out.pairs.emplace_back(u, v);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

Matching matching_model(int n, std::span<const int> seq) {
  if (n < 1 || static_cast<int>(seq.size()) != 2 * n) throw WrongFamily("matching model needs R(2,n)");
  Matching out;
  std::vector<int> open;
  for (int t = 1; t <= 2 * n; ++t) {
    if (seq[static_cast<std::size_t>(t - 1)] < n) {
      open.push_back(t);
    } else {
      if (open.empty()) throw std::invalid_argument("not a linear extension of R(2,n)");
      out.pairs.emplace_back(open.back(), t);
      open.pop_back();
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

std::vector<int> matching_model_inverse(int n, const Matching& mt) {
  if (static_cast<int>(mt.pairs.size()) != n) throw WrongFamily("matching size is not n");
  std::vector<int> opener(static_cast<std::size_t>(2 * n + 1), -1);
  for (auto [x, y] : mt.pairs) {
    opener[static_cast<std::size_t>(x)] = 1;
    opener[static_cast<std::size_t>(y)] = 0;
  }
  std::vector<int> seq;
  int top = 0;
  int bottom = 0;
  for (int t = 1; t <= 2 * n; ++t) {
    if (opener[static_cast<std::size_t>(t)] < 0) throw std::invalid_argument("not a perfect matching");
    seq.push_back(opener[static_cast<std::size_t>(t)] == 1 ? top++ : n + bottom++);
  }
  return seq;
}

// ---------------------------------------------------------------- plane partitions

std::vector<int> transpose(int a, int b, std::span<const int> vals) {
  check_rect_state(a, b, vals.size());
  if (a != b) throw std::invalid_argument("transpose needs a square rectangle");
  std::vector<int> out(vals.size());
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) out[static_cast<std::size_t>(i * b + j)] = vals[static_cast<std::size_t>(j * b + i)];
  }
  return out;
}

std::vector<int> complement_rect(int a, int b, std::span<const int> vals, int m) {
  check_rect_state(a, b, vals.size());
  std::vector<int> out(vals.size());
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      out[static_cast<std::size_t>(i * b + j)] =
          m - vals[static_cast<std::size_t>((a - 1 - i) * b + (b - 1 - j))];
    }
  }
  return out;
}

namespace {

Poset rectangle(int a, int b) {
  std::vector<Cover> covers;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      if (j + 1 < b) covers.emplace_back(i * b + j, i * b + j + 1);
      if (i + 1 < a) covers.emplace_back(i * b + j, (i + 1) * b + j);
    }
  }
  return Poset(a * b, covers);
}

}  // namespace

std::uint64_t symclass_fixed_count(int n, int m, SymClass condition) {
  if (n < 1 || m < 0) throw std::invalid_argument("symclass_fixed_count: need n >= 1, m >= 0");
  std::uint64_t count = 0;
  switch (condition) {
    case SymClass::Symmetric: {
      for_each_p_partition(rectangle(n, n), m, [&](const PPartition& pi) {
        if (transpose(n, n, pi.vals) == pi.vals) ++count;
        return true;
      });
      break;
    }
    case SymClass::RowTranspose: {
      const int s = n + 1;
      const Rowmotion row(rectangle(s, s), 2 * m);
      for_each_p_partition(row.poset(), 2 * m, [&](const PPartition& pi) {
        auto v = pi.vals;
        for (int k = 0; k < n + 1; ++k) v = row.rowmote(std::move(v));
        if (v == transpose(s, s, pi.vals)) ++count;
        return true;
      });
      break;
    }
    case SymClass::SymmetricRowPeriodic: {
      const int s = 2 * n;
      const Rowmotion row(rectangle(s, s), 2 * m);
      for_each_p_partition(row.poset(), 2 * m, [&](const PPartition& pi) {
        if (transpose(s, s, pi.vals) != pi.vals) return true;
        auto v = pi.vals;
        for (int k = 0; k < 2 * n; ++k) v = row.rowmote(std::move(v));
        if (v == pi.vals) ++count;
        return true;
      });
      break;
    }
  }
  return count;
}

}  // namespace posetdyn
