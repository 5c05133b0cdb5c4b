#include "posetdyn/formulas.hpp"

#include <algorithm>
#include <functional>

namespace posetdyn {

namespace {

BigInt require_integer(const BigRational& value, const std::string& what) {
  if (denominator(value) != 1) {
    throw std::logic_error(what + ": product evaluated to a non-integer");
  }
  return numerator(value);
}

// kappa * x for a root-derived rational that must become an integer.
int scaled(const BigRational& x, int kappa) {
  const BigRational y = x * kappa;
  if (denominator(y) != 1) throw std::domain_error("kappa does not clear the root denominators");
  return static_cast<int>(numerator(y));
}

int resolve_kappa(const OmegaRoots& roots, std::optional<int> kappa, const FamilySpec& spec) {
  if (kappa) return *kappa;
  if (!roots.kappa) throw std::domain_error(spec.to_string() + ": kappa is undefined");
  return *roots.kappa;
}

}  // namespace

BigInt omega_closed(const FamilySpec& spec, int m) {
  if (m < 0) throw std::invalid_argument("omega_closed: m must be nonnegative");
  if (is_root_poset(spec)) {
    if (spec.family == Family::RootD && spec.params[0] > 3) {
      throw NoProductFormula(spec.to_string() + ": type D is not coincidental");
    }
    return require_integer(multi_catalan_at_one(coxeter_data(spec), m), spec.to_string());
  }
  const OmegaRoots roots = omega_roots(spec);
  BigRational value = 1;
  for (const auto& a : roots.roots) value *= (BigRational(m) - a) / (-a);
  return require_integer(value, spec.to_string());
}

CycloProduct omega_q_product(const FamilySpec& spec, int m, std::optional<int> kappa) {
  const OmegaRoots roots = omega_roots(spec);
  const int k = resolve_kappa(roots, kappa, spec);
  CycloProduct out;
  for (const auto& a : roots.roots) {
    out.numerator.push_back(k * m + scaled(-a, k));
    out.denominator.push_back(scaled(-a, k));
  }
  return out;
}

CycloProduct e_q_product(const FamilySpec& spec, std::optional<int> kappa) {
  const OmegaRoots roots = omega_roots(spec);
  const int k = resolve_kappa(roots, kappa, spec);
  CycloProduct out;
  for (std::size_t j = 1; j <= roots.roots.size(); ++j) out.numerator.push_back(static_cast<int>(j) * k);
  for (const auto& a : roots.roots) out.denominator.push_back(scaled(-a, k));
  return out;
}

QPoly omega_q(const FamilySpec& spec, int m) { return expand(omega_q_product(spec, m)); }
QPoly e_q(const FamilySpec& spec) { return expand(e_q_product(spec)); }

CycloProduct cat_product(const CoxeterData& w) { return cat_multi_product(w, 1); }

CycloProduct cat_multi_product(const CoxeterData& w, int m) {
  CycloProduct out;
  for (int j = 0; j < m; ++j) {
    for (int d : w.degrees) {
      out.numerator.push_back(w.h + d + 2 * j);
      out.denominator.push_back(d + 2 * j);
    }
  }
  return out;
}

QPoly cat_q(const CoxeterData& w) { return expand(cat_product(w)); }
QPoly cat_multi_q(const CoxeterData& w, int m) { return expand(cat_multi_product(w, m)); }

BigInt count_order_ideals(const Poset& poset) {
  // Ideals are in bijection with antichains (their maximal elements).
  const int n = poset.size();
  std::vector<Element> chosen;
  std::uint64_t count = 0;
  std::function<void(Element)> grow = [&](Element from) {
    ++count;
    for (Element x = from; x < n; ++x) {
      if (std::any_of(chosen.begin(), chosen.end(), [&](Element y) { return poset.comparable(x, y); })) {
        continue;
      }
      chosen.push_back(x);
      grow(x + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  return count;
}

QPoly size_genfn(const Poset& poset, int m) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(poset.size() * std::max(m, 0)) + 1, BigInt(0));
  for_each_p_partition(poset, m, [&](const PPartition& pi) {
    ++coeffs[static_cast<std::size_t>(pi.size())];
    return true;
  });
  return QPoly(std::move(coeffs));
}

QPoly size_series(const Poset& poset, int degree) {
  // Assign values in a linear extension order so every lower cover is set;
  // any unassigned element still needs at least the current lower bound.
  const int n = poset.size();
  std::vector<Element> order;
  for_each_linear_extension(poset, [&](std::span<const Element> seq) {
    order.assign(seq.begin(), seq.end());
    return false;
  });
  std::vector<BigInt> coeffs(static_cast<std::size_t>(std::max(degree, 0)) + 1, BigInt(0));
  std::vector<int> vals(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> place = [&](int i, int used) {
    if (i == n) {
      ++coeffs[static_cast<std::size_t>(used)];
      return;
    }
    const Element x = order[static_cast<std::size_t>(i)];
    int lo = 0;
    for (Element y : poset.lower_covers(x)) lo = std::max(lo, vals[static_cast<std::size_t>(y)]);
    // The n - i - 1 later elements are at least 0, so only |pi| bounds v.
    for (int v = lo; used + v <= degree; ++v) {
      vals[static_cast<std::size_t>(x)] = v;
      place(i + 1, used + v);
    }
  };
  if (degree >= 0) place(0, 0);
  return QPoly(std::move(coeffs));
}

QPoly maj_genfn(const Poset& poset, const std::optional<std::vector<Element>>& labeling) {
  const int n = poset.size();
  std::vector<Element> natural;
  if (labeling) {
    if (!is_linear_extension(poset, *labeling)) throw std::invalid_argument("maj_genfn: labeling is not natural");
    natural = *labeling;
  } else {
    for_each_linear_extension(poset, [&](std::span<const Element> seq) {
      natural.assign(seq.begin(), seq.end());
      return false;
    });
  }
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(natural[static_cast<std::size_t>(i)])] = i;
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n * (n - 1) / 2 + 1), BigInt(0));
  for_each_linear_extension(poset, [&](std::span<const Element> seq) {
    int maj = 0;
    for (int i = 1; i < n; ++i) {
      if (label[static_cast<std::size_t>(seq[static_cast<std::size_t>(i - 1)])] >
          label[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])]) {
        maj += i;
      }
    }
    ++coeffs[static_cast<std::size_t>(maj)];
    return true;
  });
  return QPoly(std::move(coeffs));
}

SymPPGenfns sym_pp_genfns(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("sym_pp_genfns: need n >= 1, m >= 0");
  std::vector<Cover> covers;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j + 1 < n) covers.emplace_back(i * n + j, i * n + j + 1);
      if (i + 1 < n) covers.emplace_back(i * n + j, (i + 1) * n + j);
    }
  }
  // Plane partitions decrease along rows and columns; P-partitions of the
  // grid increase, so read pi_{i,j} as m minus the label.
  const Poset grid(n * n, covers);
  const auto cells = static_cast<std::size_t>(n * n * m + 1);
  std::vector<BigInt> size(cells, BigInt(0));
  std::vector<BigInt> prime(cells, BigInt(0));
  for_each_p_partition(grid, m, [&](const PPartition& pi) {
    auto at = [&](int i, int j) { return m - pi.vals[static_cast<std::size_t>(i * n + j)]; };
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) {
        if (at(i, j) != at(j, i)) return true;
      }
    }
    int total = 0;
    int upper = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        total += at(i, j);
        if (i <= j) upper += at(i, j);
      }
    }
    ++size[static_cast<std::size_t>(total)];
    ++prime[static_cast<std::size_t>(upper)];
    return true;
  });
  return {QPoly(std::move(size)), QPoly(std::move(prime))};
}

CycloProduct sym_pp_product(int n, int m) {
  CycloProduct out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.numerator.push_back(2 * (i + j + m - 1));
      out.denominator.push_back(2 * (i + j - 1));
    }
    out.numerator.push_back(2 * i + m - 1);
    out.denominator.push_back(2 * i - 1);
  }
  return out;
}

CycloProduct sym_pp_prime_product(int n, int m) {
  CycloProduct out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      out.numerator.push_back(i + j + m - 1);
      out.denominator.push_back(i + j - 1);
    }
  }
  return out;
}

CycloProduct macmahon_product(int a, int b, int m) {
  CycloProduct out;
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) {
      out.numerator.push_back(m + i + j - 1);
      out.denominator.push_back(i + j - 1);
    }
  }
  return out;
}

namespace {

const Grading& need_grading(const std::optional<Grading>& g) {
  if (!g) throw std::domain_error("minuscule product needs a graded poset");
  return *g;
}

}  // namespace

CycloProduct minuscule_product(const Poset& poset, int m) {
  const auto g = grading_of(poset);
  CycloProduct out;
  for (int r : need_grading(g).rank) {
    out.numerator.push_back(m + r + 1);
    out.denominator.push_back(r + 1);
  }
  return out;
}

CycloProduct minuscule_maj_product(const Poset& poset) {
  const auto g = grading_of(poset);
  CycloProduct out;
  for (int j = 1; j <= poset.size(); ++j) out.numerator.push_back(j);
  for (int r : need_grading(g).rank) out.denominator.push_back(r + 1);
  return out;
}

CycloProduct v_promotion_product(int n) {
  CycloProduct out;
  for (int i = 1; i <= 3 * n; ++i) out.numerator.push_back(2 * i);
  for (int i = 2; i <= 2 * n + 1; ++i) out.denominator.push_back(i);
  for (int i = 2; i <= n + 1; ++i) out.denominator.push_back(2 * i);
  return out;
}

CycloProduct ds_promotion_product(int n, int k) {
  CycloProduct out;
  const int size = n * (n + 1) / 2 + k * (k + 1) / 2;
  for (int i = 1; i <= size; ++i) out.numerator.push_back(i);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) out.denominator.push_back(i + j - 1);
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = i; j <= k; ++j) out.denominator.push_back(i + j);
  }
  return out;
}

CycloProduct v_rowmotion_product(int n, int m) {
  CycloProduct out;
  for (int i = 2; i <= 2 * n + 1; ++i) {
    out.numerator.push_back(2 * m + i);
    out.denominator.push_back(i);
  }
  for (int i = 2; i <= n + 1; ++i) {
    out.numerator.push_back(2 * m + 2 * i);
    out.denominator.push_back(2 * i);
  }
  return out;
}

QPoly root_promotion_series(const CoxeterData& w, int degree) {
  CycloProduct lim;
  const int top = w.rank() * w.h;
  for (int e = 2; e <= top; e += 2) lim.numerator.push_back(e);
  // Factors of degree above the truncation cannot affect the result.
  for (int d : w.degrees) {
    for (int e = d; e <= degree; e += 2) lim.denominator.push_back(e);
    for (int e = w.h + d; e <= degree; e += 2) lim.numerator.push_back(e);
  }
  return expand_series(lim, degree);
}

std::optional<CspClaim> promotion_csp_claim(const FamilySpec& spec) {
  const CatalogPoset built = build(spec);
  const int size = built.poset.size();
  if (is_minuscule(spec)) return CspClaim{minuscule_maj_product(built.poset), size, false};
  if (is_coincidental_root(spec)) return CspClaim{e_q_product(spec, 2), 2 * size, true};
  if (spec.family == Family::ChainOfVs) return CspClaim{v_promotion_product(spec.params[0]), 2 * size, true};
  if (spec.family == Family::DoubleStaircase) {
    return CspClaim{ds_promotion_product(spec.params[0], spec.params[1]), size, true};
  }
  return std::nullopt;
}

std::optional<CspClaim> rowmotion_csp_claim(const FamilySpec& spec, int m) {
  if (is_minuscule(spec)) {
    const CatalogPoset built = build(spec);
    const int r = grading_of(built.poset)->rmax;
    const bool proved = spec.family == Family::Rectangle || m <= 1;
    return CspClaim{minuscule_product(built.poset, m), r + 2, !proved};
  }
  if (is_coincidental_root(spec)) {
    const CoxeterData w = coxeter_data(spec);
    return CspClaim{cat_multi_product(w, m), 2 * w.h, m > 1};
  }
  if (spec.family == Family::ChainOfVs) {
    const int n = spec.params[0];
    return CspClaim{v_rowmotion_product(n, m), 2 * (n + 2), true};
  }
  return std::nullopt;
}

std::string DoppelPair::label() const {
  return p.to_string() + "~" + q.to_string() + (dual_q ? "*" : "");
}

std::vector<DoppelPair> doppelganger_pairs(int max_size) {
  std::vector<DoppelPair> out;
  for (int a = 1; a * a <= max_size; ++a) {
    for (int b = a; a * b <= max_size; ++b) {
      out.push_back({FamilySpec{Family::Rectangle, {a, b}}, FamilySpec{Family::Trapezoid, {a, b}}, true});
    }
  }
  if (max_size >= 15) {
    out.push_back({FamilySpec{Family::DoubleStaircase, {5, 0}}, FamilySpec{Family::RootH3, {}}, false});
  }
  for (int l = 1; 2 * l <= max_size; ++l) {
    out.push_back({FamilySpec{Family::MinusculeD, {l}}, FamilySpec{Family::RootI2, {2 * l}}, false});
  }
  return out;
}

FormulaReport formula_report(const FamilySpec& spec, int m, std::uint64_t limit) {
  FormulaReport report;
  report.spec = spec;
  report.m = m;
  report.closed_value = omega_closed(spec, m);
  const auto count = count_p_partitions(build(spec).poset, m, limit);
  if (count) {
    report.brute_value = BigInt(*count);
    report.agrees = *report.brute_value == report.closed_value;
  }
  return report;
}

}  // namespace posetdyn
