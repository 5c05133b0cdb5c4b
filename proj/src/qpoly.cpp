#include "posetdyn/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace posetdyn {

QPoly::QPoly(int constant) : QPoly(BigInt(constant)) {}

QPoly::QPoly(BigInt constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly QPoly::monomial(int exponent, BigInt coeff) {
  std::vector<BigInt> c(static_cast<std::size_t>(exponent) + 1, BigInt(0));
  c.back() = std::move(coeff);
  return QPoly(std::move(c));
}

QPoly QPoly::q_integer(int n) {
  return QPoly(std::vector<BigInt>(static_cast<std::size_t>(std::max(n, 0)), BigInt(1)));
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

BigInt QPoly::at_one() const {
  BigInt total = 0;
  for (const auto& c : coeffs_) total += c;
  return total;
}

BigInt QPoly::eval(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

bool QPoly::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

std::vector<BigInt> QPoly::fold(int n) const {
  std::vector<BigInt> out(static_cast<std::size_t>(n), BigInt(0));
  for (std::size_t e = 0; e < coeffs_.size(); ++e) out[e % static_cast<std::size_t>(n)] += coeffs_[e];
  return out;
}

QPoly QPoly::truncated(int degree) const {
  if (degree < 0) return QPoly();
  if (degree >= this->degree()) return *this;
  return QPoly(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + degree + 1));
}

std::string QPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const BigInt& c = coeffs_[e];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? '-' : '+');
    }
    first = false;
    if (e == 0 || mag != 1) out << mag;
    if (e >= 1) out << var;
    if (e >= 2) out << '^' << e;
  }
  return out.str();
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

std::pair<QPoly, QPoly> divmod(const QPoly& numerator, const QPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  const BigInt lead = divisor.coeffs().back();
  if (lead != 1 && lead != -1) throw std::domain_error("divmod: divisor must have unit leading coefficient");
  std::vector<BigInt> rem = numerator.coeffs();
  const int dd = divisor.degree();
  if (numerator.degree() < dd) return {QPoly(), numerator};
  std::vector<BigInt> quot(static_cast<std::size_t>(numerator.degree() - dd) + 1, BigInt(0));
  for (int k = numerator.degree(); k >= dd; --k) {
    const BigInt c = rem[static_cast<std::size_t>(k)] * lead;  // lead is its own inverse
    quot[static_cast<std::size_t>(k - dd)] = c;
    if (c == 0) continue;
    for (int i = 0; i <= dd; ++i) {
      rem[static_cast<std::size_t>(k - dd + i)] -= c * divisor.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly cyclotomic(int d) {
  if (d < 1) throw std::domain_error("cyclotomic: order must be positive");
  // q^d - 1 divided by every Phi_e with e | d, e < d.
  QPoly result = QPoly::monomial(d) - QPoly(1);
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) result = divmod(result, cyclotomic(e)).first;
  }
  return result;
}

CycloProduct& CycloProduct::operator*=(const CycloProduct& rhs) {
  numerator.insert(numerator.end(), rhs.numerator.begin(), rhs.numerator.end());
  denominator.insert(denominator.end(), rhs.denominator.begin(), rhs.denominator.end());
  return *this;
}

BigRational CycloProduct::at_one() const {
  BigRational value = 1;
  for (int e : numerator) value *= e;
  for (int e : denominator) value /= e;
  return value;
}

std::string CycloProduct::to_string() const {
  auto side = [](const std::vector<int>& exps) {
    if (exps.empty()) return std::string("1");
    std::ostringstream out;
    for (int e : exps) out << "(1-q^" << e << ")";
    return out.str();
  };
  return side(numerator) + " / " + side(denominator);
}

namespace {

// In-place exact division by (1 - q^e); returns false on a remainder.
bool divide_by_cyclo_factor(std::vector<BigInt>& f, int e) {
  // g = f / (1 - q^e) satisfies g_k = f_k + g_{k-e}.
  const auto E = static_cast<std::size_t>(e);
  if (f.size() <= E) return f.empty();
  std::vector<BigInt> g(f.size(), BigInt(0));
  for (std::size_t k = 0; k < f.size(); ++k) {
    g[k] = f[k];
    if (k >= E) g[k] += g[k - E];
  }
  const std::size_t quotient_len = f.size() - E;
  for (std::size_t k = quotient_len; k < g.size(); ++k) {
    if (g[k] != 0) return false;
  }
  g.resize(quotient_len);
  f = std::move(g);
  return true;
}

}  // namespace

QPoly expand(const CycloProduct& product) {
  std::vector<BigInt> f{BigInt(1)};
  for (int e : product.numerator) {
    if (e <= 0) throw std::domain_error("expand: exponents must be positive");
    std::vector<BigInt> next(f.size() + static_cast<std::size_t>(e), BigInt(0));
    for (std::size_t k = 0; k < f.size(); ++k) {
      next[k] += f[k];
      next[k + static_cast<std::size_t>(e)] -= f[k];
    }
    f = std::move(next);
  }
  while (!f.empty() && f.back() == 0) f.pop_back();
  for (int e : product.denominator) {
    if (e <= 0) throw std::domain_error("expand: exponents must be positive");
    if (!divide_by_cyclo_factor(f, e)) throw NotPolynomial(e);
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  return QPoly(std::move(f));
}

QPoly expand_series(const CycloProduct& product, int degree) {
  const auto len = static_cast<std::size_t>(degree) + 1;
  std::vector<BigInt> f(len, BigInt(0));
  f[0] = 1;
  for (int e : product.numerator) {
    const auto E = static_cast<std::size_t>(e);
    for (std::size_t k = len; k-- > E;) f[k] -= f[k - E];
  }
  for (int e : product.denominator) {
    const auto E = static_cast<std::size_t>(e);
    for (std::size_t k = E; k < len; ++k) f[k] += f[k - E];
  }
  return QPoly(std::move(f));
}

}  // namespace posetdyn
