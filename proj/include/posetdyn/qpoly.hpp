#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "posetdyn/bigint.hpp"

namespace posetdyn {

/// Dense polynomial in q with big-integer coefficients. Always canonical: no
/// trailing zero coefficients, so the zero polynomial has no coefficients and
/// degree -1.
class QPoly {
 public:
  QPoly() = default;
  QPoly(int constant);  // NOLINT(google-explicit-constructor)
  QPoly(BigInt constant);  // NOLINT(google-explicit-constructor)
  explicit QPoly(std::vector<BigInt> coeffs);

  static QPoly monomial(int exponent, BigInt coeff = 1);
  /// [n]_q = 1 + q + ... + q^{n-1}
  static QPoly q_integer(int n);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt coeff(int exponent) const;

  BigInt at_one() const;
  BigInt eval(const BigInt& q) const;
  bool has_nonnegative_coeffs() const;

  /// Reduction modulo q^n - 1: the n coefficients of exponents 0..n-1.
  std::vector<BigInt> fold(int n) const;
  /// Drops every term of degree above `degree`.
  QPoly truncated(int degree) const;

  std::string to_string(const std::string& var = "q") const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// Division by a polynomial whose leading coefficient is +-1.
std::pair<QPoly, QPoly> divmod(const QPoly& numerator, const QPoly& divisor);

/// The d-th cyclotomic polynomial.
QPoly cyclotomic(int d);

/// prod (1 - q^e) over `numerator` divided by prod (1 - q^e) over
/// `denominator`. Polynomiality is something to check, not an invariant.
struct CycloProduct {
  std::vector<int> numerator;
  std::vector<int> denominator;

  CycloProduct& operator*=(const CycloProduct& rhs);
  friend CycloProduct operator*(CycloProduct a, const CycloProduct& b) { return a *= b; }
  /// Value at q = 1 as the limit of the product, prod num / prod den.
  BigRational at_one() const;
  std::string to_string() const;
};

class NotPolynomial : public std::runtime_error {
 public:
  explicit NotPolynomial(int factor)
      : std::runtime_error("not a polynomial: division by (1-q^" + std::to_string(factor) +
                           ") leaves a remainder"),
        factor_(factor) {}
  int factor() const noexcept { return factor_; }

 private:
  int factor_;
};

/// Multiplies out the numerator and divides exactly by each denominator
/// factor; throws NotPolynomial naming the first factor that does not divide.
QPoly expand(const CycloProduct& product);

/// The product as a power series in q, truncated above `degree`. Works whether
/// or not the product is a polynomial.
QPoly expand_series(const CycloProduct& product, int degree);

}  // namespace posetdyn
