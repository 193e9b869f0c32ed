#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace tqft::ring {

/// Laurent polynomial over arbitrary-precision integers in one variable
/// (the skein variable A unless stated otherwise). Zero coefficients are never
/// stored, so the zero polynomial is the empty map.
class IntLaurent {
 public:
  using Coeffs = std::map<long, mpz_class>;

  IntLaurent() = default;
  IntLaurent(long constant);  // NOLINT(google-explicit-constructor)
  explicit IntLaurent(const mpz_class& constant);
  IntLaurent(std::initializer_list<std::pair<long, long>> terms);

  static IntLaurent monomial(long exponent, const mpz_class& coeff = 1);
  static IntLaurent variable() { return monomial(1); }
  static IntLaurent from_coeffs(Coeffs coeffs);

  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  mpz_class coeff(long exponent) const;
  long min_exponent() const;  // requires non-zero
  long max_exponent() const;  // requires non-zero

  IntLaurent& operator+=(const IntLaurent& rhs);
  IntLaurent& operator-=(const IntLaurent& rhs);
  IntLaurent& operator*=(const IntLaurent& rhs);
  IntLaurent operator-() const;

  friend IntLaurent operator+(IntLaurent lhs, const IntLaurent& rhs) { return lhs += rhs; }
  friend IntLaurent operator-(IntLaurent lhs, const IntLaurent& rhs) { return lhs -= rhs; }
  friend IntLaurent operator*(const IntLaurent& lhs, const IntLaurent& rhs);
  friend bool operator==(const IntLaurent&, const IntLaurent&) = default;

  IntLaurent pow(unsigned n) const;
  /// Multiplication by A^k.
  IntLaurent shifted(long k) const;
  /// Formal d/dA.
  IntLaurent derivative() const;
  mpz_class evaluate(const mpz_class& value) const;  // value must be a unit if negative exponents occur
  /// A -> A^{-1}; this is the mirror-image involution on brackets.
  IntLaurent bar() const;
  /// A -> A^k (k may be negative).
  IntLaurent substitute_power(long k) const;
  /// Exact division by an integer; std::nullopt if some coefficient is not divisible.
  std::optional<IntLaurent> divide_exact(const mpz_class& d) const;

  std::string to_string(const std::string& var = "A") const;

 private:
  void add_term(long exponent, const mpz_class& coeff);
  Coeffs coeffs_;
};

/// Returns g with f = (1+A)^k g, when such g exists in Z[A, A^-1].
std::optional<IntLaurent> divide_by_one_plus_A(const IntLaurent& f, unsigned k);
/// Returns g with f = (A - root)^k g for root in {-1, 1}.
std::optional<IntLaurent> divide_by_linear(const IntLaurent& f, int root, unsigned k);
/// Largest k with (1+A)^k | f; f must be non-zero.
unsigned one_plus_A_multiplicity(const IntLaurent& f);

/// Binomial coefficient on arbitrary-precision integers; zero outside 0 <= k <= n.
mpz_class binomial(long n, long k);

}  // namespace tqft::ring
