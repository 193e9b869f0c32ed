#pragma once

#include <gmpxx.h>

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tqft/ring/laurent.hpp"

namespace tqft::ring {

/// The cyclotomic field Q(zeta_n) attached to an odd prime p, with n = 2p when
/// p = 3 mod 4 and n = 4p when p = 1 mod 4. Elements are stored in the power
/// basis 1, zeta, ..., zeta^(phi-1), so Z[zeta_n] is exactly the ring of
/// integers O of the coefficient ring. A is zeta_{2p}.
class CycField {
 public:
  static std::shared_ptr<const CycField> get(long p);

  long p() const { return p_; }
  long n() const { return n_; }
  long phi() const { return phi_; }
  /// Degree of Q(zeta_n) over Q(zeta_p): 1 or 2.
  long plus_index() const { return n_ / (2 * p_); }
  bool has_i() const { return n_ % 4 == 0; }
  /// Exponent e with A = zeta_n^e.
  long a_exponent() const { return n_ / (2 * p_); }
  const std::vector<mpz_class>& cyclotomic_polynomial() const { return cyclo_; }
  /// Power-basis coordinates of zeta_n^m for 0 <= m < n.
  const std::vector<mpz_class>& power(long m) const { return powers_[static_cast<size_t>(m)]; }
  /// The Galois element that fixes zeta_p and sends i to -i (identity when n = 2p).
  long plus_involution() const { return plus_involution_; }
  std::vector<long> galois_group() const;

 private:
  explicit CycField(long p);
  long p_;
  long n_;
  long phi_;
  long plus_involution_ = 1;
  std::vector<mpz_class> cyclo_;
  std::vector<std::vector<mpz_class>> powers_;
};

using FieldPtr = std::shared_ptr<const CycField>;

/// Element num/den of Q(zeta_n), num an integer coordinate vector of length
/// phi(n), den > 0, gcd(den, content(num)) = 1. Immutable value type.
class CycNum {
 public:
  CycNum() = default;  // detached zero; adopts a field on first arithmetic
  CycNum(FieldPtr field, long value);
  CycNum(FieldPtr field, const mpz_class& value);
  CycNum(FieldPtr field, const mpq_class& value);
  CycNum(FieldPtr field, std::vector<mpz_class> num, mpz_class den = 1);

  static CycNum zeta_power(FieldPtr field, long m);
  /// Image of f under A -> zeta_{2p}.
  static CycNum from_laurent(FieldPtr field, const IntLaurent& f);

  const FieldPtr& field() const { return field_; }
  const std::vector<mpz_class>& num() const { return num_; }
  const mpz_class& den() const { return den_; }
  long p() const { return field_ ? field_->p() : 0; }

  bool is_zero() const;
  bool is_integral() const { return den_ == 1; }

  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const CycNum& rhs);
  CycNum& operator/=(const CycNum& rhs);
  CycNum operator-() const;
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  CycNum inverse() const;
  CycNum pow(long k) const;
  /// zeta -> zeta^k for k coprime to n.
  CycNum galois(long k) const;
  /// Complex conjugation for the principal embedding, i.e. zeta -> zeta^-1.
  CycNum conj() const { return galois(-1); }
  /// Absolute norm N_{Q(zeta_n)/Q}, computed as a resultant with the cyclotomic polynomial.
  mpq_class norm() const;
  /// Principal complex embedding zeta_n -> exp(2 pi i / n); for float cross-checks only.
  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  void normalize();
  void adopt(const CycNum& other);
  FieldPtr field_;
  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
};

std::optional<CycNum> try_divide(const CycNum& x, const CycNum& y);
bool is_integral(const CycNum& x);
/// Membership in Q(zeta_p) intersected with O, i.e. in O+ = Z[zeta_p].
bool in_plus_subring(const CycNum& x);
bool is_unit(const CycNum& x);
bool is_associate(const CycNum& x, const CycNum& y);
/// Largest k with x / (1-q)^k in O+; x must be a non-zero element of O+.
long valuation_1mq(const CycNum& x);
/// Exponent e with x ~ (1-q)^e (equality up to a unit of O), if one exists.
std::optional<long> associate_exponent(const CycNum& x);

/// Resultant of two integer polynomials (coefficients lowest degree first).
mpz_class resultant(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g);

// Distinguished constants of the coefficient ring.
CycNum A(const FieldPtr& f);
CycNum q(const FieldPtr& f);
CycNum imag_unit(const FieldPtr& f);  // requires p = 1 mod 4
CycNum i_power(const FieldPtr& f, long m);  // i^m; only even m when p = 3 mod 4
/// Quantum integer [n] = (q^n - q^-n)/(q - q^-1), computed as q^{1-n} (1 + q^2 + ... + q^{2n-2}).
CycNum qint(const FieldPtr& f, long n);
/// D = i^{(p+1)/2} (q - q^-1)^{-1} (1/2) sum_{m=1}^{2p} (-1)^m A^{m^2}.
CycNum surgery_D(const FieldPtr& f);
/// kappa = A^-3 (-i)^{(p+1)/2}.
CycNum kappa(const FieldPtr& f);
CycNum one_minus_q(const FieldPtr& f);

}  // namespace tqft::ring
