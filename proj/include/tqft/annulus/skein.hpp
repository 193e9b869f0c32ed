#pragma once

#include <gmpxx.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "tqft/ring/cyclotomic.hpp"
#include "tqft/ring/laurent.hpp"
#include "tqft/ring/loc_laurent.hpp"

namespace tqft::annulus {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Integer multiples of a coefficient; the CycNum version tolerates a detached zero.
inline ring::LocLaurent scale(const ring::LocLaurent& c, const mpz_class& m) {
  return c * ring::LocLaurent(ring::IntLaurent(m));
}
inline ring::CycNum scale(const ring::CycNum& c, const mpz_class& m) {
  if (!c.field()) return c;
  return c * ring::CycNum(c.field(), m);
}
inline bool is_zero_coeff(const ring::LocLaurent& c) { return c.is_zero(); }
inline bool is_zero_coeff(const ring::CycNum& c) { return c.is_zero(); }

/// Coordinates of z^k in the e-basis e_0..e_k.
std::vector<mpz_class> z_power_in_e(unsigned k);

/// Element of the skein algebra of the solid torus, stored as a polynomial in
/// the core curve z. Coeff is LocLaurent (generic A) or CycNum (A at a root of unity).
template <typename Coeff>
class Skein {
 public:
  Skein() = default;
  explicit Skein(std::vector<Coeff> z_coeffs) : z_(std::move(z_coeffs)) { trim(); }

  /// Builds sum_k m_k z^k from integer coefficients, using `one` to fix the coefficient ring.
  static Skein from_integers(const std::vector<mpz_class>& m, const Coeff& one) {
    std::vector<Coeff> c;
    for (const auto& x : m) c.push_back(scale(one, x));
    return Skein(std::move(c));
  }
  /// Inverse of e_coeffs.
  static Skein from_e_coeffs(const std::vector<Coeff>& e);

  const std::vector<Coeff>& z_coeffs() const { return z_; }
  bool is_zero() const { return z_.empty(); }
  long degree() const { return static_cast<long>(z_.size()) - 1; }
  std::vector<Coeff> e_coeffs() const;

  Skein& operator+=(const Skein& rhs) {
    if (rhs.z_.size() > z_.size()) z_.resize(rhs.z_.size());
    for (size_t k = 0; k < rhs.z_.size(); ++k) z_[k] += rhs.z_[k];
    trim();
    return *this;
  }
  Skein& operator-=(const Skein& rhs) {
    Skein neg = rhs;
    for (auto& x : neg.z_) x = scale(x, -1);
    return *this += neg;
  }
  friend Skein operator+(Skein a, const Skein& b) { return a += b; }
  friend Skein operator-(Skein a, const Skein& b) { return a -= b; }
  friend Skein operator*(const Skein& a, const Skein& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.z_.size() + b.z_.size() - 1);
    for (size_t i = 0; i < a.z_.size(); ++i)
      for (size_t j = 0; j < b.z_.size(); ++j) out[i + j] += a.z_[i] * b.z_[j];
    return Skein(std::move(out));
  }
  friend Skein operator*(Skein a, const Coeff& c) {
    for (auto& x : a.z_) x *= c;
    a.trim();
    return a;
  }
  friend bool operator==(const Skein& a, const Skein& b) { return a.z_ == b.z_; }

  Skein pow(unsigned n, const Coeff& one) const {
    Skein r(std::vector<Coeff>{one});
    for (unsigned k = 0; k < n; ++k) r = r * *this;
    return r;
  }

 private:
  void trim() {
    while (!z_.empty() && is_zero_coeff(z_.back())) z_.pop_back();
  }
  std::vector<Coeff> z_;
};

template <typename Coeff>
std::vector<Coeff> Skein<Coeff>::e_coeffs() const {
  std::vector<Coeff> e(z_.size());
  for (size_t k = 0; k < z_.size(); ++k) {
    auto row = z_power_in_e(static_cast<unsigned>(k));
    for (size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) e[j] += scale(z_[k], row[j]);
  }
  return e;
}

/// z-coefficients of e_i, from e_0 = 1, e_1 = z, e_i = z e_{i-1} - e_{i-2}.
std::vector<mpz_class> e_poly(unsigned i);

template <typename Coeff>
Skein<Coeff> Skein<Coeff>::from_e_coeffs(const std::vector<Coeff>& e) {
  std::vector<Coeff> z(e.size());
  for (size_t j = 0; j < e.size(); ++j) {
    auto row = e_poly(static_cast<unsigned>(j));
    for (size_t k = 0; k < row.size(); ++k)
      if (row[k] != 0) z[k] += scale(e[j], row[k]);
  }
  return Skein(std::move(z));
}

using GenericSkein = Skein<ring::LocLaurent>;
using RootSkein = Skein<ring::CycNum>;

/// v = (z+2)/(1+A) with generic coefficients.
GenericSkein v_generic();
/// v at A = zeta_{2p}.
RootSkein v_at_root(const ring::FieldPtr& f);

/// Coordinates in the basis v^j = ((z+2)/(1+A))^j.
std::vector<ring::LocLaurent> v_coeffs(const GenericSkein& s);
GenericSkein from_v_coeffs(const std::vector<ring::LocLaurent>& v);

/// JSON array of {"basis": "z"|"e"|"v", "index": k, "coeff": scalar} entries, zero terms omitted.
nlohmann::json to_json(const GenericSkein& s, const std::string& basis);
nlohmann::json to_json(const RootSkein& s, const std::string& basis);  // basis "z" or "e"

}  // namespace tqft::annulus
