#pragma once

#include "tqft/ring/cyclotomic.hpp"
#include "tqft/ring/laurent.hpp"

namespace tqft::ring {

/// Element num / (1+A)^k of Z[A, A^-1, 1/(1+A)], normalized so that (1+A)
/// does not divide num when k > 0.
class LocLaurent {
 public:
  LocLaurent() = default;
  LocLaurent(long constant) : num_(constant) {}  // NOLINT(google-explicit-constructor)
  LocLaurent(IntLaurent num, unsigned k = 0);     // NOLINT(google-explicit-constructor)

  const IntLaurent& num() const { return num_; }
  unsigned k() const { return k_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return k_ == 0; }

  LocLaurent& operator+=(const LocLaurent& rhs);
  LocLaurent& operator-=(const LocLaurent& rhs) { return *this += -rhs; }
  LocLaurent& operator*=(const LocLaurent& rhs);
  LocLaurent operator-() const { return LocLaurent(-num_, k_); }
  friend LocLaurent operator+(LocLaurent a, const LocLaurent& b) { return a += b; }
  friend LocLaurent operator-(LocLaurent a, const LocLaurent& b) { return a -= b; }
  friend LocLaurent operator*(LocLaurent a, const LocLaurent& b) { return a *= b; }
  friend bool operator==(const LocLaurent&, const LocLaurent&) = default;

  /// Division by (1+A)^j.
  LocLaurent divided_by_one_plus_A(unsigned j) const { return LocLaurent(num_, k_ + j); }
  /// Image at A = zeta_{2p}; valid since 1 + zeta_{2p} != 0.
  CycNum at_root(const FieldPtr& field) const;
  std::string to_string() const;

 private:
  void normalize();
  IntLaurent num_;
  unsigned k_ = 0;
};

}  // namespace tqft::ring
