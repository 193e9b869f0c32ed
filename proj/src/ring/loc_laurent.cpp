#include "tqft/ring/loc_laurent.hpp"

namespace tqft::ring {

namespace {
const IntLaurent& one_plus_A() {
  static const IntLaurent v{{0, 1}, {1, 1}};
  return v;
}
}  // namespace

LocLaurent::LocLaurent(IntLaurent num, unsigned k) : num_(std::move(num)), k_(k) { normalize(); }

void LocLaurent::normalize() {
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ > 0) {
    auto q = divide_by_one_plus_A(num_, 1);
    if (!q) break;
    num_ = std::move(*q);
    --k_;
  }
}

LocLaurent& LocLaurent::operator+=(const LocLaurent& rhs) {
  if (k_ >= rhs.k_) {
    num_ += rhs.num_ * one_plus_A().pow(k_ - rhs.k_);
  } else {
    num_ = num_ * one_plus_A().pow(rhs.k_ - k_) + rhs.num_;
    k_ = rhs.k_;
  }
  normalize();
  return *this;
}

LocLaurent& LocLaurent::operator*=(const LocLaurent& rhs) {
  num_ *= rhs.num_;
  k_ += rhs.k_;
  normalize();
  return *this;
}

CycNum LocLaurent::at_root(const FieldPtr& field) const {
  CycNum v = CycNum::from_laurent(field, num_);
  if (k_ == 0) return v;
  return v / CycNum::from_laurent(field, one_plus_A()).pow(k_);
}

std::string LocLaurent::to_string() const {
  if (k_ == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(1+A)^" + std::to_string(k_);
}

}  // namespace tqft::ring
