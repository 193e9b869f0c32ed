#include "tqft/ring/laurent.hpp"

#include <cassert>
#include <sstream>
#include <vector>

namespace tqft::ring {

IntLaurent::IntLaurent(long constant) {
  if (constant != 0) coeffs_.emplace(0, constant);
}

IntLaurent::IntLaurent(const mpz_class& constant) {
  if (constant != 0) coeffs_.emplace(0, constant);
}

IntLaurent::IntLaurent(std::initializer_list<std::pair<long, long>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

IntLaurent IntLaurent::monomial(long exponent, const mpz_class& coeff) {
  IntLaurent r;
  r.add_term(exponent, coeff);
  return r;
}

IntLaurent IntLaurent::from_coeffs(Coeffs coeffs) {
  IntLaurent r;
  for (auto& [e, c] : coeffs) r.add_term(e, c);
  return r;
}

void IntLaurent::add_term(long exponent, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

mpz_class IntLaurent::coeff(long exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? mpz_class(0) : it->second;
}

long IntLaurent::min_exponent() const {
  assert(!coeffs_.empty());
  return coeffs_.begin()->first;
}

long IntLaurent::max_exponent() const {
  assert(!coeffs_.empty());
  return coeffs_.rbegin()->first;
}

IntLaurent& IntLaurent::operator+=(const IntLaurent& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, c);
  return *this;
}

IntLaurent& IntLaurent::operator-=(const IntLaurent& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, -c);
  return *this;
}

IntLaurent IntLaurent::operator-() const {
  IntLaurent r = *this;
  for (auto& [e, c] : r.coeffs_) c = -c;
  return r;
}

IntLaurent operator*(const IntLaurent& lhs, const IntLaurent& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  // Dense accumulation keeps large products fast.
  const long lo = lhs.min_exponent() + rhs.min_exponent();
  const long hi = lhs.max_exponent() + rhs.max_exponent();
  std::vector<mpz_class> acc(static_cast<size_t>(hi - lo + 1));
  for (const auto& [e1, c1] : lhs.coeffs_)
    for (const auto& [e2, c2] : rhs.coeffs_) {
      mpz_addmul(acc[e1 + e2 - lo].get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
    }
  IntLaurent r;
  for (size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) r.coeffs_.emplace_hint(r.coeffs_.end(), lo + static_cast<long>(i), std::move(acc[i]));
  return r;
}

IntLaurent& IntLaurent::operator*=(const IntLaurent& rhs) { return *this = *this * rhs; }

IntLaurent IntLaurent::pow(unsigned n) const {
  IntLaurent result(1);
  IntLaurent base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

IntLaurent IntLaurent::shifted(long k) const {
  IntLaurent r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace_hint(r.coeffs_.end(), e + k, c);
  return r;
}

IntLaurent IntLaurent::derivative() const {
  IntLaurent r;
  for (const auto& [e, c] : coeffs_)
    if (e != 0) r.coeffs_.emplace_hint(r.coeffs_.end(), e - 1, c * e);
  return r;
}

mpz_class IntLaurent::evaluate(const mpz_class& value) const {
  mpz_class result = 0;
  for (const auto& [e, c] : coeffs_) {
    mpz_class term;
    if (e >= 0) {
      mpz_pow_ui(term.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(e));
    } else {
      assert(value == 1 || value == -1);
      mpz_pow_ui(term.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(-e));
    }
    result += c * term;
  }
  return result;
}

IntLaurent IntLaurent::bar() const { return substitute_power(-1); }

IntLaurent IntLaurent::substitute_power(long k) const {
  IntLaurent r;
  for (const auto& [e, c] : coeffs_) r.add_term(e * k, c);
  return r;
}

std::optional<IntLaurent> IntLaurent::divide_exact(const mpz_class& d) const {
  IntLaurent r;
  for (const auto& [e, c] : coeffs_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    r.coeffs_.emplace_hint(r.coeffs_.end(), e, c / d);
  }
  return r;
}

std::string IntLaurent::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    mpz_class mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (e == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

std::optional<IntLaurent> divide_by_linear(const IntLaurent& f, int root, unsigned k) {
  assert(root == 1 || root == -1);
  if (f.is_zero() || k == 0) return f;
  const long lo = f.min_exponent();
  // Dense coefficients of the polynomial g(A) = A^{-lo} f(A), lowest degree first.
  std::vector<mpz_class> g(static_cast<size_t>(f.max_exponent() - lo + 1));
  for (const auto& [e, c] : f.coeffs()) g[e - lo] = c;
  for (unsigned step = 0; step < k; ++step) {
    if (g.size() < 2) return std::nullopt;
    // Synthetic division by (A - root), highest degree first.
    std::vector<mpz_class> q(g.size() - 1);
    mpz_class carry = 0;
    for (size_t i = g.size(); i-- > 1;) {
      carry = g[i] + carry * root;
      q[i - 1] = carry;
    }
    if (g[0] + carry * root != 0) return std::nullopt;
    g = std::move(q);
  }
  IntLaurent::Coeffs out;
  for (size_t i = 0; i < g.size(); ++i)
    if (g[i] != 0) out.emplace(lo + static_cast<long>(i), g[i]);
  return IntLaurent::from_coeffs(std::move(out));
}

std::optional<IntLaurent> divide_by_one_plus_A(const IntLaurent& f, unsigned k) {
  return divide_by_linear(f, -1, k);
}

unsigned one_plus_A_multiplicity(const IntLaurent& f) {
  assert(!f.is_zero());
  unsigned k = 0;
  IntLaurent cur = f;
  while (auto next = divide_by_linear(cur, -1, 1)) {
    cur = std::move(*next);
    ++k;
  }
  return k;
}

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace tqft::ring
