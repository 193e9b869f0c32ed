#include "tqft/ring/cyclotomic.hpp"

#include <cassert>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "tqft/errors.hpp"

namespace tqft::ring {

namespace {

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

// Fraction-free Gaussian elimination.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

CycField::CycField(long p) : p_(p) {
  n_ = (p % 4 == 3) ? 2 * p : 4 * p;
  phi_ = (n_ == 2 * p) ? p - 1 : 2 * (p - 1);
  // Phi_{2p}(x) = 1 - x + x^2 - ... + x^{p-1}; Phi_{4p}(x) = Phi_{2p}(x^2).
  const long stride = n_ / (2 * p);
  cyclo_.assign(static_cast<size_t>(phi_ + 1), 0);
  for (long j = 0; j < p; ++j) cyclo_[static_cast<size_t>(j * stride)] = (j % 2 == 0) ? 1 : -1;

  powers_.assign(static_cast<size_t>(n_), std::vector<mpz_class>(static_cast<size_t>(phi_)));
  for (long m = 0; m < phi_; ++m) powers_[m][m] = 1;
  for (long m = phi_; m < n_; ++m) {
    // x^m = x * x^{m-1}, then eliminate x^phi using the monic relation.
    const auto& prev = powers_[m - 1];
    auto& cur = powers_[m];
    const mpz_class top = prev[phi_ - 1];
    for (long j = phi_ - 1; j > 0; --j) cur[j] = prev[j - 1];
    cur[0] = 0;
    for (long j = 0; j < phi_; ++j) cur[j] -= top * cyclo_[j];
  }

  if (has_i()) {
    for (long t = 1; t < 4; ++t)
      if (mod(1 + p * t, 4) == 3) plus_involution_ = 1 + p * t;
  }
}

std::shared_ptr<const CycField> CycField::get(long p) {
  if (!is_odd_prime(p)) throw DomainError("p must be an odd prime, got " + std::to_string(p));
  static std::mutex mu;
  static std::map<long, std::shared_ptr<const CycField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[p];
  if (!slot) slot = std::shared_ptr<const CycField>(new CycField(p));
  return slot;
}

std::vector<long> CycField::galois_group() const {
  std::vector<long> g;
  for (long k = 1; k < n_; ++k)
    if (std::gcd(k, n_) == 1) g.push_back(k);
  return g;
}

CycNum::CycNum(FieldPtr field, long value) : CycNum(std::move(field), mpz_class(value)) {}

CycNum::CycNum(FieldPtr field, const mpz_class& value) : field_(std::move(field)) {
  num_.assign(static_cast<size_t>(field_->phi()), 0);
  num_[0] = value;
}

CycNum::CycNum(FieldPtr field, const mpq_class& value) : field_(std::move(field)) {
  num_.assign(static_cast<size_t>(field_->phi()), 0);
  num_[0] = value.get_num();
  den_ = value.get_den();
  normalize();
}

CycNum::CycNum(FieldPtr field, std::vector<mpz_class> num, mpz_class den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
  if (static_cast<long>(num_.size()) != field_->phi()) throw DomainError("coordinate vector has wrong length");
  if (den_ == 0) throw DomainError("zero denominator");
  normalize();
}

CycNum CycNum::zeta_power(FieldPtr field, long m) {
  const auto& v = field->power(mod(m, field->n()));
  return CycNum(field, v);
}

CycNum CycNum::from_laurent(FieldPtr field, const IntLaurent& f) {
  std::vector<mpz_class> acc(static_cast<size_t>(field->phi()));
  const long n = field->n();
  const long step = field->a_exponent();
  for (const auto& [e, c] : f.coeffs()) {
    const auto& v = field->power(mod(e * step, n));
    for (size_t j = 0; j < acc.size(); ++j)
      if (v[j] != 0) acc[j] += c * v[j];
  }
  return CycNum(field, std::move(acc));
}

void CycNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void CycNum::adopt(const CycNum& other) {
  if (!field_ && other.field_) {
    field_ = other.field_;
    num_.assign(static_cast<size_t>(field_->phi()), 0);
    den_ = 1;
  }
  if (field_ && other.field_ && field_ != other.field_) throw DomainError("mixing elements of different fields");
}

bool CycNum::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
  adopt(rhs);
  if (!rhs.field_) return *this;
  if (den_ == rhs.den_) {
    for (size_t j = 0; j < num_.size(); ++j) num_[j] += rhs.num_[j];
  } else {
    for (size_t j = 0; j < num_.size(); ++j) num_[j] = num_[j] * rhs.den_ + rhs.num_[j] * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) { return *this += -rhs; }

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycNum& CycNum::operator*=(const CycNum& rhs) {
  adopt(rhs);
  if (!rhs.field_) {
    *this = CycNum();
    return *this;
  }
  const long phi = field_->phi();
  std::vector<mpz_class> conv(static_cast<size_t>(2 * phi - 1));
  for (long a = 0; a < phi; ++a) {
    if (num_[a] == 0) continue;
    for (long b = 0; b < phi; ++b)
      if (rhs.num_[b] != 0) mpz_addmul(conv[a + b].get_mpz_t(), num_[a].get_mpz_t(), rhs.num_[b].get_mpz_t());
  }
  std::vector<mpz_class> out(conv.begin(), conv.begin() + phi);
  for (long m = phi; m < 2 * phi - 1; ++m) {
    if (conv[m] == 0) continue;
    const auto& v = field_->power(m);
    for (long j = 0; j < phi; ++j)
      if (v[j] != 0) mpz_addmul(out[j].get_mpz_t(), conv[m].get_mpz_t(), v[j].get_mpz_t());
  }
  num_ = std::move(out);
  den_ *= rhs.den_;
  normalize();
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& rhs) { return *this *= rhs.inverse(); }

bool operator==(const CycNum& a, const CycNum& b) {
  const bool za = !a.field_ || a.is_zero();
  const bool zb = !b.field_ || b.is_zero();
  if (za || zb) return za && zb;
  return a.field_ == b.field_ && a.den_ == b.den_ && a.num_ == b.num_;
}

CycNum CycNum::galois(long k) const {
  if (!field_) return *this;
  const long n = field_->n();
  k = mod(k, n);
  if (std::gcd(k, n) != 1) throw DomainError("Galois exponent must be coprime to n");
  std::vector<mpz_class> out(num_.size());
  for (size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    const auto& v = field_->power(mod(static_cast<long>(j) * k, n));
    for (size_t t = 0; t < out.size(); ++t)
      if (v[t] != 0) mpz_addmul(out[t].get_mpz_t(), num_[j].get_mpz_t(), v[t].get_mpz_t());
  }
  return CycNum(field_, std::move(out), den_);
}

CycNum CycNum::inverse() const {
  if (!field_ || is_zero()) throw DomainError("division by zero");
  // x^{-1} = (prod of the other conjugates) / N(x).
  CycNum others(field_, 1);
  for (long k : field_->galois_group())
    if (k != 1) others *= galois(k);
  CycNum nrm = *this * others;
  for (size_t j = 1; j < nrm.num_.size(); ++j) assert(nrm.num_[j] == 0);
  mpq_class n(nrm.num_[0], nrm.den_);
  n.canonicalize();
  mpq_class inv = 1 / n;
  return others * CycNum(field_, inv);
}

CycNum CycNum::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CycNum result(field_, 1);
  CycNum base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

mpz_class resultant(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g) {
  auto degree = [](const std::vector<mpz_class>& v) {
    long d = static_cast<long>(v.size()) - 1;
    while (d >= 0 && v[d] == 0) --d;
    return d;
  };
  const long df = degree(f), dg = degree(g);
  if (df < 0 || dg < 0) return 0;
  if (df == 0 && dg == 0) return 1;
  if (dg == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), g[0].get_mpz_t(), static_cast<unsigned long>(df));
    return r;
  }
  if (df == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), f[0].get_mpz_t(), static_cast<unsigned long>(dg));
    return r;
  }
  const size_t size = static_cast<size_t>(df + dg);
  std::vector<std::vector<mpz_class>> syl(size, std::vector<mpz_class>(size));
  for (long r = 0; r < dg; ++r)
    for (long j = 0; j <= df; ++j) syl[r][r + j] = f[df - j];
  for (long r = 0; r < df; ++r)
    for (long j = 0; j <= dg; ++j) syl[dg + r][r + j] = g[dg - j];
  return bareiss_det(std::move(syl));
}

mpq_class CycNum::norm() const {
  if (!field_) return 0;
  mpz_class res = resultant(field_->cyclotomic_polynomial(), num_);
  mpz_class dpow;
  mpz_pow_ui(dpow.get_mpz_t(), den_.get_mpz_t(), static_cast<unsigned long>(field_->phi()));
  mpq_class r(res, dpow);
  r.canonicalize();
  return r;
}

std::complex<double> CycNum::to_complex() const {
  if (!field_) return {0.0, 0.0};
  std::complex<double> acc{0.0, 0.0};
  const double n = static_cast<double>(field_->n());
  for (size_t j = 0; j < num_.size(); ++j)
    acc += num_[j].get_d() * std::polar(1.0, 2.0 * M_PI * static_cast<double>(j) / n);
  return acc / den_.get_d();
}

std::string CycNum::to_string() const {
  if (!field_ || is_zero()) return "0";
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    if (!first) os << (num_[j] < 0 ? " - " : " + ");
    else if (num_[j] < 0) os << "-";
    mpz_class mag = abs(num_[j]);
    if (j == 0) os << mag.get_str();
    else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z" << field_->n() << "^" << j;
    }
    first = false;
  }
  os << ")";
  if (den_ != 1) os << "/" << den_.get_str();
  return os.str();
}

std::optional<CycNum> try_divide(const CycNum& x, const CycNum& y) {
  if (y == CycNum()) return std::nullopt;
  return x / y;
}

bool is_integral(const CycNum& x) { return x.is_integral(); }

bool in_plus_subring(const CycNum& x) {
  if (!x.is_integral()) return false;
  if (!x.field() || !x.field()->has_i()) return true;
  return x.galois(x.field()->plus_involution()) == x;
}

bool is_unit(const CycNum& x) {
  if (!x.field() || x.is_zero() || !x.is_integral()) return false;
  return abs(x.norm()) == 1;
}

bool is_associate(const CycNum& x, const CycNum& y) {
  if (x == CycNum() || y == CycNum()) return false;
  return (x / y).is_integral() && (y / x).is_integral();
}

long valuation_1mq(const CycNum& x) {
  if (x == CycNum()) throw DomainError("valuation of zero");
  if (!in_plus_subring(x)) throw DomainError("valuation_1mq requires an element of O+");
  const CycNum inv = one_minus_q(x.field()).inverse();
  long k = 0;
  CycNum cur = x;
  while (true) {
    CycNum next = cur * inv;
    if (!next.is_integral()) return k;
    cur = std::move(next);
    ++k;
  }
}

std::optional<long> associate_exponent(const CycNum& x) {
  if (x == CycNum()) return std::nullopt;
  mpq_class n = abs(x.norm());
  const long p = x.field()->p();
  const mpz_class pz = p;
  long exp = 0;
  mpz_class num = n.get_num(), den = n.get_den();
  while (mpz_divisible_p(num.get_mpz_t(), pz.get_mpz_t())) {
    num /= pz;
    ++exp;
  }
  while (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t())) {
    den /= pz;
    --exp;
  }
  if (num != 1 || den != 1) return std::nullopt;
  const long idx = x.field()->plus_index();
  if (exp % idx != 0) return std::nullopt;
  const long e = exp / idx;
  if (!is_associate(x, one_minus_q(x.field()).pow(e))) return std::nullopt;
  return e;
}

CycNum A(const FieldPtr& f) { return CycNum::zeta_power(f, f->a_exponent()); }
CycNum q(const FieldPtr& f) { return CycNum::zeta_power(f, 2 * f->a_exponent()); }
CycNum one_minus_q(const FieldPtr& f) { return CycNum(f, 1) - q(f); }

CycNum imag_unit(const FieldPtr& f) {
  if (!f->has_i()) throw DomainError("i is not in the coefficient ring for p = 3 mod 4");
  return CycNum::zeta_power(f, f->n() / 4);
}

CycNum i_power(const FieldPtr& f, long m) {
  switch (mod(m, 4)) {
    case 0: return CycNum(f, 1);
    case 2: return CycNum(f, -1);
    case 1: return imag_unit(f);
    default: return -imag_unit(f);
  }
}

CycNum qint(const FieldPtr& f, long n) {
  if (n == 0) return CycNum(f, 0);
  if (n < 0) return -qint(f, -n);
  CycNum acc(f, 0);
  for (long j = 0; j < n; ++j) acc += q(f).pow(n - 1 - 2 * j);
  return acc;
}

CycNum surgery_D(const FieldPtr& f) {
  const long p = f->p();
  IntLaurent gauss;
  for (long m = 1; m <= 2 * p; ++m) gauss += IntLaurent::monomial(m * m, (m % 2 == 0) ? 1 : -1);
  CycNum g = CycNum::from_laurent(f, gauss) * CycNum(f, mpq_class(1, 2));
  const CycNum qq = q(f);
  return i_power(f, (p + 1) / 2) * g / (qq - qq.inverse());
}

CycNum kappa(const FieldPtr& f) {
  const long p = f->p();
  const long e = (p + 1) / 2;
  CycNum minus_i_pow = i_power(f, e) * CycNum(f, (e % 2 == 0) ? 1 : -1);
  return A(f).pow(-3) * minus_i_pow;
}

}  // namespace tqft::ring
