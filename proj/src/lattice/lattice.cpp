#include "tqft/lattice/lattice.hpp"

#include <map>

#include "tqft/errors.hpp"

namespace tqft::lattice {

namespace {

using Row = std::vector<mpz_class>;

// Echelon rows keyed by pivot column.
struct Echelon {
  std::map<size_t, Row> rows;

  void insert(Row r) {
    for (size_t c = 0; c < r.size(); ++c) {
      if (r[c] == 0) continue;
      auto it = rows.find(c);
      if (it == rows.end()) {
        if (r[c] < 0)
          for (auto& x : r) x = -x;
        rows.emplace(c, std::move(r));
        return;
      }
      Row& piv = it->second;
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), piv[c].get_mpz_t(), r[c].get_mpz_t());
      const mpz_class a = piv[c] / g;
      const mpz_class b = r[c] / g;
      for (size_t k = c; k < r.size(); ++k) {
        const mpz_class top = s * piv[k] + t * r[k];
        r[k] = a * r[k] - b * piv[k];
        piv[k] = top;
      }
    }
  }

  void reduce() {
    for (auto i = rows.begin(); i != rows.end(); ++i) {
      const size_t c = i->first;
      const Row& pr = i->second;
      for (auto j = rows.begin(); j != i; ++j) {
        Row& r = j->second;
        if (r[c] == 0) continue;
        mpz_class qt;
        mpz_fdiv_q(qt.get_mpz_t(), r[c].get_mpz_t(), pr[c].get_mpz_t());
        if (qt == 0) continue;
        for (size_t k = c; k < r.size(); ++k) r[k] -= qt * pr[k];
      }
    }
  }

  IntRows take() {
    IntRows out;
    for (auto& [c, r] : rows) out.push_back(std::move(r));
    rows.clear();
    return out;
  }
};

size_t pivot(const Row& r) {
  for (size_t c = 0; c < r.size(); ++c)
    if (r[c] != 0) return c;
  return r.size();
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace

IntRows hnf(const IntRows& rows, size_t cols) {
  Echelon e;
  for (const auto& r : rows) {
    if (r.size() != cols) throw DomainError("hnf: ragged matrix");
    e.insert(r);
  }
  e.reduce();
  return e.take();
}

std::optional<std::vector<mpz_class>> solve_in_span(const IntRows& h, std::vector<mpz_class> r) {
  std::vector<mpz_class> x;
  for (const auto& row : h) {
    const size_t c = pivot(row);
    if (!mpz_divisible_p(r[c].get_mpz_t(), row[c].get_mpz_t())) return std::nullopt;
    const mpz_class k = r[c] / row[c];
    if (k != 0)
      for (size_t j = c; j < r.size(); ++j) r[j] -= k * row[j];
    x.push_back(k);
  }
  for (const auto& v : r)
    if (v != 0) return std::nullopt;
  return x;
}

OLattice::OLattice(FieldPtr field, size_t n) : field_(std::move(field)), n_(n) {}

OLattice OLattice::span(FieldPtr field, size_t n, const std::vector<Vector>& generators) {
  OLattice l(std::move(field), n);
  l.add(generators);
  return l;
}

std::vector<mpz_class> OLattice::flatten(const Vector& v, const mpz_class& den) const {
  if (v.size() != n_) throw DomainError("lattice: vector of wrong length");
  const size_t phi = static_cast<size_t>(field_->phi());
  std::vector<mpz_class> out(n_ * phi, 0);
  for (size_t k = 0; k < n_; ++k) {
    const CycNum& x = v[k];
    if (!x.field() || x.is_zero()) continue;
    const mpz_class f = den / x.den();
    for (size_t j = 0; j < x.num().size(); ++j) out[k * phi + j] = x.num()[j] * f;
  }
  return out;
}

void OLattice::rescale(const mpz_class& den) {
  if (den == den_) return;
  const mpz_class f = den / den_;
  for (auto& r : zbasis_)
    for (auto& x : r) x *= f;
  den_ = den;
}

void OLattice::canonicalize() {
  mpz_class g = den_;
  for (const auto& r : zbasis_)
    for (const auto& x : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (zbasis_.empty()) g = den_;
  if (g == 1) return;
  for (auto& r : zbasis_)
    for (auto& x : r) x /= g;
  den_ /= g;
}

bool OLattice::contains(const Vector& v) const {
  mpz_class d = den_;
  for (const auto& x : v)
    if (x.field()) d = lcm(d, x.den());
  auto w = flatten(v, d);
  const mpz_class f = d / den_;
  for (auto& x : w) {
    if (!mpz_divisible_p(x.get_mpz_t(), f.get_mpz_t())) return false;
    x /= f;
  }
  return solve_in_span(zbasis_, std::move(w)).has_value();
}

bool OLattice::contains(const OLattice& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

std::vector<Vector> OLattice::add(const std::vector<Vector>& gens) {
  std::vector<Vector> added;
  const size_t phi = static_cast<size_t>(field_->phi());
  for (const auto& g : gens) {
    if (contains(g)) continue;
    mpz_class d = den_;
    for (const auto& x : g)
      if (x.field()) d = lcm(d, x.den());
    rescale(d);
    Echelon e;
    for (auto& r : zbasis_) e.insert(std::move(r));
    Vector m = g;
    const CycNum zeta = CycNum::zeta_power(field_, 1);
    for (size_t k = 0; k < phi; ++k) {
      e.insert(flatten(m, den_));
      for (auto& x : m)
        if (x.field()) x *= zeta;
    }
    e.reduce();
    zbasis_ = e.take();
    canonicalize();
    generators_.push_back(g);
    added.push_back(g);
  }
  return added;
}

std::vector<Vector> OLattice::z_vectors() const {
  const size_t phi = static_cast<size_t>(field_->phi());
  std::vector<Vector> out;
  for (const auto& r : zbasis_) {
    Vector v;
    for (size_t k = 0; k < n_; ++k)
      v.emplace_back(field_, std::vector<mpz_class>(r.begin() + k * phi, r.begin() + (k + 1) * phi), den_);
    out.push_back(std::move(v));
  }
  return out;
}

bool OLattice::zeta_stable() const {
  const CycNum zeta = CycNum::zeta_power(field_, 1);
  for (auto v : z_vectors()) {
    for (auto& x : v) x *= zeta;
    if (!contains(v)) return false;
  }
  return true;
}

bool lattice_equal(const OLattice& a, const OLattice& b) {
  if (a.p() != b.p() || a.ambient_rank() != b.ambient_rank()) throw DomainError("lattices live in different spaces");
  return a == b;
}

mpz_class lattice_index(const OLattice& inner, const OLattice& outer) {
  if (!outer.contains(inner)) throw DomainError("lattice_index: not a sublattice");
  if (inner.z_rank() != outer.z_rank()) throw DomainError("lattice_index: infinite index");
  const mpz_class d = lcm(inner.den(), outer.den());
  auto det = [&](const OLattice& l) {
    mpz_class v = 1;
    for (const auto& r : l.zbasis()) v *= r[pivot(r)] * (d / l.den());
    return v;
  };
  return det(inner) / det(outer);
}

Vector apply(const Matrix& op, const Vector& x) {
  if (op.size() != x.size()) throw DomainError("apply: dimension mismatch");
  Vector y(op.empty() ? 0 : op[0].size(), CycNum());
  for (size_t i = 0; i < x.size(); ++i) {
    if (!x[i].field() || x[i].is_zero()) continue;
    for (size_t j = 0; j < y.size(); ++j) y[j] += x[i] * op[i][j];
  }
  return y;
}

SaturateResult saturate(const std::vector<Vector>& seed, const std::vector<Matrix>& ops, long p, int cap) {
  if (cap < 1) throw DomainError("saturate: cap must be at least 1");
  if (seed.empty()) throw DomainError("saturate: empty seed");
  auto f = ring::CycField::get(p);
  SaturateResult res{OLattice(f, seed.front().size()), 0, false, {}};
  std::vector<Vector> frontier = res.lattice.add(seed);
  res.z_ranks.push_back(res.lattice.z_rank());
  while (true) {
    std::vector<Vector> images;
    for (const auto& op : ops)
      for (const auto& g : frontier) images.push_back(apply(op, g));
    frontier = res.lattice.add(images);
    if (frontier.empty()) {
      res.stabilized = true;
      return res;
    }
    ++res.iterations;
    res.z_ranks.push_back(res.lattice.z_rank());
    if (res.iterations >= cap) return res;
  }
}

}  // namespace tqft::lattice
