#include "tqft/planar/arrangement.hpp"

#include <map>
#include <tuple>

#include "tqft/annulus/skein.hpp"
#include "tqft/errors.hpp"
#include "tqft/genus1/torus.hpp"

namespace tqft::planar {

using recoupling::Coloring;

namespace {

long half(long p) { return (p - 1) / 2; }

// Memoized recoupling coefficients for one field.
class Coeffs {
 public:
  explicit Coeffs(FieldPtr f) : f_(std::move(f)) {}
  long p() const { return f_->p(); }
  bool adm(long a, long b, long c) const { return recoupling::admissible(a, b, c, p()); }
  const CycNum& delta(long n) {
    auto [it, fresh] = delta_.try_emplace(n);
    if (fresh) it->second = recoupling::loop_value(n, f_);
    return it->second;
  }
  const CycNum& theta(long a, long b, long c) {
    auto [it, fresh] = theta_.try_emplace({a, b, c});
    if (fresh) it->second = recoupling::theta(a, b, c, f_);
    return it->second;
  }
  const CycNum& tet(long a, long b, long c, long d, long e, long g) {
    auto [it, fresh] = tet_.try_emplace({a, b, c, d, e, g});
    if (fresh) it->second = recoupling::tet(a, b, c, d, e, g, f_);
    return it->second;
  }
  // Weight of G(i,.,k) when an e_c curve around both holes absorbs an inner e_a loop.
  CycNum absorb(long a, long c, long i, long k) {
    return delta(i) / theta(a, c, i) * tet(a, c, i, c, i, k) / theta(i, i, k);
  }
  const FieldPtr& field() const { return f_; }

 private:
  FieldPtr f_;
  std::map<long, CycNum> delta_;
  std::map<std::tuple<long, long, long>, CycNum> theta_;
  std::map<std::tuple<long, long, long, long, long, long>, CycNum> tet_;
};

using Key = std::pair<std::vector<long>, std::vector<long>>;

std::map<Key, size_t> index_of(const std::vector<Coloring>& basis) {
  std::map<Key, size_t> m;
  for (size_t n = 0; n < basis.size(); ++n) m[{basis[n].loops, basis[n].legs}] = n;
  return m;
}

annulus::RootSkein color_skein(CurveColor c, const FieldPtr& f) {
  switch (c) {
    case CurveColor::Z: return annulus::RootSkein({CycNum(f, 0), CycNum(f, 1)});
    case CurveColor::V: return annulus::v_at_root(f);
    case CurveColor::Omega: return annulus::RootSkein::from_e_coeffs(genus1::omega(f->p()).coords);
  }
  throw DomainError("unhandled curve color");
}

}  // namespace

CurveColor curve_color_from_string(const std::string& s) {
  if (s == "z") return CurveColor::Z;
  if (s == "v") return CurveColor::V;
  if (s == "omega") return CurveColor::Omega;
  throw DomainError("unknown curve color: " + s);
}

std::string to_string(CurveColor c) {
  switch (c) {
    case CurveColor::Z: return "z";
    case CurveColor::V: return "v";
    case CurveColor::Omega: return "omega";
  }
  return "?";
}

std::string Arrangement3::name() const {
  if (curves.empty()) return "A_";
  std::string s;
  for (unsigned m : curves) {
    s += "A_";
    for (int b = 0; b < 3; ++b)
      if (m & (1u << b)) s += static_cast<char>('1' + b);
  }
  return s;
}

std::vector<Arrangement2> arrangement_set_genus2(long p) {
  const long d = half(p);
  std::vector<Arrangement2> out;
  for (long g = 0; g < d; ++g)
    for (long a = 0; a < d - g; ++a)
      for (long b = 0; b < d - g; ++b) out.push_back({a, b, g});
  return out;
}

std::vector<Arrangement3> arrangement_set_genus3() {
  return {{{}},     {{1}},    {{2}},    {{4}},    {{1, 2}}, {{2, 4}}, {{4, 1}}, {{1, 2, 4}},
          {{3}},    {{6}},    {{5}},    {{3, 4}}, {{6, 1}}, {{5, 2}}, {{7}}};
}

std::vector<Coloring> graph_basis_genus2(long p) {
  const long d = half(p);
  std::vector<Coloring> out;
  for (long k = 0; k <= p - 3; k += 2)
    for (long i = k / 2; i < d; ++i)
      for (long j = k / 2; j < d; ++j) out.push_back({{i, j}, {k}});
  return out;
}

std::vector<Coloring> graph_basis_genus3() {
  std::vector<Coloring> out;
  for (const auto& a : arrangement_set_genus3()) {
    Coloring c{{0, 0, 0}, {0, 0, 0}};
    for (unsigned m : a.curves) {
      const bool multi = (m & (m - 1)) != 0;
      for (int b = 0; b < 3; ++b)
        if (m & (1u << b)) {
          c.loops[b] = 1;
          if (multi) c.legs[b] = 2;
        }
    }
    out.push_back(c);
  }
  return out;
}

std::vector<CycNum> color_power(CurveColor c, long m, const FieldPtr& f) {
  if (m < 0) throw DomainError("negative color power");
  return genus1::reduce(color_skein(c, f).pow(static_cast<unsigned>(m), CycNum(f, 1))).coords;
}

std::vector<CycNum> expand_arrangement(const Arrangement2& arr, CurveColor color, long p) {
  auto f = ring::CycField::get(p);
  const long d = half(p);
  if (arr.alpha < 0 || arr.beta < 0 || arr.gamma < 0) throw DomainError("negative curve count");
  const auto basis = graph_basis_genus2(p);
  const auto index = index_of(basis);
  std::vector<CycNum> out(basis.size(), CycNum(f, 0));
  Coeffs cf(f);
  const auto x1 = color_power(color, arr.alpha, f);
  const auto x2 = color_power(color, arr.beta, f);
  const auto x3 = color_power(color, arr.gamma, f);

  auto deposit = [&](long i, long j, long k, CycNum w) {
    if (i > d - 1) {
      auto [c1, c2] = recoupling::reflection_units(i, j, k, f);
      w *= c1 * c2;
      i = p - 2 - i;
    }
    if (j > d - 1) {
      auto [c1, c2] = recoupling::reflection_units(j, i, k, f);
      w *= c1 * c2;
      j = p - 2 - j;
    }
    out[index.at({{i, j}, {k}})] += w;
  };

  for (long c = 0; c < d; ++c) {
    if (x3[c].is_zero()) continue;
    for (long k = 0; k <= 2 * c; k += 2) {
      if (!cf.adm(c, c, k)) continue;
      const CycNum wk = x3[c] * cf.delta(k) / cf.theta(c, c, k);
      for (long a = 0; a < d; ++a) {
        if (x1[a].is_zero()) continue;
        for (long i = 0; i <= a + c; ++i) {
          if (!cf.adm(a, c, i) || !cf.adm(i, i, k)) continue;
          const CycNum wi = wk * x1[a] * cf.absorb(a, c, i, k);
          for (long b = 0; b < d; ++b) {
            if (x2[b].is_zero()) continue;
            for (long j = 0; j <= b + c; ++j) {
              if (!cf.adm(b, c, j) || !cf.adm(j, j, k)) continue;
              deposit(i, j, k, wi * x2[b] * cf.absorb(b, c, j, k));
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<CycNum> expand_arrangement(const Arrangement3& arr, CurveColor color, long p) {
  if (p != 5) throw DomainError("genus-3 arrangements are supported at p = 5 only");
  unsigned seen = 0;
  for (unsigned m : arr.curves) {
    if (m == 0 || m > 7) throw DomainError("curve must enclose a nonempty subset of three holes");
    if (seen & m) throw DomainError("nested or repeated genus-3 curves are not supported");
    seen |= m;
  }
  auto f = ring::CycField::get(p);
  const long d = half(p);
  const auto basis = graph_basis_genus3();
  const auto index = index_of(basis);
  std::vector<CycNum> out(basis.size(), CycNum(f, 0));
  Coeffs cf(f);
  const auto x = color_power(color, 1, f);

  struct Term {
    CycNum w;
    std::vector<long> loops, legs;
  };
  std::vector<Term> terms{{CycNum(f, 1), {0, 0, 0}, {0, 0, 0}}};
  for (unsigned m : arr.curves) {
    std::vector<int> holes;
    for (int b = 0; b < 3; ++b)
      if (m & (1u << b)) holes.push_back(b);
    std::vector<Term> next;
    for (const auto& t : terms) {
      for (long c = 0; c < d; ++c) {
        if (x[c].is_zero()) continue;
        Term base = t;
        base.w *= x[c];
        for (int h : holes) base.loops[h] = c;
        if (holes.size() == 1) {
          next.push_back(base);
        } else if (holes.size() == 2) {
          for (long k = 0; k <= 2 * c; k += 2) {
            if (!cf.adm(c, c, k)) continue;
            Term u = base;
            u.w *= cf.delta(k) / cf.theta(c, c, k);
            for (int h : holes) u.legs[h] = k;
            next.push_back(u);
          }
        } else {
          for (long k1 = 0; k1 <= 2 * c; k1 += 2)
            for (long k2 = 0; k2 <= 2 * c; k2 += 2)
              for (long k3 = 0; k3 <= 2 * c; k3 += 2) {
                if (!cf.adm(c, c, k1) || !cf.adm(c, c, k2) || !cf.adm(c, c, k3) || !cf.adm(k1, k2, k3)) continue;
                Term u = base;
                u.w *= cf.delta(k1) / cf.theta(c, c, k1) * cf.delta(k2) / cf.theta(c, c, k2) * cf.delta(k3) /
                       cf.theta(c, c, k3) * cf.tet(c, c, k1, c, k2, k3) / cf.theta(k1, k2, k3);
                u.legs = {k1, k2, k3};
                next.push_back(u);
              }
        }
      }
    }
    terms = std::move(next);
  }
  for (const auto& t : terms) {
    if (!recoupling::admissible(Coloring{t.loops, t.legs}, p)) continue;
    out[index.at({t.loops, t.legs})] += t.w;
  }
  return out;
}

}  // namespace tqft::planar
