#include "tqft/bracket/evaluate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tqft/annulus/skein.hpp"
#include "tqft/bracket/cable.hpp"
#include "tqft/errors.hpp"

namespace tqft::bracket {

using ring::CycNum;
using ring::IntLaurent;

namespace {

const IntLaurent kDelta{{-2, -1}, {2, -1}};

// Open path endpoints: partner[x] = y means a partial strand runs between the
// still-unprocessed occurrences of arc labels x and y.
using State = std::vector<std::pair<int, int>>;

State canonical(const std::map<int, int>& partner) {
  State s;
  for (const auto& [x, y] : partner)
    if (x < y) s.emplace_back(x, y);
  return s;
}

// Joins labels x and y in the partner map; returns the number of closed loops (0 or 1).
int join(std::map<int, int>& partner, int x, int y) {
  if (x == y) return 1;
  auto ix = partner.find(x), iy = partner.find(y);
  const bool ox = ix != partner.end(), oy = iy != partner.end();
  if (ox && oy && ix->second == y) {
    partner.erase(x);
    partner.erase(y);
    return 1;
  }
  const int u = ox ? ix->second : x, w = oy ? iy->second : y;
  if (ox) partner.erase(x);
  if (oy) partner.erase(y);
  partner[u] = w;
  partner[w] = u;
  return 0;
}

std::vector<size_t> crossing_order(const std::vector<std::array<int, 4>>& xs) {
  std::vector<size_t> order;
  std::vector<bool> used(xs.size(), false);
  std::multiset<int> open;
  for (size_t step = 0; step < xs.size(); ++step) {
    size_t best = xs.size();
    long best_score = -1;
    for (size_t k = 0; k < xs.size(); ++k) {
      if (used[k]) continue;
      long score = 0;
      for (int l : xs[k]) score += static_cast<long>(open.count(l));
      if (score > best_score) {
        best_score = score;
        best = k;
      }
    }
    used[best] = true;
    order.push_back(best);
    for (int l : xs[best]) {
      auto it = open.find(l);
      if (it != open.end())
        open.erase(it);
      else
        open.insert(l);
    }
  }
  return order;
}

}  // namespace

IntLaurent kauffman_bracket_uncapped(const LinkDiagram& d) {
  std::map<State, IntLaurent> states{{State{}, IntLaurent(1)}};
  std::vector<IntLaurent> delta_pow{IntLaurent(1), kDelta, kDelta * kDelta};
  for (size_t k : crossing_order(d.crossings)) {
    const auto& [a, b, c, e] = d.crossings[k];
    const std::array<std::array<int, 4>, 2> smoothings{{{a, e, b, c}, {a, b, c, e}}};
    const std::array<long, 2> weight{1, -1};
    std::map<State, IntLaurent> next;
    for (const auto& [state, coeff] : states) {
      for (int sm = 0; sm < 2; ++sm) {
        std::map<int, int> partner;
        for (const auto& [x, y] : state) {
          partner[x] = y;
          partner[y] = x;
        }
        const auto& pr = smoothings[sm];
        const int loops = join(partner, pr[0], pr[1]) + join(partner, pr[2], pr[3]);
        next[canonical(partner)] += coeff * delta_pow[loops].shifted(weight[sm]);
      }
    }
    for (auto it = next.begin(); it != next.end();) it = it->second.is_zero() ? next.erase(it) : std::next(it);
    states = std::move(next);
  }
  IntLaurent out = states.count(State{}) ? states[State{}] : IntLaurent();
  return out * kDelta.pow(d.loops);
}

IntLaurent kauffman_bracket(const LinkDiagram& d, const Caps& caps) {
  validate(d);
  if (d.crossings.size() > caps.crossings)
    throw ResourceError("diagram has " + std::to_string(d.crossings.size()) + " crossings, cap is " +
                        std::to_string(caps.crossings));
  return kauffman_bracket_uncapped(d);
}

IntLaurent bracket_z_plus(const LinkDiagram& d, const IntLaurent& c, const Caps& caps) {
  validate(d);
  if (d.crossings.size() > caps.crossings) throw ResourceError("crossing cap exceeded");
  const unsigned mu = component_count(d);
  if (mu > 20) throw ResourceError("too many components for sublink enumeration");
  IntLaurent total;
  for (unsigned long mask = 0; mask < (1UL << mu); ++mask) {
    std::vector<bool> keep(mu);
    unsigned kept = 0;
    for (unsigned k = 0; k < mu; ++k) {
      keep[k] = (mask >> k) & 1UL;
      kept += keep[k];
    }
    total += c.pow(mu - kept) * kauffman_bracket_uncapped(sublink(d, keep));
  }
  return total;
}

IntLaurent bracket_z_plus_2(const LinkDiagram& d, const Caps& caps) { return bracket_z_plus(d, IntLaurent(2), caps); }

IntLaurent bracket_z_plus_qint2(const LinkDiagram& d, const Caps& caps) {
  return bracket_z_plus(d, IntLaurent{{-2, 1}, {2, 1}}, caps);
}

DivisibilityCertificate divisibility_certificate(const LinkDiagram& d, bool qint_variant, const Caps& caps) {
  DivisibilityCertificate cert;
  cert.value = qint_variant ? bracket_z_plus_qint2(d, caps) : bracket_z_plus_2(d, caps);
  cert.mu = component_count(d);
  auto q = ring::divide_by_one_plus_A(cert.value, cert.mu);
  if (!q)
    throw RefutationError("(1+A)^" + std::to_string(cert.mu) + " does not divide " + cert.value.to_string() +
                          "; (1+A)-multiplicity is " +
                          std::to_string(cert.value.is_zero() ? 0 : ring::one_plus_A_multiplicity(cert.value)));
  cert.quotient = *q;
  return cert;
}

bool derivative_congruences(const IntLaurent& f, unsigned mu, long p) {
  if (mu >= static_cast<unsigned long>(p)) throw DomainError("derivative criterion needs mu < p");
  IntLaurent g = f;
  for (unsigned k = 0; k < mu; ++k) {
    if (g.evaluate(-1) % p != 0) return false;
    g = g.derivative();
  }
  return true;
}

bool derivative_congruences(const LinkDiagram& d, long p, const Caps& caps) {
  return derivative_congruences(bracket_z_plus_2(d, caps), component_count(d), p);
}

bool divisible_at_root(const IntLaurent& f, unsigned mu, long p) {
  auto field = ring::CycField::get(p);
  const CycNum one_plus_a = CycNum::from_laurent(field, IntLaurent{{0, 1}, {1, 1}});
  return (CycNum::from_laurent(field, f) / one_plus_a.pow(mu)).is_integral();
}

std::vector<CycNum> color_z_poly(const Color& c, const ring::FieldPtr& f) {
  if (c.conj) {
    Color plain = c;
    plain.conj = false;
    auto v = color_z_poly(plain, f);
    for (auto& x : v) x = x.conj();
    return v;
  }
  auto ints = [&](const std::vector<mpz_class>& v) {
    std::vector<CycNum> out;
    for (const auto& x : v) out.emplace_back(f, x);
    return out;
  };
  switch (c.kind) {
    case ColorKind::Uncolored: return ints({0, 1});
    case ColorKind::ZPower: {
      std::vector<mpz_class> v(c.index + 1);
      v[c.index] = 1;
      return ints(v);
    }
    case ColorKind::E: return ints(annulus::e_poly(c.index));
    case ColorKind::V: return annulus::v_at_root(f).z_coeffs();
    case ColorKind::ZPlus2: return ints({2, 1});
    case ColorKind::ZPlusQint2: return {CycNum::from_laurent(f, IntLaurent{{-2, 1}, {2, 1}}), CycNum(f, 1)};
    case ColorKind::Omega: {
      const long d = (f->p() - 1) / 2;
      std::vector<CycNum> e(static_cast<size_t>(d));
      for (long i = 0; i < d; ++i) e[i] = ring::qint(f, i + 1) * CycNum(f, i % 2 == 0 ? 1 : -1);
      auto s = annulus::RootSkein::from_e_coeffs(e) * ring::surgery_D(f).inverse();
      return s.z_coeffs();
    }
  }
  throw DomainError("unhandled color");
}

CycNum bracket_colored_at_root(const LinkDiagram& d, long p, const Caps& caps) {
  validate(d);
  if (d.crossings.size() > caps.crossings) throw ResourceError("crossing cap exceeded");
  auto f = ring::CycField::get(p);
  const unsigned mu = component_count(d);
  std::vector<std::vector<CycNum>> polys;
  for (unsigned k = 0; k < mu; ++k) polys.push_back(color_z_poly(d.colors.empty() ? Color{} : d.colors[k], f));

  CycNum total(f, 0);
  std::vector<unsigned> w(mu, 0);
  while (true) {
    CycNum coeff(f, 1);
    unsigned width = 0;
    for (unsigned k = 0; k < mu && !coeff.is_zero(); ++k) {
      coeff *= polys[k][w[k]];
      width += w[k];
    }
    if (!coeff.is_zero()) {
      if (width > caps.cable_width)
        throw ResourceError("cable width " + std::to_string(width) + " exceeds cap " +
                            std::to_string(caps.cable_width));
      total += coeff * CycNum::from_laurent(f, kauffman_bracket_uncapped(cable(d, w)));
    }
    unsigned k = 0;
    while (k < mu && ++w[k] == polys[k].size()) w[k++] = 0;
    if (k == mu) break;
  }
  return total;
}

}  // namespace tqft::bracket
