#include "tqft/recoupling/recoupling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "tqft/errors.hpp"

namespace tqft::recoupling {

namespace {

CycNum sign(long n, const FieldPtr& f) { return CycNum(f, n % 2 == 0 ? 1 : -1); }

}  // namespace

bool admissible(long a, long b, long c, long p) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  if (a > b + c || b > a + c || c > a + b) return false;
  return a + b + c <= 2 * (p - 2);
}

CycNum qfactorial(long n, const FieldPtr& f) {
  if (n < 0 || n >= f->p()) throw DomainError("quantum factorial [" + std::to_string(n) + "]! vanishes or is undefined");
  CycNum r(f, 1);
  for (long k = 2; k <= n; ++k) r *= ring::qint(f, k);
  return r;
}

CycNum loop_value(long n, const FieldPtr& f) { return sign(n, f) * ring::qint(f, n + 1); }

CycNum theta(long a, long b, long c, const FieldPtr& f) {
  if (!admissible(a, b, c, f->p()))
    throw DomainError("inadmissible theta triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ")");
  const long m = (a + b - c) / 2, n = (b + c - a) / 2, k = (a + c - b) / 2;
  return sign(m + n + k, f) * qfactorial(m + n + k + 1, f) * qfactorial(m, f) * qfactorial(n, f) *
         qfactorial(k, f) / (qfactorial(m + n, f) * qfactorial(n + k, f) * qfactorial(m + k, f));
}

CycNum tet(long e12, long e13, long e14, long e23, long e24, long e34, const FieldPtr& f) {
  const long p = f->p();
  if (!admissible(e12, e13, e14, p) || !admissible(e12, e23, e24, p) || !admissible(e13, e23, e34, p) ||
      !admissible(e14, e24, e34, p))
    throw DomainError("inadmissible tetrahedron");
  const long a[4] = {(e12 + e13 + e14) / 2, (e12 + e23 + e24) / 2, (e13 + e23 + e34) / 2, (e14 + e24 + e34) / 2};
  const long b[3] = {(e12 + e34 + e13 + e24) / 2, (e12 + e34 + e14 + e23) / 2, (e13 + e24 + e14 + e23) / 2};
  CycNum pre(f, 1);
  for (long bj : b)
    for (long ai : a) pre *= qfactorial(bj - ai, f);
  for (long e : {e12, e13, e14, e23, e24, e34}) pre /= qfactorial(e, f);
  CycNum sum(f, 0);
  for (long s = *std::max_element(a, a + 4); s <= *std::min_element(b, b + 3); ++s) {
    CycNum den(f, 1);
    for (long ai : a) den *= qfactorial(s - ai, f);
    for (long bj : b) den *= qfactorial(bj - s, f);
    sum += sign(s, f) * qfactorial(s + 1, f) / den;
  }
  return pre * sum;
}

bool admissible(const Coloring& c, long p) {
  const size_t g = c.loops.size();
  if (g == 1) return c.legs.empty() && c.loops[0] >= 0 && c.loops[0] <= p - 2;
  if (g == 2)
    return c.legs.size() == 1 && admissible(c.loops[0], c.loops[0], c.legs[0], p) &&
           admissible(c.loops[1], c.loops[1], c.legs[0], p);
  if (g == 3) {
    if (c.legs.size() != 3 || !admissible(c.legs[0], c.legs[1], c.legs[2], p)) return false;
    for (size_t i = 0; i < 3; ++i)
      if (!admissible(c.loops[i], c.loops[i], c.legs[i], p)) return false;
    return true;
  }
  return false;
}

CycNum graph_basis_norm(unsigned genus, const Coloring& c, const FieldPtr& f) {
  if (c.loops.size() != genus || !admissible(c, f->p())) throw DomainError("inadmissible graph coloring");
  // D^g times theta at every vertex over the loop value of every edge.
  CycNum r = ring::surgery_D(f).pow(genus);
  if (genus == 1) return r;
  for (size_t i = 0; i < genus; ++i) {
    const long leg = genus == 2 ? c.legs[0] : c.legs[i];
    r *= theta(c.loops[i], c.loops[i], leg, f) / loop_value(c.loops[i], f);
  }
  if (genus == 2) return r / loop_value(c.legs[0], f);
  for (long k : c.legs) r /= loop_value(k, f);
  return r * theta(c.legs[0], c.legs[1], c.legs[2], f);
}

mpz_class count_admissible(unsigned genus, long p, Constraint constraint) {
  if (p < 3 || p % 2 == 0) throw DomainError("count_admissible needs odd p >= 3");
  if (genus == 0) return 1;
  const long d = (p - 1) / 2, top = p - 2;
  std::vector<long> loop_colors, even_colors;
  for (long c = 0; c <= top; ++c) {
    if (c % 2 == 0) even_colors.push_back(c);
    if (constraint == Constraint::Even ? c % 2 == 0 : c <= d - 1) loop_colors.push_back(c);
  }
  // loops_for[k]: number of admissible loop colors c with (c, c, k) admissible.
  std::vector<mpz_class> loops_for(static_cast<size_t>(top + 1));
  for (long k : even_colors)
    for (long c : loop_colors)
      if (admissible(c, c, k, p)) loops_for[k] += 1;
  if (genus == 1) return static_cast<unsigned long>(loop_colors.size());
  if (genus == 2) {
    mpz_class n = 0;
    for (long k : even_colors) n += loops_for[k] * loops_for[k];
    return n;
  }
  // Transfer along the backbone: weight[b] counts colorings of the part left of backbone edge b.
  std::vector<mpz_class> weight(static_cast<size_t>(top + 1));
  for (long b : even_colors)
    for (long k1 : even_colors)
      for (long k2 : even_colors)
        if (admissible(k1, k2, b, p)) weight[b] += loops_for[k1] * loops_for[k2];
  for (unsigned step = 0; step + 3 < genus; ++step) {
    std::vector<mpz_class> next(static_cast<size_t>(top + 1));
    for (long b2 : even_colors)
      for (long b1 : even_colors)
        for (long k : even_colors)
          if (admissible(b1, k, b2, p)) next[b2] += weight[b1] * loops_for[k];
    weight = std::move(next);
  }
  mpz_class n = 0;
  for (long b : even_colors) n += weight[b] * loops_for[b];
  return n;
}

double verlinde_float(unsigned genus, long p) {
  const long d = (p - 1) / 2;
  double s = 0;
  for (long j = 1; j <= d; ++j) s += std::pow(std::sin(2 * M_PI * j / p), 2.0 - 2.0 * genus);
  return std::pow(p / 4.0, genus - 1.0) * s;
}

std::pair<CycNum, CycNum> reflection_units(long i, long j, long k, const FieldPtr& f) {
  const long p = f->p(), ip = p - 2 - i;
  if (!admissible(Coloring{{i, j}, {k}}, p)) throw DomainError("inadmissible G(i,j,k)");
  if (ip == i) throw DomainError("i = p-2-i has no partner");
  const CycNum c1 = loop_value(ip, f) / theta(i, p - 2, ip, f);
  const CycNum c2 = tet(k, i, i, ip, ip, p - 2, f) / theta(ip, ip, k, f);
  return {c1, c2};
}

}  // namespace tqft::recoupling
