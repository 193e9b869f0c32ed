#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "tl_oracle.hpp"
#include "tqft/errors.hpp"
#include "tqft/recoupling/recoupling.hpp"

using namespace tqft::recoupling;
using tqft::ring::CycField;
using tqft::ring::is_associate;
using tqft::ring::is_unit;
using tqft::ring::surgery_D;

namespace {

// Rank polynomials for p = 4k+1 at genus 3 and genus 5, with their common denominators.
mpz_class rank_poly_g3(long k) {
  const long c[] = {0, 3, 32, 120, 200, 192, 128};
  mpz_class s = 0, kp = 1;
  for (long e : c) {
    s += kp * e;
    kp *= k;
  }
  return s / 45;
}

mpz_class rank_poly_g5(long k) {
  const long c[] = {0, 45, 864, 6892, 30184, 83760, 172512, 304896, 458112, 542720, 487424, 294912, 98304};
  mpz_class s = 0, kp = 1;
  for (long e : c) {
    s += kp * e;
    kp *= k;
  }
  return s / 14175;
}

}  // namespace

TEST_CASE("quantum integers and admissibility") {
  auto f = CycField::get(7);
  CHECK(tqft::ring::qint(f, 1) == CycNum(f, 1));
  CHECK(admissible(1, 1, 2, 5));
  CHECK_FALSE(admissible(1, 1, 1, 5));
  CHECK_FALSE(admissible(3, 3, 2, 5));
  CHECK_FALSE(admissible(0, 1, 3, 7));
  CHECK_THROWS_AS(qfactorial(7, f), tqft::DomainError);
  CHECK_THROWS_AS(theta(1, 1, 1, f), tqft::DomainError);
}

TEST_CASE("theta examples, symmetry, and the Temperley-Lieb oracle") {
  for (long p : {5L, 7L}) {
    auto f = CycField::get(p);
    CHECK(theta(0, 0, 0, f) == CycNum(f, 1));
    for (long i = 0; i <= p - 2; ++i) CHECK(theta(i, i, 0, f) == loop_value(i, f));
    for (int n = 0; n <= std::min<int>(4, p - 2); ++n) CHECK(tqft::testing::tl::trace(tqft::testing::tl::jones_wenzl(n, f), f) == loop_value(n, f));
    for (long a = 0; a <= 4; ++a)
      for (long b = 0; b <= 4; ++b)
        for (long c = 0; c <= 4; ++c) {
          if (!admissible(a, b, c, p)) continue;
          const CycNum t = theta(a, b, c, f);
          CHECK(t == theta(b, a, c, f));
          CHECK(t == theta(c, b, a, f));
          CHECK(t == theta(a, c, b, f));
          CHECK(t == theta(b, c, a, f));
          CHECK(t == theta(c, a, b, f));
          CAPTURE(p);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(c);
          CHECK(t == tqft::testing::tl::theta(static_cast<int>(a), static_cast<int>(b), static_cast<int>(c), f));
        }
  }
}

TEST_CASE("tetrahedron reduces to theta and has tetrahedral symmetry") {
  auto f = CycField::get(7);
  for (long x = 0; x <= 4; ++x)
    for (long y = 0; y <= 4; ++y)
      for (long z = 0; z <= 4; ++z)
        if (admissible(x, y, z, 7)) CHECK(tet(0, x, x, y, y, z, f) == theta(x, y, z, f));
  // Relabel vertices by a permutation; edge e_ij moves to e_{s(i)s(j)}.
  const std::array<long, 6> e{2, 3, 1, 1, 3, 2};  // e12 e13 e14 e23 e24 e34
  auto edge = [&](std::array<int, 4> s, int i, int j) {
    int a = std::min(s[i], s[j]), b = std::max(s[i], s[j]);
    const int idx[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return e[idx[a][b]];
  };
  const CycNum base = tet(e[0], e[1], e[2], e[3], e[4], e[5], f);
  std::array<int, 4> s{0, 1, 2, 3};
  do {
    CHECK(tet(edge(s, 0, 1), edge(s, 0, 2), edge(s, 0, 3), edge(s, 1, 2), edge(s, 1, 3), edge(s, 2, 3), f) == base);
  } while (std::next_permutation(s.begin(), s.end()));
}

TEST_CASE("graph basis norms") {
  for (long p : {5L, 7L}) {
    auto f = CycField::get(p);
    const CycNum D = surgery_D(f);
    CHECK(graph_basis_norm(1, {{0}, {}}, f) == D);
    CHECK(graph_basis_norm(2, {{0, 0}, {0}}, f) == D * D);
    CHECK(graph_basis_norm(3, {{0, 0, 0}, {0, 0, 0}}, f) == D * D * D);
    for (long i = 0; i <= p - 2; ++i)
      for (long j = 0; j <= p - 2; ++j)
        for (long k = 0; k <= p - 2; k += 2) {
          Coloring c{{i, j}, {k}};
          if (!admissible(c, p)) continue;
          CHECK(is_associate(graph_basis_norm(2, c, f), D * D));
          if (k == 0) CHECK(graph_basis_norm(2, c, f) == D * D);
        }
  }
  auto f5 = CycField::get(5);
  CHECK(is_associate(graph_basis_norm(2, {{1, 1}, {2}}, f5), surgery_D(f5).pow(2)));
  for (long k1 : {0L, 2L})
    for (long k2 : {0L, 2L})
      for (long k3 : {0L, 2L})
        for (long c = 0; c <= 1; ++c) {
          Coloring col{{c, 1, 1}, {k1, k2, k3}};
          if (admissible(col, 5)) CHECK(is_associate(graph_basis_norm(3, col, f5), surgery_D(f5).pow(3)));
        }
  CHECK_THROWS_AS(graph_basis_norm(2, {{0, 0}, {2}}, f5), tqft::DomainError);
}

TEST_CASE("rank counts") {
  CHECK(count_admissible(2, 5, Constraint::Even) == 5);
  CHECK(count_admissible(3, 5, Constraint::Even) == 15);
  CHECK(count_admissible(5, 5, Constraint::Even) == 175);
  CHECK(count_admissible(3, 13, Constraint::Even) == 3549);
  for (long k = 1; k <= 3; ++k) {
    CHECK(count_admissible(3, 4 * k + 1, Constraint::Even) == rank_poly_g3(k));
    CHECK(count_admissible(5, 4 * k + 1, Constraint::Even) == rank_poly_g5(k));
  }
  for (long p : {5L, 7L, 11L, 13L}) {
    const long d = (p - 1) / 2;
    CHECK(count_admissible(2, p, Constraint::Even) == d * (d + 1) * (2 * d + 1) / 6);
    CHECK(count_admissible(1, p, Constraint::Even) == d);
    for (unsigned g = 1; g <= 5; ++g)
      CHECK(count_admissible(g, p, Constraint::Even) == count_admissible(g, p, Constraint::LowLoops));
  }
  CHECK_THROWS_AS(count_admissible(2, 8, Constraint::Even), tqft::DomainError);
}

TEST_CASE("Verlinde floating cross-check") {
  for (long p : {3L, 5L, 7L, 11L, 13L})
    for (unsigned g = 1; g <= 4; ++g) {
      const double v = verlinde_float(g, p);
      const double n = count_admissible(g, p, Constraint::Even).get_d();
      CHECK(std::abs(v - n) < 1e-6 * std::max(1.0, n));
    }
}

TEST_CASE("reflection units") {
  auto f5 = CycField::get(5);
  auto [a, b] = reflection_units(2, 0, 0, f5);
  CHECK(is_unit(a * b));
  auto f7 = CycField::get(7);
  auto [c, d] = reflection_units(3, 1, 2, f7);
  CHECK(is_unit(c));
  CHECK(is_unit(d));
  CHECK_THROWS_AS(reflection_units(0, 0, 2, f5), tqft::DomainError);
  for (long p : {5L, 7L}) {
    auto f = CycField::get(p);
    for (long i = 0; i <= p - 2; ++i)
      for (long j = 0; j <= p - 2; ++j)
        for (long k = 0; k <= p - 2; k += 2) {
          if (!admissible(Coloring{{i, j}, {k}}, p)) continue;
          auto [u1, u2] = reflection_units(i, j, k, f);
          CHECK(is_unit(u1));
          CHECK(is_unit(u2));
          const CycNum u = u1 * u2;
          CHECK(graph_basis_norm(2, {{i, j}, {k}}, f) == u * u.conj() * graph_basis_norm(2, {{p - 2 - i, j}, {k}}, f));
        }
  }
}
