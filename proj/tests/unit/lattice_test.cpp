#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "tqft/errors.hpp"
#include "tqft/genus1/torus.hpp"
#include "tqft/lattice/lattice.hpp"

using namespace tqft;
using namespace tqft::lattice;

namespace {

// integer determinant by cofactor expansion, small sizes only
mpz_class det_small(const IntRows& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  mpz_class s = 0;
  for (size_t c = 0; c < n; ++c) {
    IntRows minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<mpz_class> row;
      for (size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const mpz_class t = m[0][c] * det_small(minor);
    s += (c % 2 == 0) ? t : mpz_class(-t);
  }
  return s;
}

// gcd of maximal minors = covolume of the row lattice
mpz_class minor_gcd(const IntRows& rows, size_t cols) {
  mpz_class g = 0;
  const size_t n = rows.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<size_t>(__builtin_popcount(mask)) != cols) continue;
    IntRows sub;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(rows[i]);
    const mpz_class d = det_small(sub);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  }
  return g;
}

std::vector<Vector> coords_of(const std::vector<genus1::TorusVector>& b) {
  std::vector<Vector> out;
  for (const auto& x : b) out.push_back(x.coords);
  return out;
}

OLattice basis_lattice(long p, const char* name) {
  return OLattice::span(ring::CycField::get(p), static_cast<size_t>((p - 1) / 2), coords_of(genus1::basis(p, name)));
}

}  // namespace

TEST_CASE("hnf small cases") {
  CHECK(hnf({{1, 0}, {0, 1}}, 2) == IntRows{{1, 0}, {0, 1}});
  CHECK(hnf({}, 3).empty());
  CHECK(hnf({{2, 0}, {0, 3}, {1, 1}}, 2) == IntRows{{1, 0}, {0, 1}});
  CHECK(hnf({{2, 0}, {0, 3}, {1, 3}}, 2) == IntRows{{1, 0}, {0, 3}});
  CHECK(hnf({{0, 0}, {0, 0}}, 2).empty());
  CHECK_THROWS_AS(hnf({{1, 2}, {3}}, 2), DomainError);
}

TEST_CASE("hnf preserves the row lattice on random full-rank instances") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    IntRows m(5, std::vector<mpz_class>(3));
    for (auto& r : m)
      for (auto& x : r) x = dist(rng);
    const mpz_class cov = minor_gcd(m, 3);
    if (cov == 0) continue;
    const IntRows h = hnf(m, 3);
    REQUIRE(h.size() == 3);
    mpz_class piv = 1;
    for (size_t i = 0; i < 3; ++i) {
      CHECK(h[i][i] > 0);
      for (size_t j = 0; j < i; ++j) CHECK(h[i][j] == 0);
      for (size_t j = 0; j < i; ++j) CHECK((h[j][i] >= 0 && h[j][i] < h[i][i]));
      piv *= h[i][i];
    }
    CHECK(piv == abs(cov));
    for (const auto& r : m) CHECK(solve_in_span(h, r).has_value());
    CHECK(hnf(h, 3) == h);
  }
}

TEST_CASE("O-lattices are zeta-stable and self-equal") {
  for (long p : {5, 7}) {
    for (const char* b : {"e", "omega", "v"}) {
      const auto l = basis_lattice(p, b);
      CHECK(l.zeta_stable());
      CHECK(l.z_rank() == static_cast<size_t>((p - 1) / 2 * l.field()->phi()));
      CHECK(lattice_equal(l, l));
      CHECK(lattice_index(l, l) == 1);
    }
  }
}

TEST_CASE("omega and v lattices coincide") {
  for (long p : {5, 7, 11, 13}) CHECK(lattice_equal(basis_lattice(p, "omega"), basis_lattice(p, "v")));
}

TEST_CASE("e lattice has finite index in v lattice given by a norm") {
  for (long p : {5, 7}) {
    const auto e = basis_lattice(p, "e");
    const auto v = basis_lattice(p, "v");
    CHECK_FALSE(lattice_equal(e, v));
    const mpq_class n = ring::determinant(genus1::coordinates(genus1::basis_v(p))).norm();
    const mpz_class idx = lattice_index(e, v);
    CHECK(idx > 1);
    CHECK(mpq_class(idx) * abs(n) == 1);
    CHECK_THROWS_AS(lattice_index(v, e), DomainError);
  }
}

TEST_CASE("saturation from the e-basis under t and S reaches the v lattice") {
  for (long p : {5, 7}) {
    const auto t = genus1::twist_matrix_e(p);
    const auto s = genus1::s_matrix_e(p);
    auto r = saturate(coords_of(genus1::basis_e(p)), {t, s}, p);
    CHECK(r.stabilized);
    CHECK(r.iterations <= 5);
    CHECK(lattice_equal(r.lattice, basis_lattice(p, "v")));
    for (size_t i = 1; i < r.z_ranks.size(); ++i) CHECK(r.z_ranks[i] >= r.z_ranks[i - 1]);
    for (const auto& g : r.lattice.z_vectors()) {
      CHECK(r.lattice.contains(apply(t, g)));
      CHECK(r.lattice.contains(apply(s, g)));
    }
  }
}

TEST_CASE("saturation fixed points and the omega orbit") {
  const long p = 5;
  const auto t = genus1::twist_matrix_e(p);
  auto r = saturate(coords_of(genus1::basis_v(p)), {t}, p);
  CHECK(r.stabilized);
  CHECK(r.iterations == 0);
  auto w = saturate({genus1::omega(p).coords}, {t}, p);
  CHECK(w.stabilized);
  CHECK(lattice_equal(w.lattice, basis_lattice(p, "omega")));
  auto capped = saturate(coords_of(genus1::basis_e(p)), {t, genus1::s_matrix_e(p)}, p, 1);
  CHECK_FALSE(capped.stabilized);
  CHECK_THROWS_AS(saturate({}, {t}, p), DomainError);
}
