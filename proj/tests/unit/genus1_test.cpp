#include <doctest.h>

#include "tqft/annulus/skein.hpp"
#include "tqft/errors.hpp"
#include "tqft/genus1/torus.hpp"

using namespace tqft;
using namespace tqft::genus1;

namespace {
const long kPrimes[] = {5, 7, 11, 13};
}

TEST_CASE("e-basis Gram is D times identity with det associate to (1-q)^{d(d-1)}") {
  for (long p : kPrimes) {
    const auto t = params(p);
    const auto g = gram(basis_e(p));
    for (long i = 0; i < t.d; ++i)
      for (long j = 0; j < t.d; ++j) CHECK(g[i][j] == (i == j ? t.D : CycNum(t.D.field(), 0)));
    const auto c = verify_unimodular(g);
    REQUIRE(c.associate_exponent);
    CHECK(*c.associate_exponent == t.d * (t.d - 1));
  }
}

TEST_CASE("omega and v bases have unit Gram determinant") {
  for (long p : kPrimes) {
    for (const char* b : {"omega", "v"}) {
      const auto c = verify_unimodular(gram(basis(p, b)));
      CHECK_MESSAGE(c.unit, "p=" << p << " basis=" << b);
    }
  }
}

TEST_CASE("Hermitian symmetry of the Gram matrix") {
  for (long p : kPrimes) {
    const auto g = gram(basis_v(p));
    for (size_t i = 0; i < g.size(); ++i)
      for (size_t j = 0; j < g.size(); ++j) CHECK(g[i][j] == g[j][i].conj());
  }
}

TEST_CASE("omega agrees with its product form and kills the transparent direction") {
  for (long p : kPrimes) {
    CHECK_NOTHROW(check_omega(p));
    const auto w = omega(p);
    const auto t = params(p);
    for (long i = 0; i < t.d; ++i)
      CHECK(hopf_pairing(w, basis_vector(w.field, i)) == (i == 0 ? t.D : CycNum(w.field, 0)));
  }
}

TEST_CASE("twist and S preserve the form") {
  for (long p : kPrimes) {
    const auto t = params(p);
    const Matrix g = gram(basis_e(p));
    const Matrix tm = twist_matrix_e(p);
    CHECK(tm * g * ring::adjoint(tm) == g);
    const Matrix s = s_matrix_e(p);
    CHECK(s * s == ring::identity_matrix(t.D.field(), t.d));
    CHECK(s * g * ring::adjoint(s) == g);
  }
}

TEST_CASE("v-basis pairings match the closed form up to the conjugation twist") {
  for (long p : kPrimes) {
    const auto t = params(p);
    const auto b = basis_v(p);
    for (long i = 0; i < t.d; ++i)
      for (long j = 0; j < t.d; ++j)
        CHECK(hermitian_pairing(b[i], b[j]) == t.A.pow(j) * v_pairing_closed_form(p, i, j));
  }
}

TEST_CASE("reduce folds e_d onto e_{d-1}") {
  for (long p : kPrimes) {
    auto f = ring::CycField::get(p);
    const long d = params(p).d;
    std::vector<CycNum> e(static_cast<size_t>(d + 1), CycNum(f, 0));
    e[d] = CycNum(f, 1);
    const auto r = reduce(annulus::RootSkein::from_e_coeffs(e));
    CHECK(r == basis_vector(f, d - 1));
    std::vector<CycNum> e2(static_cast<size_t>(d + 2), CycNum(f, 0));
    e2[d + 1] = CycNum(f, 1);
    CHECK(reduce(annulus::RootSkein::from_e_coeffs(e2)) == basis_vector(f, d - 2));
  }
}

TEST_CASE("det W valuation and v spans the omega lattice") {
  for (long p : kPrimes) {
    const auto c = det_W_check(p);
    CHECK(*c.exponent == c.expected_exponent);
    CHECK_NOTHROW(v_in_omega_span(p));
    CHECK_NOTHROW(s_matrix(p, "v"));
  }
}

TEST_CASE("singular Gram is rejected") {
  auto f = ring::CycField::get(5);
  Matrix z = ring::zero_matrix(f, 2, 2);
  CHECK_THROWS_AS(verify_unimodular(z), DomainError);
  CHECK_THROWS_AS(basis(5, "nope"), DomainError);
}
