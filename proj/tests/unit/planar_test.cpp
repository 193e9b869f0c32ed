#include <doctest.h>

#include "tqft/errors.hpp"
#include "tqft/planar/arrangement.hpp"
#include "tqft/planar/gram.hpp"

using namespace tqft;
using namespace tqft::planar;

namespace {

long rank_formula(long d) { return d * (d + 1) * (2 * d + 1) / 6; }

size_t graph_index(const std::vector<recoupling::Coloring>& b, long i, long j, long k) {
  for (size_t n = 0; n < b.size(); ++n)
    if (b[n].loops == std::vector<long>{i, j} && b[n].legs == std::vector<long>{k}) return n;
  return b.size();
}

}  // namespace

TEST_CASE("genus-2 arrangement counts") {
  for (long p : {5, 7, 11, 13}) {
    const long d = (p - 1) / 2;
    const auto a = arrangement_set_genus2(p);
    long n = 0;
    for (const auto& x : a) n += x.curve_count();
    CHECK(static_cast<long>(a.size()) == rank_formula(d));
    CHECK(n == (d - 1) * rank_formula(d));
    CHECK(graph_basis_genus2(p).size() == a.size());
  }
  const auto a5 = arrangement_set_genus2(5);
  CHECK(a5 == std::vector<Arrangement2>{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {0, 0, 1}});
}

TEST_CASE("genus-2 uncolored expansion is unit triangular with the stated support") {
  for (long p : {5, 7, 11}) {
    const auto arr = arrangement_set_genus2(p);
    const auto basis = graph_basis_genus2(p);
    const auto m = expansion_matrix_genus2(p, CurveColor::Z);
    for (size_t r = 0; r < arr.size(); ++r) {
      const auto& a = arr[r];
      const size_t lead = graph_index(basis, a.alpha + a.gamma, a.beta + a.gamma, 2 * a.gamma);
      CHECK(lead == r);
      CHECK(m[r][lead] == CycNum(m[r][lead].field(), 1));
      for (size_t c = 0; c < basis.size(); ++c) {
        if (m[r][c].is_zero()) continue;
        CHECK(c <= r);
        CHECK(m[r][c].is_integral());
        CHECK(basis[c].loops[0] <= a.alpha + a.gamma);
        CHECK(basis[c].loops[1] <= a.beta + a.gamma);
        CHECK(basis[c].legs[0] <= 2 * a.gamma);
      }
    }
  }
}

TEST_CASE("small genus-2 expansions") {
  const auto b = graph_basis_genus2(5);
  auto e = expand_arrangement(Arrangement2{0, 0, 0}, CurveColor::Z, 5);
  CHECK(e[graph_index(b, 0, 0, 0)] == CycNum(e[0].field(), 1));
  e = expand_arrangement(Arrangement2{1, 0, 0}, CurveColor::Z, 5);
  for (size_t n = 0; n < b.size(); ++n) CHECK(e[n] == CycNum(e[0].field(), n == graph_index(b, 1, 0, 0) ? 1 : 0));
  e = expand_arrangement(Arrangement2{1, 1, 0}, CurveColor::Z, 5);
  for (size_t n = 0; n < b.size(); ++n)
    if (n != graph_index(b, 0, 0, 0) && n != graph_index(b, 1, 1, 0)) CHECK(e[n].is_zero());
  CHECK(e[graph_index(b, 1, 1, 0)] == CycNum(e[0].field(), 1));
}

TEST_CASE("genus-2 Gram determinants") {
  for (long p : {5, 7}) {
    const long d = (p - 1) / 2;
    const long r = rank_formula(d);
    auto g = gram_genus2(p, "G");
    CHECK(*g.associate_exponent == 2 * (d - 1) * r);
    auto a = gram_genus2(p, "A");
    CHECK(*a.associate_exponent == 2 * (d - 1) * r);
    auto v = gram_genus2(p, "Av");
    CHECK(v.unimodular);
    CHECK(*v.associate_exponent == 0);
  }
  CHECK_THROWS_AS(gram_genus2(5, "B"), DomainError);
}

TEST_CASE("v base change has determinant (1-q)^{-N}") {
  for (long p : {5, 7}) {
    const auto mz = expansion_matrix_genus2(p, CurveColor::Z);
    const auto mv = expansion_matrix_genus2(p, CurveColor::V);
    const auto inv = ring::inverse(mz);
    REQUIRE(inv);
    const auto c = mv * *inv;
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = i + 1; j < c.size(); ++j) CHECK(c[i][j].is_zero());
    long n = 0;
    for (const auto& a : arrangement_set_genus2(p)) n += a.curve_count();
    CHECK(ring::associate_exponent(ring::determinant(c)) == -n);
  }
}

TEST_CASE("genus-3 at p = 5") {
  const auto arr = arrangement_set_genus3();
  long curves = 0;
  for (const auto& a : arr) curves += a.curve_count();
  CHECK(arr.size() == 15);
  CHECK(curves == 22);
  const auto basis = graph_basis_genus3();
  for (const auto& c : basis) CHECK(recoupling::admissible(c, 5));
  const auto m = expansion_matrix_genus3(CurveColor::Z);
  for (size_t r = 0; r < m.size(); ++r) {
    CHECK(m[r][r] == CycNum(m[r][r].field(), 1));
    for (size_t c = r + 1; c < m.size(); ++c) CHECK(m[r][c].is_zero());
  }
  for (auto color : {CurveColor::V, CurveColor::Omega}) {
    const auto rep = genus3_p5_report(color);
    CHECK(*rep.associate_exponent == 1);
    CHECK(rep.valuation == 1);
    CHECK(rep.entries_in_plus);
    CHECK_FALSE(rep.unimodular);
    const auto w = non_unimodular_witness(rep);
    CHECK(w.not_unimodular);
    CHECK(w.predicted == 45);
  }
  CHECK(*genus3_p5_report(CurveColor::Z).associate_exponent == 45);
  CHECK_THROWS_AS(expand_arrangement(Arrangement3{{1, 3}}, CurveColor::Z, 5), DomainError);
  CHECK_THROWS_AS(expand_arrangement(Arrangement3{{1}}, CurveColor::Z, 7), DomainError);
}

TEST_CASE("genus-2 parity gives no witness") {
  const auto rep = gram_genus2(5, "Av");
  const auto w = non_unimodular_witness(rep);
  CHECK_FALSE(w.not_unimodular);
  CHECK(w.valuation == 0);
  CHECK_THROWS_AS(non_unimodular_witness(gram_genus2(7, "Av")), DomainError);
}

#include "tqft/genus1/torus.hpp"
#include "tqft/planar/oracle.hpp"

TEST_CASE("pairing oracle anchors") {
  const long p = 5;
  const auto t = genus1::params(p);
  using bracket::Color;
  using bracket::ColorKind;
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 2; ++j) {
      const auto dgm = pairing_diagram_genus1(Color{ColorKind::E, i, false}, Color{ColorKind::E, j, false});
      CHECK(oracle_pairing(dgm, p) == (i == j ? t.D : CycNum(t.D.field(), 0)));
    }
  CHECK(oracle_pairing(pairing_diagram_genus2({}, {}, to_bracket_color(CurveColor::Z)), p) == t.D * t.D);
  CHECK(oracle_pairing(pairing_diagram_genus3({}, {}, to_bracket_color(CurveColor::Z)), p) == t.D * t.D * t.D);
}

TEST_CASE("genus-2 Gram entries agree with the diagram oracle at p = 5") {
  const long p = 5;
  const auto arr = arrangement_set_genus2(p);
  for (auto color : {CurveColor::Z, CurveColor::V, CurveColor::Omega}) {
    const auto g = gram_from_expansion(expansion_matrix_genus2(p, color), graph_norms_genus2(p));
    for (size_t i = 0; i < arr.size(); ++i)
      for (size_t j = 0; j < arr.size(); ++j)
        CHECK_MESSAGE(oracle_pairing(pairing_diagram_genus2(arr[i], arr[j], to_bracket_color(color)), p) == g[i][j],
                      to_string(color) << " " << i << "," << j);
  }
}

TEST_CASE("genus-3 Gram entries agree with the diagram oracle at p = 5") {
  const auto arr = arrangement_set_genus3();
  for (auto color : {CurveColor::Z, CurveColor::V}) {
    const auto g = gram_from_expansion(expansion_matrix_genus3(color), graph_norms_genus3());
    for (size_t i = 0; i < arr.size(); ++i)
      for (size_t j = 0; j < arr.size(); ++j)
        CHECK_MESSAGE(oracle_pairing(pairing_diagram_genus3(arr[i], arr[j], to_bracket_color(color)), 5) == g[i][j],
                      to_string(color) << " " << arr[i].name() << "," << arr[j].name());
  }
}
