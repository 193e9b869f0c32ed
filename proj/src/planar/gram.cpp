#include "tqft/planar/gram.hpp"

#include "tqft/errors.hpp"
#include "tqft/ring/serialize.hpp"

namespace tqft::planar {

namespace {

long half(long p) { return (p - 1) / 2; }

void certify(HigherGramReport& rep) {
  rep.det = ring::determinant(rep.gram);
  if (rep.det.is_zero()) throw RefutationError("degenerate Gram matrix for basis " + rep.basis);
  rep.associate_exponent = ring::associate_exponent(rep.det);
  bool integral = true, plus = true;
  for (const auto& row : rep.gram)
    for (const auto& x : row) {
      integral = integral && x.is_integral();
      plus = plus && ring::in_plus_subring(x);
    }
  rep.entries_in_plus = plus;
  rep.unimodular = integral && ring::is_unit(rep.det);
  if (ring::in_plus_subring(rep.det)) rep.valuation = ring::valuation_1mq(rep.det);
  if (!rep.associate_exponent || *rep.associate_exponent != rep.expected_exponent)
    throw RefutationError("genus-" + std::to_string(rep.genus) + " Gram determinant for basis " + rep.basis +
                          " at p=" + std::to_string(rep.p) + " is not associate to (1-q)^" +
                          std::to_string(rep.expected_exponent));
}

}  // namespace

Matrix expansion_matrix_genus2(long p, CurveColor c) {
  Matrix m;
  for (const auto& a : arrangement_set_genus2(p)) m.push_back(expand_arrangement(a, c, p));
  return m;
}

Matrix expansion_matrix_genus3(CurveColor c) {
  Matrix m;
  for (const auto& a : arrangement_set_genus3()) m.push_back(expand_arrangement(a, c, 5));
  return m;
}

std::vector<CycNum> graph_norms_genus2(long p) {
  auto f = ring::CycField::get(p);
  std::vector<CycNum> out;
  for (const auto& g : graph_basis_genus2(p)) out.push_back(recoupling::graph_basis_norm(2, g, f));
  return out;
}

std::vector<CycNum> graph_norms_genus3() {
  auto f = ring::CycField::get(5);
  std::vector<CycNum> out;
  for (const auto& g : graph_basis_genus3()) out.push_back(recoupling::graph_basis_norm(3, g, f));
  return out;
}

Matrix gram_from_expansion(const Matrix& m, const std::vector<CycNum>& norms) {
  Matrix scaled = m;
  for (auto& row : scaled)
    for (size_t k = 0; k < row.size(); ++k) row[k] *= norms[k];
  return scaled * ring::adjoint(m);
}

HigherGramReport gram_genus2(long p, const std::string& basis) {
  const long d = half(p);
  HigherGramReport rep;
  rep.p = p;
  rep.genus = 2;
  rep.basis = basis;
  const auto arr = arrangement_set_genus2(p);
  rep.r = static_cast<long>(arr.size());
  for (const auto& a : arr) rep.N += a.curve_count();
  const auto norms = graph_norms_genus2(p);
  if (basis == "G") {
    rep.gram = ring::zero_matrix(ring::CycField::get(p), norms.size(), norms.size());
    for (size_t k = 0; k < norms.size(); ++k) rep.gram[k][k] = norms[k];
    rep.expected_exponent = 2 * (d - 1) * rep.r;
  } else if (basis == "A") {
    rep.gram = gram_from_expansion(expansion_matrix_genus2(p, CurveColor::Z), norms);
    rep.expected_exponent = 2 * (d - 1) * rep.r;
  } else if (basis == "Av") {
    rep.gram = gram_from_expansion(expansion_matrix_genus2(p, CurveColor::V), norms);
    rep.expected_exponent = 2 * (d - 1) * rep.r - 2 * rep.N;
  } else {
    throw DomainError("unknown genus-2 basis: " + basis);
  }
  certify(rep);
  return rep;
}

HigherGramReport genus3_p5_report(CurveColor color) {
  const long p = 5;
  auto f = ring::CycField::get(p);
  HigherGramReport rep;
  rep.p = p;
  rep.genus = 3;
  rep.basis = "A(" + to_string(color) + ")";
  const auto arr = arrangement_set_genus3();
  rep.r = static_cast<long>(arr.size());
  for (const auto& a : arr) rep.N += a.curve_count();
  const CycNum i = ring::imag_unit(f);
  Matrix m = expansion_matrix_genus3(color);
  if (color == CurveColor::Omega) {
    // omega = i * (O+ combination), so each omega curve is rescaled by i^-1 to lie in S+
    for (size_t n = 0; n < m.size(); ++n)
      for (auto& x : m[n]) x *= i.pow(-arr[n].curve_count());
  }
  rep.gram = gram_from_expansion(m, graph_norms_genus3());
  for (auto& row : rep.gram)
    for (auto& x : row) x *= i;
  rep.expected_exponent = color == CurveColor::Z ? 3 * (half(p) - 1) * rep.r : 3 * rep.r - 2 * rep.N;
  certify(rep);
  if (!rep.entries_in_plus) throw RefutationError("genus-3 form is not O+-valued on " + rep.basis);
  return rep;
}

ParityCertificate non_unimodular_witness(const HigherGramReport& report) {
  if (report.p % 4 != 1) throw DomainError("parity witness needs p = 1 mod 4");
  if (!report.valuation) throw DomainError("parity witness needs a determinant in O+");
  ParityCertificate c;
  c.p = report.p;
  c.genus = report.genus;
  c.r = report.r;
  c.valuation = *report.valuation;
  c.predicted = (half(report.p) - 1) * static_cast<long>(report.genus) * report.r;
  if ((c.valuation - c.predicted) % 2 != 0)
    throw RefutationError("valuation parity " + std::to_string(c.valuation) + " contradicts (d-1)gr = " +
                          std::to_string(c.predicted));
  c.not_unimodular = c.valuation % 2 != 0;
  return c;
}

nlohmann::json to_json(const HigherGramReport& r) {
  nlohmann::json j{{"p", r.p},
                   {"genus", r.genus},
                   {"basis", r.basis},
                   {"det", ring::to_json(r.det)},
                   {"expected_exponent", r.expected_exponent},
                   {"unimodular", r.unimodular},
                   {"entries_in_plus", r.entries_in_plus},
                   {"r", r.r},
                   {"N", r.N}};
  j["associate_exponent"] = r.associate_exponent ? nlohmann::json(*r.associate_exponent) : nlohmann::json();
  j["valuation"] = r.valuation ? nlohmann::json(*r.valuation) : nlohmann::json();
  return j;
}

nlohmann::json to_json(const ParityCertificate& c) {
  return {{"p", c.p},           {"genus", c.genus},         {"r", c.r},
          {"valuation", c.valuation}, {"predicted", c.predicted}, {"not_unimodular", c.not_unimodular}};
}

}  // namespace tqft::planar
