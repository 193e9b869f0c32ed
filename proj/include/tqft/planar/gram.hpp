#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "tqft/planar/arrangement.hpp"
#include "tqft/ring/matrix.hpp"

namespace tqft::planar {

using ring::Matrix;

struct HigherGramReport {
  long p = 0;
  unsigned genus = 0;
  std::string basis;
  Matrix gram;
  CycNum det;
  std::optional<long> associate_exponent;  // det ~ (1-q)^e
  std::optional<long> valuation;           // valuation_1mq(det) when det lies in O+
  bool unimodular = false;
  bool entries_in_plus = false;
  long r = 0;                   // rank
  long N = 0;                   // total curve count of the arrangement set
  long expected_exponent = 0;
};

/// Rows are arrangements, columns the graph basis.
Matrix expansion_matrix_genus2(long p, CurveColor c);
Matrix expansion_matrix_genus3(CurveColor c);
/// Diagonal of the form on the graph basis.
std::vector<CycNum> graph_norms_genus2(long p);
std::vector<CycNum> graph_norms_genus3();

/// Gram = M * diag(norms) * M^*.
Matrix gram_from_expansion(const Matrix& m, const std::vector<CycNum>& norms);

/// basis in {"G", "A", "Av"}; throws RefutationError on an associate-class mismatch.
HigherGramReport gram_genus2(long p, const std::string& basis);
/// color in {"z", "v", "omega"}; the form is multiplied by i so that it is O+-valued.
HigherGramReport genus3_p5_report(CurveColor color);

struct ParityCertificate {
  long p = 0;
  unsigned genus = 0;
  long r = 0;
  long valuation = 0;
  long predicted = 0;  // (d-1) g r
  bool not_unimodular = false;
};

/// Compares the parity of valuation_1mq(det) with (d-1)gr; odd means no O+-basis is unimodular.
ParityCertificate non_unimodular_witness(const HigherGramReport& report);

nlohmann::json to_json(const HigherGramReport& r);
nlohmann::json to_json(const ParityCertificate& c);

}  // namespace tqft::planar
