#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tqft/annulus/skein.hpp"
#include "tqft/ring/cyclotomic.hpp"
#include "tqft/ring/matrix.hpp"

namespace tqft::genus1 {

using ring::CycNum;
using ring::FieldPtr;
using ring::Matrix;

/// Element of V_p(S^1 x S^1) in the basis e_0, ..., e_{d-1}, d = (p-1)/2.
struct TorusVector {
  FieldPtr field;
  std::vector<CycNum> coords;
  friend bool operator==(const TorusVector& a, const TorusVector& b) { return a.coords == b.coords; }
};

struct TQFTParams {
  long p = 0, d = 0;
  CycNum A, q, kappa, eta, D;
};
TQFTParams params(long p);

/// Image in R[z]/(e_d - e_{d-1}): polynomial remainder, then e-coordinates.
TorusVector reduce(const annulus::RootSkein& s);
TorusVector basis_vector(const FieldPtr& f, long i);

/// D^{-1} sum_{i<d} <e_i> e_i.
TorusVector omega(long p);
/// D prod_{i=1}^{d-1} (z - lambda_i)/(lambda_0 - lambda_i), lambda_i = -q^{i+1} - q^{-i-1}.
TorusVector omega_product(long p);
/// Throws RefutationError if the two constructions differ.
void check_omega(long p);

/// Twist eigenvalues mu_i at the root of unity and the twist t^j applied to a vector.
CycNum mu_at_root(const FieldPtr& f, long i);
TorusVector twist(const TorusVector& x, long j = 1);

/// (x, y) = D sum_i x_i conj(y_i); conjugate-linear in y.
CycNum hermitian_pairing(const TorusVector& x, const TorusVector& y);
/// Bilinear Hopf pairing: <e_i, e_j> = (-1)^{i+j} [(i+1)(j+1)].
CycNum hopf_pairing(const TorusVector& x, const TorusVector& y);

/// Rows are the basis vectors in e-coordinates.
Matrix coordinates(const std::vector<TorusVector>& basis);
Matrix gram(const std::vector<TorusVector>& basis);

struct GramCertificate {
  CycNum det;
  std::optional<long> associate_exponent;  // det ~ (1-q)^e
  bool integral = false;                   // every Gram entry and det in O
  bool unit = false;
};
/// DomainError if the Gram matrix is singular.
GramCertificate verify_unimodular(const Matrix& g);
nlohmann::json to_json(const GramCertificate& c, long p, const std::string& basis);

std::vector<TorusVector> basis_e(long p);
/// t^j(omega), 0 <= j < d.
std::vector<TorusVector> basis_omega(long p);
/// v^j reduced, 0 <= j < d, v = (z+2)/(1+A).
std::vector<TorusVector> basis_v(long p);
std::vector<TorusVector> basis(long p, const std::string& name);  // "e", "omega", "v"

struct DetWCertificate {
  CycNum det;
  long expected_exponent = 0;
  std::optional<long> exponent;
};
/// det of the omega-basis coordinate matrix; RefutationError unless ~ (1-q)^{-d(d-1)/2}.
DetWCertificate det_W_check(long p);

/// C with v^j = sum_k C[j][k] t^k(omega); RefutationError unless C and C^-1 are integral.
Matrix v_in_omega_span(long p);

/// eta * Hopf pairing matrix of a basis; RefutationError if basis "v" has a non-integral entry.
Matrix s_matrix(long p, const std::string& basis_name);
/// Twist in e-coordinates (diagonal) and the S map x -> sum_j (eta <x, e_j>) e_j, as row-action matrices.
Matrix twist_matrix_e(long p);
Matrix s_matrix_e(long p);

/// Closed form of the bilinear v-pairing D C(2i+2j+2, i+j)/((i+j+1)(1+A)^{i+j}).
CycNum v_pairing_closed_form(long p, long i, long j);

}  // namespace tqft::genus1
