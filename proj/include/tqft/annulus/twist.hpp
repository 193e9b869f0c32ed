#pragma once

#include <gmpxx.h>

#include <vector>

#include "tqft/annulus/skein.hpp"
#include "tqft/ring/laurent.hpp"

namespace tqft::annulus {

using LaurentMatrix = std::vector<std::vector<ring::IntLaurent>>;

enum class Direction {
  ZPlus2ToE,  // row j: (z+2)^j in e_0..e_{n-1}
  EToZPlus2,  // row j: e_j in (z+2)^0..(z+2)^{n-1}
};

/// Integer change of basis between {(z+2)^j} and {e_j}, j < n, from the closed binomial formulas.
IntMatrix change_of_basis(unsigned n, Direction dir);

/// S_{m,i,n}(A) = (1/n) sum_{k=i}^n k^m C(2n,n-k) C(k+i-1,k-i) A^{k^2}.
ring::IntLaurent S_poly(unsigned m, unsigned i, unsigned n);
/// The q-variant with an extra (-1)^k inside the sum and A^{k^2} replaced by q^{k^2}; polynomial in q.
ring::IntLaurent S_tilde_poly(unsigned m, unsigned i, unsigned n);

/// mu_i = (-1)^i A^{i^2+2i}.
ring::IntLaurent mu(unsigned i);

/// Twist map on span{1, v, ..., v^{n-1}}: row j holds t(v^j) in v-coordinates.
/// Throws RefutationError carrying (i, n) if an entry is not in Z[A, A^-1].
LaurentMatrix twist_matrix_v(unsigned n);
/// Square of the twist on span{1, vt, ..., vt^{n-1}}, vt = (z+2)/(1-q); entries in Z[q, q^-1].
LaurentMatrix twist_matrix_vtilde_sq(unsigned n);

/// True iff the v-basis twist matrix becomes diag(mu_0, ..., mu_{n-1}) in the e-basis.
bool twist_conjugates_to_mu(const LaurentMatrix& t);
/// Same check for the t^2 matrix in the vt-basis against diag(mu_i^2).
bool twist_sq_conjugates_to_mu_sq(const LaurentMatrix& t2);

}  // namespace tqft::annulus
