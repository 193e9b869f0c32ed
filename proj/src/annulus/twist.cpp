#include "tqft/annulus/twist.hpp"

#include <stdexcept>
#include <string>

#include "tqft/errors.hpp"

namespace tqft::annulus {

using ring::binomial;
using ring::IntLaurent;

IntMatrix change_of_basis(unsigned n, Direction dir) {
  IntMatrix m(n, std::vector<mpz_class>(n));
  for (unsigned j = 0; j < n; ++j) {
    const long nn = j + 1;
    for (long k = 1; k <= nn; ++k) {
      if (dir == Direction::ZPlus2ToE) {
        mpz_class num = binomial(2 * nn, nn - k) * k;
        if (num % nn != 0) throw std::logic_error("change_of_basis: non-integral entry");
        m[j][k - 1] = num / nn;
      } else {
        mpz_class c = binomial(nn + k - 1, nn - k);
        m[j][k - 1] = (nn - k) % 2 == 0 ? c : mpz_class(-c);
      }
    }
  }
  return m;
}

namespace {

IntLaurent s_sum(unsigned m, unsigned i, unsigned n, bool tilde) {
  if (i < 1 || i > n) throw DomainError("S_poly requires 1 <= i <= n");
  IntLaurent acc;
  for (long k = i; k <= static_cast<long>(n); ++k) {
    mpz_class km;
    mpz_ui_pow_ui(km.get_mpz_t(), static_cast<unsigned long>(k), m);
    mpz_class c = km * binomial(2L * n, n - k) * binomial(k + i - 1, k - i);
    if (tilde && k % 2 != 0) c = -c;
    acc += IntLaurent::monomial(k * k, c);
  }
  auto out = acc.divide_exact(n);
  if (!out) throw std::logic_error("S_poly: sum not divisible by n");
  return *out;
}

}  // namespace

IntLaurent S_poly(unsigned m, unsigned i, unsigned n) { return s_sum(m, i, n, false); }
IntLaurent S_tilde_poly(unsigned m, unsigned i, unsigned n) { return s_sum(m, i, n, true); }

IntLaurent mu(unsigned i) {
  const long e = static_cast<long>(i) * i + 2L * i;
  return IntLaurent::monomial(e, i % 2 == 0 ? 1 : -1);
}

LaurentMatrix twist_matrix_v(unsigned n) {
  LaurentMatrix t(n, std::vector<IntLaurent>(n));
  for (unsigned j = 0; j < n; ++j) {
    const unsigned nn = j + 1;
    for (unsigned i = 1; i <= nn; ++i) {
      auto g = ring::divide_by_one_plus_A(S_poly(1, i, nn), nn - i);
      if (!g)
        throw RefutationError("(1+A)^{n-i} does not divide S_{1,i,n} at i=" + std::to_string(i) +
                              ", n=" + std::to_string(nn));
      // -A^{-1} (-1)^i S_{1,i,n} / (1+A)^{n-i}
      t[j][i - 1] = g->shifted(-1) * IntLaurent(i % 2 == 0 ? -1 : 1);
    }
  }
  return t;
}

LaurentMatrix twist_matrix_vtilde_sq(unsigned n) {
  LaurentMatrix t(n, std::vector<IntLaurent>(n));
  for (unsigned j = 0; j < n; ++j) {
    const unsigned nn = j + 1;
    for (unsigned i = 1; i <= nn; ++i) {
      auto g = ring::divide_by_linear(S_tilde_poly(1, i, nn), 1, nn - i);
      if (!g)
        throw RefutationError("(1-q)^{n-i} does not divide S~_{1,i,n} at i=" + std::to_string(i) +
                              ", n=" + std::to_string(nn));
      // q^{-1} (-1)^i S~_{1,i,n}(q) / (1-q)^{n-i}, and (q-1)^k = (-1)^k (1-q)^k
      const bool neg = (i + (nn - i)) % 2 != 0;
      t[j][i - 1] = g->shifted(-1) * IntLaurent(neg ? -1 : 1);
    }
  }
  return t;
}

namespace {

// Checks sum_{i<=j} t[j][i] u^{j-i} R[i][k] == R[j][k] ev(k) with u the base-change scalar.
template <typename Ev>
bool conjugates(const LaurentMatrix& t, const IntLaurent& u, Ev ev) {
  const unsigned n = static_cast<unsigned>(t.size());
  const IntMatrix r = change_of_basis(n, Direction::ZPlus2ToE);
  for (unsigned j = 0; j < n; ++j)
    for (unsigned i = j + 1; i < n; ++i)
      if (!t[j][i].is_zero()) return false;
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned k = 0; k < n; ++k) {
      IntLaurent lhs;
      for (unsigned i = 0; i <= j; ++i)
        if (r[i][k] != 0) lhs += t[j][i] * u.pow(j - i) * IntLaurent(r[i][k]);
      if (lhs != IntLaurent(r[j][k]) * ev(k)) return false;
    }
  }
  return true;
}

}  // namespace

bool twist_conjugates_to_mu(const LaurentMatrix& t) {
  return conjugates(t, IntLaurent{{0, 1}, {1, 1}}, [](unsigned k) { return mu(k); });
}

bool twist_sq_conjugates_to_mu_sq(const LaurentMatrix& t2) {
  return conjugates(t2, IntLaurent{{0, 1}, {1, -1}}, [](unsigned k) {
    return IntLaurent::monomial(static_cast<long>(k) * k + 2L * k);
  });
}

}  // namespace tqft::annulus
