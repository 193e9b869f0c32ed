#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "tqft/ring/cyclotomic.hpp"
#include "tqft/ring/matrix.hpp"

namespace tqft::lattice {

using ring::CycNum;
using ring::FieldPtr;
using ring::Matrix;
using IntRows = std::vector<std::vector<mpz_class>>;
using Vector = std::vector<CycNum>;

/// Row Hermite normal form: positive pivots, entries above a pivot reduced into
/// [0, pivot), zero rows dropped. Every row must have `cols` entries.
IntRows hnf(const IntRows& rows, size_t cols);

/// Solves x * h = r over Z for h in row HNF; nullopt if r is not in the row span.
std::optional<std::vector<mpz_class>> solve_in_span(const IntRows& h, std::vector<mpz_class> r);

/// O-submodule of K^n, stored as (1/den) * (Z-span of zbasis) with coordinates
/// flattened as entry-major zeta power coordinates.
class OLattice {
 public:
  OLattice(FieldPtr field, size_t n);
  static OLattice span(FieldPtr field, size_t n, const std::vector<Vector>& generators);

  const FieldPtr& field() const { return field_; }
  long p() const { return field_->p(); }
  size_t ambient_rank() const { return n_; }
  size_t z_rank() const { return zbasis_.size(); }
  const std::vector<Vector>& generators() const { return generators_; }
  const IntRows& zbasis() const { return zbasis_; }
  const mpz_class& den() const { return den_; }

  bool contains(const Vector& v) const;
  bool contains(const OLattice& other) const;
  /// Adds generators; returns those not already inside.
  std::vector<Vector> add(const std::vector<Vector>& gens);
  /// zbasis rows as vectors of K^n.
  std::vector<Vector> z_vectors() const;
  bool zeta_stable() const;

  friend bool operator==(const OLattice& a, const OLattice& b) {
    return a.n_ == b.n_ && a.den_ == b.den_ && a.zbasis_ == b.zbasis_;
  }

 private:
  std::vector<mpz_class> flatten(const Vector& v, const mpz_class& den) const;
  void rescale(const mpz_class& den);
  void canonicalize();
  FieldPtr field_;
  size_t n_;
  std::vector<Vector> generators_;
  IntRows zbasis_;
  mpz_class den_ = 1;
};

bool lattice_equal(const OLattice& a, const OLattice& b);
/// [outer : inner]; throws DomainError unless inner is a finite-index sublattice.
mpz_class lattice_index(const OLattice& inner, const OLattice& outer);

/// Row-vector action x -> x * op.
Vector apply(const Matrix& op, const Vector& x);

struct SaturateResult {
  OLattice lattice;
  int iterations = 0;
  bool stabilized = false;
  std::vector<size_t> z_ranks;  // after each iteration, starting with the seed span
};

SaturateResult saturate(const std::vector<Vector>& seed, const std::vector<Matrix>& ops, long p, int cap = 32);

}  // namespace tqft::lattice
