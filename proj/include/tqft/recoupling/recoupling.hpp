#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "tqft/ring/cyclotomic.hpp"

namespace tqft::recoupling {

using ring::CycNum;
using ring::FieldPtr;

/// a+b+c even, triangle inequalities, and a+b+c <= 2(p-2).
bool admissible(long a, long b, long c, long p);

/// [n]! for 0 <= n < p (DomainError otherwise, since [p] = 0).
CycNum qfactorial(long n, const FieldPtr& f);
/// <e_n> = (-1)^n [n+1].
CycNum loop_value(long n, const FieldPtr& f);

/// Theta-graph evaluation with edges colored a, b, c (DomainError if inadmissible).
CycNum theta(long a, long b, long c, const FieldPtr& f);

/// Tetrahedral network with edge e_ij joining vertices i and j; the vertex
/// triples are (e12,e13,e14), (e12,e23,e24), (e13,e23,e34), (e14,e24,e34).
CycNum tet(long e12, long e13, long e14, long e23, long e24, long e34, const FieldPtr& f);

/// Colors of the genus-g graph basis: loops[i] is the loop around hole i and
/// legs[i] the edge joining it to the rest of the graph. Genus 1 has no legs,
/// genus 2 is the handcuff graph (one leg, legs = {k}), genus 3 the tripod
/// (three legs meeting at a central vertex).
struct Coloring {
  std::vector<long> loops;
  std::vector<long> legs;
};

bool admissible(const Coloring& c, long p);

/// Norm (u, u) of a graph basis vector for the D<N1 u -N2> form.
CycNum graph_basis_norm(unsigned genus, const Coloring& c, const FieldPtr& f);

enum class Constraint {
  Even,      // every edge even
  LowLoops,  // loops in [0, d-1] of either parity, other edges even
};

/// Number of p-admissible colorings of the genus-g caterpillar graph
/// (loops hanging off a trivalent backbone). p only needs to be odd here.
mpz_class count_admissible(unsigned genus, long p, Constraint constraint);

/// Floating-point (p/4)^{g-1} sum_{j=1}^{(p-1)/2} (sin 2 pi j/p)^{2-2g}.
double verlinde_float(unsigned genus, long p);

/// Coefficients of the two moves taking G(i,j,k) to G(p-2-i,j,k): fusing a
/// transparent e_{p-2} curve into the loop i, then removing the resulting triangle.
std::pair<CycNum, CycNum> reflection_units(long i, long j, long k, const FieldPtr& f);

}  // namespace tqft::recoupling
