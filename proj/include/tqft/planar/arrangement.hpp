#pragma once

#include <string>
#include <vector>

#include "tqft/recoupling/recoupling.hpp"
#include "tqft/ring/cyclotomic.hpp"

namespace tqft::planar {

using ring::CycNum;
using ring::FieldPtr;

/// Color placed on every curve of an arrangement.
enum class CurveColor { Z, V, Omega };

CurveColor curve_color_from_string(const std::string& s);
std::string to_string(CurveColor c);

/// Genus 2: gamma curves around both holes, inside them alpha around the left
/// hole and beta around the right hole.
struct Arrangement2 {
  long alpha = 0, beta = 0, gamma = 0;
  long curve_count() const { return alpha + beta + gamma; }
  friend bool operator==(const Arrangement2&, const Arrangement2&) = default;
};

/// Genus 3: one entry per curve, the bitmask of the holes it encloses (bit m
/// for hole m+1). Only pairwise disjoint curves are supported.
struct Arrangement3 {
  std::vector<unsigned> curves;
  long curve_count() const { return static_cast<long>(curves.size()); }
  std::string name() const;
};

/// 0 <= gamma <= d-1, 0 <= alpha, beta <= d-1-gamma, ordered by (gamma, alpha, beta).
std::vector<Arrangement2> arrangement_set_genus2(long p);
/// The 15 arrangements used at p = 5.
std::vector<Arrangement3> arrangement_set_genus3();

/// G(i,j,k) with k even, k/2 <= i,j <= d-1, ordered by (k, i, j).
std::vector<recoupling::Coloring> graph_basis_genus2(long p);
/// Tripod colorings at p = 5 with loops in {0,1} and legs in {0,2}, listed so
/// that entry n is the leading term of arrangement n.
std::vector<recoupling::Coloring> graph_basis_genus3();

/// e-coordinates (length d) of the annulus element color^m, reduced in V_p.
std::vector<CycNum> color_power(CurveColor c, long m, const FieldPtr& f);

/// Coordinates in the graph basis of the colored arrangement.
std::vector<CycNum> expand_arrangement(const Arrangement2& a, CurveColor c, long p);
std::vector<CycNum> expand_arrangement(const Arrangement3& a, CurveColor c, long p);

}  // namespace tqft::planar
