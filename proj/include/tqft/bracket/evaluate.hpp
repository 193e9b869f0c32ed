#pragma once

#include <vector>

#include "tqft/bracket/diagram.hpp"
#include "tqft/ring/cyclotomic.hpp"
#include "tqft/ring/laurent.hpp"

namespace tqft::bracket {

struct Caps {
  unsigned crossings = 20;    // uncabled input diagram
  unsigned cable_width = 12;  // total strands over all components after cabling
};

/// Kauffman bracket with <empty> = 1 and loop value -A^2 - A^-2. Colors are ignored.
/// Throws ResourceError above caps.crossings.
ring::IntLaurent kauffman_bracket(const LinkDiagram& d, const Caps& caps = {});

/// Same state sum without the cap; used on internally generated (cabled) diagrams.
ring::IntLaurent kauffman_bracket_uncapped(const LinkDiagram& d);

/// <L(z + c)> = sum over sublinks L' of c^{mu - mu(L')} <L'>.
ring::IntLaurent bracket_z_plus(const LinkDiagram& d, const ring::IntLaurent& c, const Caps& caps = {});
ring::IntLaurent bracket_z_plus_2(const LinkDiagram& d, const Caps& caps = {});
/// Uses [2] = A^2 + A^-2.
ring::IntLaurent bracket_z_plus_qint2(const LinkDiagram& d, const Caps& caps = {});

struct DivisibilityCertificate {
  ring::IntLaurent value;     // <L(z+2)> or <L(z+[2])>
  ring::IntLaurent quotient;  // value / (1+A)^mu
  unsigned mu = 0;
};

/// Divides <L(z+2)> (or <L(z+[2])> when qint_variant) by (1+A)^mu; RefutationError if that fails.
DivisibilityCertificate divisibility_certificate(const LinkDiagram& d, bool qint_variant = false,
                                                 const Caps& caps = {});

/// f^{(k)}(-1) = 0 mod p for all 0 <= k < mu. DomainError if mu >= p.
bool derivative_congruences(const ring::IntLaurent& f, unsigned mu, long p);
bool derivative_congruences(const LinkDiagram& d, long p, const Caps& caps = {});
/// f(zeta_2p) / (1 + zeta_2p)^mu lies in Z[zeta].
bool divisible_at_root(const ring::IntLaurent& f, unsigned mu, long p);

/// z-polynomial (ascending) of a color at A = zeta_2p.
std::vector<ring::CycNum> color_z_poly(const Color& c, const ring::FieldPtr& f);

/// Bracket of the colored diagram at A = zeta_2p: every component is expanded
/// into z-powers and cabled (blackboard parallels). ResourceError when a cable
/// exceeds caps.cable_width total strands.
ring::CycNum bracket_colored_at_root(const LinkDiagram& d, long p, const Caps& caps = {});

}  // namespace tqft::bracket
