#pragma once

#include "tqft/bracket/diagram.hpp"
#include "tqft/bracket/evaluate.hpp"
#include "tqft/planar/arrangement.hpp"

namespace tqft::planar {

// Diagrams for the form (x, y): x drawn in the lower layer, y in the upper layer
// with conjugated colors, and one omega-colored meridian through each hole.

bracket::LinkDiagram pairing_diagram_genus1(const bracket::Color& x, const bracket::Color& y);
bracket::LinkDiagram pairing_diagram_genus2(const Arrangement2& x, const Arrangement2& y, const bracket::Color& c);
bracket::LinkDiagram pairing_diagram_genus3(const Arrangement3& x, const Arrangement3& y, const bracket::Color& c);

/// Bracket of a pairing diagram at A = zeta_2p.
CycNum oracle_pairing(const bracket::LinkDiagram& d, long p, const bracket::Caps& caps = {});

bracket::Color to_bracket_color(CurveColor c);

}  // namespace tqft::planar
