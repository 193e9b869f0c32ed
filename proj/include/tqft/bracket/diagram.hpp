#pragma once

#include <array>
#include <string>
#include <vector>

namespace tqft::bracket {

enum class ColorKind { Uncolored, ZPower, E, V, ZPlus2, ZPlusQint2, Omega };

/// Formal color of a link component; `index` is k for z^k and i for e_i.
/// `conj` applies complex conjugation to the color's coefficients (A -> A^-1),
/// as needed for the second argument of a Hermitian pairing.
struct Color {
  ColorKind kind = ColorKind::Uncolored;
  unsigned index = 0;
  bool conj = false;
  friend bool operator==(const Color&, const Color&) = default;
};

std::string to_string(const Color& c);
Color color_from_string(const std::string& s);

/// PD-coded framed link diagram (blackboard framing). Each crossing is
/// (a, b, c, d) counterclockwise starting at the incoming under-strand, so the
/// under-strand runs a -> c and the over-strand joins b and d. Components with
/// no crossings are counted in `loops`. Components are numbered by increasing
/// smallest arc label, followed by the loops; `colors` follows that order and
/// may be empty (all uncolored).
struct LinkDiagram {
  std::vector<std::array<int, 4>> crossings;
  unsigned loops = 0;
  std::vector<Color> colors;
};

/// Throws DomainError unless every arc label occurs exactly twice and colors match the component count.
void validate(const LinkDiagram& d);

/// Arc labels of each component; loop components are empty vectors at the end.
std::vector<std::vector<int>> components(const LinkDiagram& d);
unsigned component_count(const LinkDiagram& d);

/// The sublink on the components with keep[k] true (colors carried along).
LinkDiagram sublink(const LinkDiagram& d, const std::vector<bool>& keep);

/// Mirror image: every crossing changes, so the bracket becomes A -> A^-1.
LinkDiagram mirror(const LinkDiagram& d);

/// Disjoint union, relabeling the arcs of `b`.
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

}  // namespace tqft::bracket
