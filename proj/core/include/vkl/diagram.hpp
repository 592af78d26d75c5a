#pragma once

#include <string>
#include <vector>

#include "vkl/braid.hpp"

namespace vkl {

/// One classical crossing of a virtual link diagram, recorded through the
/// four incident semi-arc ids. For a positive crossing in1 is the
/// undercrossing input and in2 the overcrossing input, and the labels obey
///     out1 = A in1 + B in2,   out2 = C in1 + D in2.
/// For a negative crossing the labelling direction is reversed, which makes
/// the relations
///     in1 = A out1 + B out2,  in2 = C out1 + D out2,
/// i.e. the inverse switch action along the actual flow.
struct Crossing {
    int sign;                     // +1 or -1
    int in1, in2, out1, out2;     // semi-arc ids, 1-based
};

/// Crossing list of a diagram with n classical crossings and 2n semi-arcs.
/// Virtual crossings are never stored: semi-arc labels carry across them, so
/// they vanish at the data-model level (the detour move makes this sound).
class CrossingDiagram {
public:
    explicit CrossingDiagram(std::vector<Crossing> crossings);

    /// Line format: `X <+|-> <in1> <in2> <out1> <out2>`, one crossing per
    /// line; `#` starts a comment; blank lines ignored. At least one
    /// crossing is required (the unknot is handled by the braid path).
    static CrossingDiagram parse(const std::string& text);
    static CrossingDiagram load(const std::string& path);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int semi_arcs() const { return static_cast<int>(2 * crossings_.size()); }

    std::string str() const;

private:
    std::vector<Crossing> crossings_;
};

/// Square presentation of the invariant module, together with the unit-orbit
/// variables inherited from the switch and the path that built it.
struct PresentationMatrix {
    enum class Source { Diagram, BraidClosure };
    RingMatrix mat;
    std::vector<std::string> unit_vars;
    Source source;
};

/// 2n x 2n matrix with a row pair per crossing; each row has nonzero entries
/// A, B, -1 or C, D, -1 against the incident semi-arc columns.
PresentationMatrix presentation_from_diagram(const CrossingDiagram& d, const Switch& s);

/// rho(S, n)(w) - id.
PresentationMatrix presentation_from_braid(const VirtualBraidWord& w, const Switch& s);

/// Crossing diagram of the closure of a virtual braid word, labelling
/// semi-arcs along the strands and merging across the closure arcs. Every
/// strand must meet at least one classical crossing.
CrossingDiagram diagram_from_braid_closure(const VirtualBraidWord& w);

} // namespace vkl
