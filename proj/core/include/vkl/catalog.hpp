#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vkl/invariants.hpp"

namespace vkl {

/// A catalog switch ready for computation, with any construction notes
/// (e.g. the derived-vs-printed cross-check for e1/e2).
struct SwitchChoice {
    Switch sw;
    std::vector<std::string> notes;
};

struct SwitchInfo {
    std::string name;
    std::string description;
    std::vector<std::string> params;   // bindable parameter names
};

const std::vector<SwitchInfo>& switch_catalog();

/// Build a switch by catalog name. `params` rebinds the listed symbolic
/// parameters to expressions (constants or other variables); `augment_var`
/// augments by a fresh commuting variable. The catalog names e1 and e2
/// denote the four-variable switches, i.e. they include the t augmentation;
/// the plain three-variable forms are available through make_e1/make_e2.
SwitchChoice make_catalog_switch(const std::string& name,
                                 const std::map<std::string, std::string>& params = {},
                                 const std::optional<std::string>& augment_var = {});

/// Substitution on a whole switch: bound variables are replaced by parsed
/// expressions over the remaining ones, and the unit-orbit variables are
/// recomputed.
Switch bind_switch_params(const Switch& s, const std::map<std::string, std::string>& bindings);

struct KnotEntry {
    std::string name;
    std::optional<std::string> braid_word;   // with strand count below
    int strands = 0;
    std::optional<std::string> diagram_file; // relative to the fixtures directory
    bool prefer_diagram = false;             // which source delta computations use
    std::string notes;
};

const std::vector<KnotEntry>& knot_catalog();
const KnotEntry* find_knot(const std::string& name);

/// Presentation of a catalog knot (or a bare .vkd path) for the given
/// switch, honouring the entry's preferred source.
PresentationMatrix knot_presentation(const KnotEntry& entry, const Switch& s,
                                     const std::string& fixtures_dir);

PresentationMatrix diagram_file_presentation(const std::string& path, const Switch& s);

} // namespace vkl
