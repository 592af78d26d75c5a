#include "vkl/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "vkl/polytext.hpp"

namespace vkl {

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_'))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return s != "I";
}

// The variable a bound parameter contributes to the ring: itself when
// unbound, the target identifier when renamed, nothing when set to an
// expression.
void plan_param_var(const std::map<std::string, std::string>& params,
                    const std::string& name, std::vector<std::string>& vars) {
    auto it = params.find(name);
    if (it == params.end() || it->second == name) {
        vars.push_back(name);
        return;
    }
    if (is_identifier(it->second)) vars.push_back(it->second);
}

void reject_unknown_params(const std::map<std::string, std::string>& params,
                           const std::vector<std::string>& known) {
    for (const auto& [k, v] : params)
        if (std::find(known.begin(), known.end(), k) == known.end())
            throw PreconditionError("switch has no parameter named '" + k + "'");
}

RingElem substituted(const RingElem& e, const std::vector<RatFun>& images) {
    if (const auto* f = std::get_if<RatFun>(&e)) return substitute(*f, images);
    const auto& q = std::get<Quaternion>(e);
    return Quaternion(q.params(), substitute(q.coord(0), images), substitute(q.coord(1), images),
                      substitute(q.coord(2), images), substitute(q.coord(3), images));
}

} // namespace

const std::vector<SwitchInfo>& switch_catalog() {
    static const std::vector<SwitchInfo> catalog = {
        {"identity", "identity block; passes the axioms, B and C not invertible", {}},
        {"alexander", "[[0,B],[C,1-BC]] over commuting symbolic units B, C", {"B", "C"}},
        {"burau", "Alexander with B = 1", {"C"}},
        {"budapest", "[[1+i,j],[-j,1+i]] over the (-1,-1) quaternions", {}},
        {"e1", "one-eigenvalue matching-pair switch, variables x, y, z, augmented by t",
         {"x", "y", "z"}},
        {"e2", "two-eigenvalue matching-pair switch, variables a, b, c, augmented by t",
         {"a", "b", "c"}},
    };
    return catalog;
}

SwitchChoice make_catalog_switch(const std::string& name,
                                 const std::map<std::string, std::string>& params,
                                 const std::optional<std::string>& augment_var) {
    std::vector<std::string> vars;

    auto augmented = [&](Switch sw) {
        if (augment_var) {
            auto idx = sw.ring()->index_of(*augment_var);
            if (!idx) throw Error("internal: augmentation variable missing from ring");
            sw = augment(sw, RatFun::variable(sw.ring(), *idx));
        }
        return sw;
    };

    if (name == "identity") {
        reject_unknown_params(params, {});
        if (augment_var) vars.push_back(*augment_var);
        return SwitchChoice{augmented(make_identity_switch(PolyRing::make(vars))), {}};
    }
    if (name == "alexander" || name == "burau") {
        bool burau = name == "burau";
        reject_unknown_params(params, burau ? std::vector<std::string>{"C"}
                                            : std::vector<std::string>{"B", "C"});
        if (!burau) plan_param_var(params, "B", vars);
        plan_param_var(params, "C", vars);
        if (augment_var) vars.push_back(*augment_var);
        PolyRingPtr ring = PolyRing::make(vars);
        auto value_of = [&](const std::string& pname) -> RingElem {
            auto it = params.find(pname);
            std::string text = it == params.end() ? pname : it->second;
            return RingElem(parse_ratfun(ring, text));
        };
        Switch sw = burau ? make_burau(value_of("C"))
                          : make_alexander(value_of("B"), value_of("C"));
        return SwitchChoice{augmented(std::move(sw)), {}};
    }
    if (name == "budapest") {
        reject_unknown_params(params, {});
        if (augment_var) vars.push_back(*augment_var);
        return SwitchChoice{augmented(make_budapest(PolyRing::make(vars))), {}};
    }
    if (name == "e1" || name == "e2") {
        std::vector<std::string> base =
            name == "e1" ? std::vector<std::string>{"x", "y", "z"}
                         : std::vector<std::string>{"a", "b", "c"};
        reject_unknown_params(params, base);
        vars = base;
        vars.push_back("t");
        if (augment_var && *augment_var != "t") vars.push_back(*augment_var);
        PolyRingPtr ring = PolyRing::make(vars);
        DerivedSwitch derived = name == "e1" ? make_e1(ring) : make_e2(ring);
        std::vector<std::string> notes;
        for (const std::string& m : derived.printed_mismatches)
            notes.push_back("derived vs printed " + m);
        Switch sw = augment(derived.sw, RatFun::variable(ring, *ring->index_of("t")));
        if (augment_var && *augment_var != "t")
            sw = augment(sw, RatFun::variable(ring, *ring->index_of(*augment_var)));
        std::map<std::string, std::string> residual_bindings;
        for (const auto& [k, v] : params)
            if (v != k) residual_bindings[k] = v;
        if (!residual_bindings.empty()) sw = bind_switch_params(sw, residual_bindings);
        return SwitchChoice{std::move(sw), std::move(notes)};
    }
    throw PreconditionError("unknown switch '" + name + "'");
}

Switch bind_switch_params(const Switch& s, const std::map<std::string, std::string>& bindings) {
    const PolyRingPtr& old_ring = s.ring();
    for (const auto& [k, v] : bindings)
        if (!old_ring->index_of(k))
            throw PreconditionError("no variable named '" + k + "' to bind");
    std::vector<std::string> new_vars;
    for (const std::string& v : old_ring->vars())
        if (!bindings.count(v)) new_vars.push_back(v);
    for (const auto& [k, v] : bindings)
        if (is_identifier(v) &&
            std::find(new_vars.begin(), new_vars.end(), v) == new_vars.end())
            new_vars.push_back(v);
    PolyRingPtr ring = PolyRing::make(new_vars);
    std::vector<RatFun> images;
    for (const std::string& v : old_ring->vars()) {
        auto it = bindings.find(v);
        if (it == bindings.end())
            images.push_back(RatFun::variable(ring, *ring->index_of(v)));
        else
            images.push_back(parse_ratfun(ring, it->second));
    }
    Switch r = s;
    r.A = substituted(s.A, images);
    r.B = substituted(s.B, images);
    r.C = substituted(s.C, images);
    r.D = substituted(s.D, images);
    r.unit_vars = switch_orbit_vars(r.B, r.C);
    return r;
}

const std::vector<KnotEntry>& knot_catalog() {
    static const std::vector<KnotEntry> catalog = {
        {"unknot", "", 1, std::nullopt, false, "closure of the empty braid"},
        {"classical_trefoil", "s1 s1 s1", 2, "classical_trefoil.vkd", false,
         "torus knot T(2,3)"},
        {"figure_eight", "s1 -s2 s1 -s2", 3, std::nullopt, false, "classical 4_1"},
        {"virtual_trefoil", "s1 s1 v1", 2, "virtual_trefoil.vkd", true,
         "two classical crossings, one virtual"},
        {"kishino1", std::nullopt, 0, "kishino1.vkd", true,
         "Kishino connected sum, trivial-looking; distinguished by Delta_1"},
        {"kishino2", std::nullopt, 0, "kishino2.vkd", true, "mirror of kishino1"},
        {"kishino3", "v2 s1 s2 s1 v2 -s1 -s2 -s1", 3, "kishino3.vkd", false,
         "amphichiral Kishino knot, braid closure form"},
        {"trivial_jones", std::nullopt, 0, "trivial_jones.vkd", true,
         "virtual knot with trivial Jones polynomial and trivial fundamental rack"},
    };
    return catalog;
}

const KnotEntry* find_knot(const std::string& name) {
    for (const KnotEntry& e : knot_catalog())
        if (e.name == name) return &e;
    return nullptr;
}

PresentationMatrix diagram_file_presentation(const std::string& path, const Switch& s) {
    return presentation_from_diagram(CrossingDiagram::load(path), s);
}

PresentationMatrix knot_presentation(const KnotEntry& entry, const Switch& s,
                                     const std::string& fixtures_dir) {
    bool use_diagram = entry.diagram_file && (entry.prefer_diagram || !entry.braid_word);
    if (use_diagram)
        return diagram_file_presentation(fixtures_dir + "/" + *entry.diagram_file, s);
    if (!entry.braid_word) throw Error("knot entry has no source: " + entry.name);
    return presentation_from_braid(VirtualBraidWord::parse(*entry.braid_word, entry.strands),
                                   s);
}

} // namespace vkl
