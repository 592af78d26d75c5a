#include "vkl/diagram.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace vkl {

CrossingDiagram::CrossingDiagram(std::vector<Crossing> crossings)
    : crossings_(std::move(crossings)) {
    if (crossings_.empty())
        throw ParseError("diagram has no classical crossings");
    int n2 = semi_arcs();
    std::vector<int> as_input(n2 + 1, 0), as_output(n2 + 1, 0);
    for (const Crossing& c : crossings_) {
        if (c.sign != 1 && c.sign != -1) throw ParseError("crossing sign must be + or -");
        for (int id : {c.in1, c.in2, c.out1, c.out2})
            if (id < 1 || id > n2)
                throw ParseError("semi-arc id " + std::to_string(id) + " out of range [1, " +
                                 std::to_string(n2) + "]");
        ++as_input[c.in1];
        ++as_input[c.in2];
        ++as_output[c.out1];
        ++as_output[c.out2];
    }
    for (int id = 1; id <= n2; ++id) {
        if (as_input[id] != 1)
            throw ParseError("semi-arc " + std::to_string(id) + " used " +
                             std::to_string(as_input[id]) + " times as an input (want 1)");
        if (as_output[id] != 1)
            throw ParseError("semi-arc " + std::to_string(id) + " used " +
                             std::to_string(as_output[id]) + " times as an output (want 1)");
    }
}

CrossingDiagram CrossingDiagram::parse(const std::string& text) {
    std::vector<Crossing> crossings;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head != "X")
            throw ParseError("line " + std::to_string(lineno) + ": expected 'X', got '" +
                             head + "'");
        std::string sign;
        Crossing c{};
        if (!(ls >> sign >> c.in1 >> c.in2 >> c.out1 >> c.out2))
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 'X <+|-> in1 in2 out1 out2'");
        if (sign == "+")
            c.sign = 1;
        else if (sign == "-")
            c.sign = -1;
        else
            throw ParseError("line " + std::to_string(lineno) + ": bad sign '" + sign + "'");
        std::string extra;
        if (ls >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": trailing token '" + extra +
                             "'");
        crossings.push_back(c);
    }
    return CrossingDiagram(std::move(crossings));
}

CrossingDiagram CrossingDiagram::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open diagram file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string CrossingDiagram::str() const {
    std::ostringstream os;
    for (const Crossing& c : crossings_)
        os << "X " << (c.sign > 0 ? "+" : "-") << " " << c.in1 << " " << c.in2 << " " << c.out1
           << " " << c.out2 << "\n";
    return os.str();
}

PresentationMatrix presentation_from_diagram(const CrossingDiagram& d, const Switch& s) {
    std::size_t n2 = static_cast<std::size_t>(d.semi_arcs());
    RingMatrix m = ring_zero(n2, n2, s.A);
    RingElem one = one_like(s.A);
    std::size_t row = 0;
    auto add = [&m](std::size_t r, int col, const RingElem& v) {
        m.at(r, static_cast<std::size_t>(col - 1)) =
            m.at(r, static_cast<std::size_t>(col - 1)) + v;
    };
    for (const Crossing& c : d.crossings()) {
        if (c.sign > 0) {
            add(row, c.in1, s.A);
            add(row, c.in2, s.B);
            add(row, c.out1, -one);
            add(row + 1, c.in1, s.C);
            add(row + 1, c.in2, s.D);
            add(row + 1, c.out2, -one);
        } else {
            add(row, c.out1, s.A);
            add(row, c.out2, s.B);
            add(row, c.in1, -one);
            add(row + 1, c.out1, s.C);
            add(row + 1, c.out2, s.D);
            add(row + 1, c.in2, -one);
        }
        row += 2;
    }
    return PresentationMatrix{std::move(m), s.unit_vars, PresentationMatrix::Source::Diagram};
}

PresentationMatrix presentation_from_braid(const VirtualBraidWord& w, const Switch& s) {
    RingMatrix rho = represent(w, s);
    RingMatrix m = ring_sub(rho, ring_identity(rho.rows(), s.A));
    return PresentationMatrix{std::move(m), s.unit_vars,
                              PresentationMatrix::Source::BraidClosure};
}

CrossingDiagram diagram_from_braid_closure(const VirtualBraidWord& w) {
    int n = w.strands();
    // Provisional labels: positions start with labels 0..n-1; each classical
    // crossing mints two fresh ones. The closure then merges the final label
    // of each position with its initial one.
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    int next = n;

    struct RawCrossing {
        int sign, in1, in2, out1, out2;
    };
    std::vector<RawCrossing> raw;
    for (const BraidLetter& l : w.letters()) {
        int i = l.index - 1;
        if (l.kind == BraidLetter::Kind::Tau) {
            std::swap(label[i], label[i + 1]);
            continue;
        }
        int p = next++;
        int q = next++;
        raw.push_back(RawCrossing{l.kind == BraidLetter::Kind::Sigma ? 1 : -1, label[i],
                                  label[i + 1], p, q});
        label[i] = p;
        label[i + 1] = q;
    }
    if (raw.empty()) throw ParseError("braid closure has no classical crossings");

    // Union-find over provisional labels; closure arcs identify the final
    // label at each position with the initial one.
    std::vector<int> parent(next);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int pos = 0; pos < n; ++pos) parent[find(label[pos])] = find(pos);

    // Strand with no classical crossing: its whole component has no semi-arc
    // generator and would silently drop from the module.
    std::vector<bool> touched(next, false);
    for (const RawCrossing& c : raw)
        for (int v : {c.in1, c.in2, c.out1, c.out2}) touched[find(v)] = true;
    for (int pos = 0; pos < n; ++pos)
        if (!touched[find(pos)])
            throw PreconditionError("closed strand " + std::to_string(pos + 1) +
                                    " meets no classical crossing");

    std::map<int, int> compact;
    auto id_of = [&](int v) {
        int root = find(v);
        auto it = compact.find(root);
        if (it == compact.end()) it = compact.emplace(root, static_cast<int>(compact.size()) + 1).first;
        return it->second;
    };
    std::vector<Crossing> crossings;
    crossings.reserve(raw.size());
    for (const RawCrossing& c : raw)
        crossings.push_back(
            Crossing{c.sign, id_of(c.in1), id_of(c.in2), id_of(c.out1), id_of(c.out2)});
    return CrossingDiagram(std::move(crossings));
}

} // namespace vkl
