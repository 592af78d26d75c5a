#include "vkl/switches.hpp"

#include <algorithm>

#include "vkl/polytext.hpp"

namespace vkl {

namespace {

// d of a single ring element: the ordinary value for commutative scalars,
// the norm for quaternions.
RatFun unit_d(const RingElem& e) {
    if (const auto* f = std::get_if<RatFun>(&e)) return *f;
    return std::get<Quaternion>(e).norm();
}

// Variables of a monomial unit value c * x1^e1 * ... / (x2^e2 ...).
void collect_monomial_vars(const RatFun& u, std::vector<std::string>& out) {
    if (u.is_zero()) return;
    if (u.num().terms().size() != 1 || u.den().terms().size() != 1) return;
    auto add_from = [&](const MPoly& p) {
        const Exponents& e = p.terms().begin()->first;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) {
                const std::string& name = p.ring()->vars()[i];
                if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
            }
    };
    add_from(u.num());
    add_from(u.den());
}

std::vector<std::string> orbit_vars(const RingElem& B, const RingElem& C) {
    std::vector<std::string> vars;
    collect_monomial_vars(unit_d(B), vars);
    collect_monomial_vars(unit_d(C), vars);
    return vars;
}

RingElem q_from_mat2_text(const PolyRingPtr& ring, const std::string& m00,
                          const std::string& m01, const std::string& m10,
                          const std::string& m11) {
    Mat<RatFun> m(2, 2, RatFun(ring));
    m.at(0, 0) = parse_ratfun(ring, m00);
    m.at(0, 1) = parse_ratfun(ring, m01);
    m.at(1, 0) = parse_ratfun(ring, m10);
    m.at(1, 1) = parse_ratfun(ring, m11);
    return from_mat2(AlgebraParams(-1, 1), m);
}

void cross_check_entry(const RingElem& derived, const RingElem& printed,
                       const std::string& label, std::vector<std::string>& mismatches) {
    const auto& dq = std::get<Quaternion>(derived);
    const auto& pq = std::get<Quaternion>(printed);
    Mat<RatFun> dm = to_mat2(dq);
    Mat<RatFun> pm = to_mat2(pq);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (dm.at(i, j) != pm.at(i, j))
                mismatches.push_back(label + "(" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + "): derived " +
                                     dm.at(i, j).str() + " vs printed " + pm.at(i, j).str());
}

} // namespace

std::vector<std::string> switch_orbit_vars(const RingElem& B, const RingElem& C) {
    return orbit_vars(B, C);
}

RingMatrix switch_matrix(const Switch& s) {
    RingMatrix m(2, 2, zero_like(s.A));
    m.at(0, 0) = s.A;
    m.at(0, 1) = s.B;
    m.at(1, 0) = s.C;
    m.at(1, 1) = s.D;
    return m;
}

RingMatrix switch_inverse_matrix(const Switch& s) { return ring_inverse(switch_matrix(s)); }

Switch switch_inverse(const Switch& s) {
    RingMatrix inv = switch_inverse_matrix(s);
    return Switch{s.name + "^-1", inv.at(0, 0), inv.at(0, 1), inv.at(1, 0), inv.at(1, 1),
                  s.unit_vars};
}

AxiomReport verify_switch(const Switch& s) {
    const RingElem &A = s.A, &B = s.B, &C = s.C, &D = s.D;
    AxiomReport rep;
    std::array<RingElem, 7> residuals = {
        A - (A * A + B * A * C),
        (B * A - A * B) - B * A * D,
        (C * D - D * C) - C * D * A,
        D - (D * D + C * D * B),
        (A * C - C * A) - D * A * C,
        (D * B - B * D) - A * D * B,
        (C * B - B * C) - (A * D * A - D * A * D),
    };
    for (std::size_t k = 0; k < 7; ++k) {
        rep.axiom_ok[k] = elem_is_zero(residuals[k]);
        if (!rep.axiom_ok[k]) rep.residuals[k] = elem_str(residuals[k]);
    }
    try {
        switch_inverse_matrix(s);
        rep.invertible = true;
    } catch (const NotInvertible&) {
        rep.invertible = false;
        rep.notes.push_back("switch block is not invertible");
    }
    return rep;
}

Switch augment(const Switch& s, const RatFun& u) {
    if (u.is_zero()) throw PreconditionError("augmentation by zero");
    Switch r = s;
    r.B = scalar_mul(u, s.B);
    r.C = scalar_mul(u.inv(), s.C);
    collect_monomial_vars(u, r.unit_vars);
    if (!u.is_one()) r.name = s.name + "*" + u.str();
    return r;
}

Switch make_alexander(RingElem B, RingElem C, std::string name) {
    require_same_kind(B, C);
    if (!elem_invertible(B) || !elem_invertible(C))
        throw PreconditionError("Alexander switch needs invertible B and C");
    if (!elem_equal(B * C, C * B))
        throw PreconditionError("Alexander switch needs commuting B and C");
    RingElem zero = zero_like(B);
    RingElem one = one_like(B);
    RingElem D = one - B * C;
    std::vector<std::string> vars = orbit_vars(B, C);
    return Switch{std::move(name), zero, std::move(B), std::move(C), std::move(D),
                  std::move(vars)};
}

Switch make_burau(RingElem C, std::string name) {
    RingElem one = one_like(C);
    return make_alexander(std::move(one), std::move(C), std::move(name));
}

Switch make_identity_switch(PolyRingPtr ring) {
    RatFun zero(ring);
    RatFun one = RatFun::constant(ring, GaussRat(1));
    return Switch{"identity", one, zero, zero, one, {}};
}

Switch make_noncommuting(RingElem A, RingElem B, std::string name) {
    require_same_kind(A, B);
    if (!elem_invertible(A)) throw PreconditionError("A is not invertible");
    if (!elem_invertible(B)) throw PreconditionError("B is not invertible");
    RingElem one = one_like(A);
    if (!elem_invertible(A - one)) throw PreconditionError("A-1 is not invertible");
    if (elem_equal(A * B, B * A)) throw PreconditionError("A and B commute");
    RingElem Ai = elem_inv(A);
    RingElem Bi = elem_inv(B);
    RingElem lhs = Ai * Bi * A * B - B * (Ai * Bi * A);
    RingElem rhs = Bi * A * B - A;
    if (!elem_equal(lhs, rhs))
        throw PreconditionError("A, B do not satisfy the fundamental equation");
    RingElem C = Ai * Bi * A * (one - A);
    RingElem D = one - Ai * Bi * A * B;
    std::vector<std::string> vars = orbit_vars(B, C);
    return Switch{std::move(name), std::move(A), std::move(B), std::move(C), std::move(D),
                  std::move(vars)};
}

Switch make_budapest(PolyRingPtr ring) {
    AlgebraParams params(-1, -1);
    Quaternion one = Quaternion::one(ring, params);
    Quaternion i = Quaternion::unit_i(ring, params);
    Quaternion j = Quaternion::unit_j(ring, params);
    Switch s = make_noncommuting(RingElem(one + i), RingElem(j), "budapest");
    return s;
}

DerivedSwitch make_e1(const PolyRingPtr& ring) {
    for (const char* v : {"x", "y", "z"})
        if (!ring->index_of(v)) throw Error(std::string("E1 ring must contain variable ") + v);
    RingElem A = q_from_mat2_text(ring, "2", "0", "x", "2");
    RingElem B = q_from_mat2_text(ring, "y", "z", "(x*y*z-2*y^2-2)/(2*z)", "(x*z-2*y)/2");
    Switch sw = make_noncommuting(A, B, "e1");
    DerivedSwitch out{std::move(sw), {}};
    RingElem printedC = q_from_mat2_text(ring, "y+x*z", "z", "-(x^2*z^2+3*x*y*z+2*y^2+2)/(2*z)",
                                         "-x*z/2-y");
    RingElem printedD = q_from_mat2_text(ring, "x*y*z/2", "x*z^2/2", "-x*(2*y^2+x*y*z-2)/4",
                                         "-x*z*(x*z+2*y)/4");
    cross_check_entry(out.sw.C, printedC, "C", out.printed_mismatches);
    cross_check_entry(out.sw.D, printedD, "D", out.printed_mismatches);
    return out;
}

DerivedSwitch make_e2(const PolyRingPtr& ring) {
    for (const char* v : {"a", "b", "c"})
        if (!ring->index_of(v)) throw Error(std::string("E2 ring must contain variable ") + v);
    RingElem A = q_from_mat2_text(ring, "a", "0", "0", "a/(a-1)");
    RingElem B = q_from_mat2_text(ring, "b", "c", "(b^2+a-1)/(c*(1-a))", "b/(1-a)");
    Switch sw = make_noncommuting(A, B, "e2");
    DerivedSwitch out{std::move(sw), {}};
    RingElem printedC = q_from_mat2_text(ring, "b", "c/(1-a)^2", "(1-a)*(b^2+a-1)/c", "b/(1-a)");
    RingElem printedD = q_from_mat2_text(ring, "(2-3*a+a*b^2+a^2-2*b^2)/(1-a)^2",
                                         "(a-2)*b*c/(1-a)^2", "(a-2)*b*(b^2+a-1)/(c*(1-a))",
                                         "(2-3*a+a*b^2+a^2-2*b^2)/(1-a)");
    cross_check_entry(out.sw.C, printedC, "C", out.printed_mismatches);
    cross_check_entry(out.sw.D, printedD, "D", out.printed_mismatches);
    return out;
}

SidewaysPair sideways(const Switch& s) {
    const RingElem &A = s.A, &B = s.B, &C = s.C, &D = s.D;
    RingElem one = one_like(A);
    RingElem one_minus_A = one - A;
    RingElem one_minus_D = one - D;

    if (!elem_invertible(B) || !elem_invertible(C)) {
        // Degenerate identity-like case: B lambda = 1-A still has the
        // solution lambda = 0 when A = 1; anything else is an error.
        if (elem_is_zero(one_minus_A) && elem_is_zero(one_minus_D)) {
            SidewaysPair p{RingMatrix(), RingMatrix(), zero_like(A), false, true, false};
            return p;
        }
        throw NotInvertible("sideways matrices need invertible B and C");
    }

    RingElem Bi = elem_inv(B);
    RingElem Ci = elem_inv(C);
    RingMatrix up(2, 2, zero_like(A));
    up.at(0, 0) = D * Bi;
    up.at(0, 1) = C - D * Bi * A;
    up.at(1, 0) = Bi;
    up.at(1, 1) = -(Bi * A);
    RingMatrix down(2, 2, zero_like(A));
    down.at(0, 0) = -(Ci * D);
    down.at(0, 1) = Ci;
    down.at(1, 0) = B - A * Ci * D;
    down.at(1, 1) = A * Ci;

    RingElem lam = Bi * one_minus_A;
    SidewaysPair p{std::move(up), std::move(down), lam, elem_invertible(lam), false, false};
    if (elem_invertible(one_minus_D))
        p.diag_consistent = elem_equal(lam, elem_inv(one_minus_D) * C);
    else
        p.diag_consistent = elem_is_zero(one_minus_A) && elem_is_zero(C);
    p.preserves_diagonal = elem_equal(p.up.at(0, 0) + p.up.at(0, 1), lam) &&
                           elem_equal(p.up.at(1, 0) + p.up.at(1, 1), lam);
    return p;
}

BurauConjugation burau_conjugator(const Switch& s, std::size_t strands) {
    if (strands == 0) throw PreconditionError("strand count must be positive");
    const RingElem &A = s.A, &B = s.B, &D = s.D;
    RingElem one = one_like(A);
    RingElem Q = (one - A) * (one - D);
    RingMatrix M = ring_zero(strands, strands, A);
    M.at(0, 0) = one;
    for (std::size_t r = 1; r < strands; ++r) {
        M.at(r, 0) = A;
        for (std::size_t c = 1; c <= r; ++c) M.at(r, c) = B * M.at(r - 1, c - 1);
    }
    Switch burau = make_burau(Q, "burau(Q)");
    return BurauConjugation{std::move(M), std::move(burau), std::move(Q)};
}

bool yang_baxter_holds(const Switch& s) {
    RingElem zero = zero_like(s.A);
    RingElem one = one_like(s.A);
    RingMatrix s_id(3, 3, zero);
    s_id.at(0, 0) = s.A;
    s_id.at(0, 1) = s.B;
    s_id.at(1, 0) = s.C;
    s_id.at(1, 1) = s.D;
    s_id.at(2, 2) = one;
    RingMatrix id_s(3, 3, zero);
    id_s.at(0, 0) = one;
    id_s.at(1, 1) = s.A;
    id_s.at(1, 2) = s.B;
    id_s.at(2, 1) = s.C;
    id_s.at(2, 2) = s.D;
    RingMatrix lhs = ring_mul(ring_mul(s_id, id_s), s_id);
    RingMatrix rhs = ring_mul(ring_mul(id_s, s_id), id_s);
    return ring_equal(lhs, rhs);
}

bool elementary_factorization_holds(const Switch& s) {
    if (!elem_invertible(s.A))
        throw PreconditionError("elementary factorization needs invertible A");
    RingElem zero = zero_like(s.A);
    RingElem one = one_like(s.A);
    RingElem Ai = elem_inv(s.A);
    auto two_by_two = [&](RingElem a, RingElem b, RingElem c, RingElem d) {
        RingMatrix m(2, 2, zero);
        m.at(0, 0) = std::move(a);
        m.at(0, 1) = std::move(b);
        m.at(1, 0) = std::move(c);
        m.at(1, 1) = std::move(d);
        return m;
    };
    RingMatrix prod = ring_mul(
        ring_mul(two_by_two(s.A, zero, zero, one), two_by_two(one, zero, s.C, one)),
        ring_mul(two_by_two(one, zero, zero, one - Ai), two_by_two(one, Ai * s.B, zero, one)));
    return ring_equal(prod, switch_matrix(s));
}

} // namespace vkl
