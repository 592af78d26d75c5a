#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vkl/ringelem.hpp"

namespace vkl {

/// A linear switch: the 2x2 block (A, B, C, D) over an associative ring,
/// subject to the seven switch axioms (checked by verify_switch, not by the
/// constructor). unit_vars lists the ring variables spanning the unit orbit
/// of the determinant invariants (the variables of d(B) and d(C)).
struct Switch {
    std::string name;
    RingElem A, B, C, D;
    std::vector<std::string> unit_vars;

    const PolyRingPtr& ring() const { return elem_ring(A); }
    bool commutative() const { return is_commutative(A); }
};

/// Per-axiom residual report. Axioms, with [X,Y] = XY - YX:
///   1: A = A^2 + BAC        2: [B,A] = BAD       3: [C,D] = CDA
///   4: D = D^2 + CDB        5: [A,C] = DAC       6: [D,B] = ADB
///   7: [C,B] = ADA - DAD
/// plus invertibility of the 2x2 block itself.
struct AxiomReport {
    std::array<bool, 7> axiom_ok{};
    std::array<std::string, 7> residuals{};   // rendering of nonzero residuals
    bool invertible = false;
    std::vector<std::string> notes;

    bool all_ok() const {
        for (bool ok : axiom_ok)
            if (!ok) return false;
        return invertible;
    }
};

AxiomReport verify_switch(const Switch& s);

RingMatrix switch_matrix(const Switch& s);
RingMatrix switch_inverse_matrix(const Switch& s);
/// The inverse block reinterpreted as a switch (it is one when s is).
Switch switch_inverse(const Switch& s);

/// S = [[A, tB], [t^-1 C, D]]; u must be invertible. Monomial unit factors
/// join the switch's unit-orbit variables.
Switch augment(const Switch& s, const RatFun& u);

/// [[0, B], [C, 1-BC]] for commuting invertible B, C.
Switch make_alexander(RingElem B, RingElem C, std::string name = "alexander");
/// Alexander with B = 1.
Switch make_burau(RingElem C, std::string name = "burau");

/// Identity block over a commutative scalar ring. Passes the axioms but has
/// non-invertible B, C; kept for the degenerate corners of the test surface.
Switch make_identity_switch(PolyRingPtr ring);

/// Non-commuting switch from a solution (A, B) of the fundamental equation:
/// C = A^-1 B^-1 A (1-A), D = 1 - A^-1 B^-1 A B. Preconditions are reported
/// individually.
Switch make_noncommuting(RingElem A, RingElem B, std::string name = "noncommuting");

/// The Budapest switch [[1+i, j], [-j, 1+i]] over (-1,-1) coordinates in the
/// given ring.
Switch make_budapest(PolyRingPtr ring);

/// A switch constructor together with the cross-check of its derived C, D
/// blocks against reference matrices; mismatching entries are recorded.
struct DerivedSwitch {
    Switch sw;
    std::vector<std::string> printed_mismatches;
    bool matches_printed() const { return printed_mismatches.empty(); }
};

/// E1: A = [[2,0],[x,2]] (one eigenvalue), B determined by the matching-pair
/// conditions with det B = 1. Entries live in the 2x2-matrix model, i.e.
/// quaternions with parameters (-1, +1) over Q(i)(x,y,z,...). C and D are
/// derived from the non-commuting formulas and cross-checked against the
/// reference forms.
DerivedSwitch make_e1(const PolyRingPtr& ring);

/// E2: A = diag(a, a/(a-1)) (two eigenvalues); same construction over
/// variables a, b, c.
DerivedSwitch make_e2(const PolyRingPtr& ring);

/// Sideways action blocks at a crossing:
///   S+- = [[D B^-1, C - D B^-1 A], [B^-1, -B^-1 A]]
///   S-+ = [[-C^-1 D, C^-1], [B - A C^-1 D, A C^-1]]
/// diag_unit is B^-1 (1-A), which the diagonal property multiplies onto
/// repeated labels; it must equal (1-D)^-1 C.
struct SidewaysPair {
    RingMatrix up;     // S+-
    RingMatrix down;   // S-+
    RingElem diag_unit;
    bool diag_unit_is_unit = false;
    bool diag_consistent = false;    // B^-1(1-A) == (1-D)^-1 C
    bool preserves_diagonal = false; // S+-(a,a) = (diag_unit a, diag_unit a)
};

SidewaysPair sideways(const Switch& s);

/// Conjugating matrix M (lower triangular: row r starts with A, then the
/// previous row left-multiplied by B, ending in B^r) together with the Burau
/// switch S' = [[0,1],[Q,1-Q]], Q = (1-A)(1-D), satisfying
/// M rho(S,n)(w) = rho(S',n)(w) M for classical words w.
struct BurauConjugation {
    RingMatrix M;
    Switch burau;
    RingElem Q;
};

BurauConjugation burau_conjugator(const Switch& s, std::size_t strands);

/// Variables spanning the unit orbit of the determinant invariants: the
/// monomial variables of d(B) and d(C).
std::vector<std::string> switch_orbit_vars(const RingElem& B, const RingElem& C);

/// Set-theoretic Yang-Baxter equation on the 3x3 blocks:
/// (S x id)(id x S)(S x id) = (id x S)(S x id)(id x S).
bool yang_baxter_holds(const Switch& s);

/// S = diag(A,1) * lower(C) * diag(1, 1-A^-1) * upper(A^-1 B), valid when A
/// and A-1 are invertible.
bool elementary_factorization_holds(const Switch& s);

} // namespace vkl
