#include "doctest.h"

#include "vkl/catalog.hpp"
#include "vkl/polytext.hpp"

using namespace vkl;

namespace {

Switch budapest() { return make_budapest(PolyRing::make({})); }

Switch budapest_t() {
    auto ring = PolyRing::make({"t"});
    return augment(make_budapest(ring), RatFun::variable(ring, 0));
}

Switch alexander_BC() {
    auto ring = PolyRing::make({"B", "C"});
    return make_alexander(RingElem(RatFun::variable(ring, 0)),
                          RingElem(RatFun::variable(ring, 1)));
}

Switch burau_C() {
    auto ring = PolyRing::make({"C"});
    return make_burau(RingElem(RatFun::variable(ring, 0)));
}

std::vector<Switch> full_catalog() {
    return {make_identity_switch(PolyRing::make({})),
            alexander_BC(),
            burau_C(),
            budapest(),
            budapest_t(),
            make_e1(PolyRing::make({"x", "y", "z"})).sw,
            make_e2(PolyRing::make({"a", "b", "c"})).sw};
}

} // namespace

TEST_CASE("seven axioms hold across the catalog") {
    for (const Switch& s : full_catalog()) {
        AxiomReport rep = verify_switch(s);
        INFO("switch ", s.name);
        for (int k = 0; k < 7; ++k) {
            INFO("axiom ", k + 1, " residual ", rep.residuals[k]);
            CHECK(rep.axiom_ok[k]);
        }
        CHECK(rep.invertible);
        CHECK(rep.all_ok());
    }
}

TEST_CASE("degenerate block fails verification") {
    auto ring = PolyRing::make({});
    RatFun one = RatFun::constant(ring, GaussRat(1));
    Switch bad{"ones", RingElem(one), RingElem(one), RingElem(one), RingElem(one), {}};
    AxiomReport rep = verify_switch(bad);
    CHECK_FALSE(rep.invertible);
    CHECK_FALSE(rep.axiom_ok[0]);   // 1 != 1 + 1
    CHECK_FALSE(rep.all_ok());
}

TEST_CASE("alexander family construction") {
    auto ring = PolyRing::make({"B", "C"});
    RingElem B{RatFun::variable(ring, 0)}, C{RatFun::variable(ring, 1)};
    RingElem one{RatFun::constant(ring, GaussRat(1))}, zero{RatFun(ring)};

    Switch s = make_alexander(B, C);
    CHECK(elem_is_zero(s.A));
    CHECK(elem_equal(s.D, one - B * C));
    CHECK(s.unit_vars == std::vector<std::string>{"B", "C"});

    // make_alexander(1, C) is the Burau switch.
    Switch b1 = make_alexander(one, C);
    Switch b2 = make_burau(C);
    CHECK(elem_equal(b1.B, b2.B));
    CHECK(elem_equal(b1.C, b2.C));
    CHECK(elem_equal(b1.D, b2.D));
    CHECK(b2.unit_vars == std::vector<std::string>{"C"});

    CHECK_THROWS_AS(make_alexander(zero, C), PreconditionError);
}

TEST_CASE("non-commuting construction recovers the Budapest switch") {
    auto ring = PolyRing::make({});
    AlgebraParams p(-1, -1);
    Quaternion one = Quaternion::one(ring, p);
    Quaternion i = Quaternion::unit_i(ring, p);
    Quaternion j = Quaternion::unit_j(ring, p);

    Switch s = make_noncommuting(RingElem(one + i), RingElem(j), "budapest");
    CHECK(elem_equal(s.C, RingElem(-j)));
    CHECK(elem_equal(s.D, RingElem(one + i)));
    CHECK(verify_switch(s).all_ok());

    // Commuting pairs are rejected outright.
    CHECK_THROWS_AS(make_noncommuting(RingElem(one + i), RingElem(i)), PreconditionError);
    // Pairs violating the fundamental equation are rejected too.
    CHECK_THROWS_AS(make_noncommuting(RingElem(one + i + j), RingElem(j)),
                    PreconditionError);
}

TEST_CASE("e1 and e2 derive the printed blocks") {
    DerivedSwitch e1 = make_e1(PolyRing::make({"x", "y", "z"}));
    DerivedSwitch e2 = make_e2(PolyRing::make({"a", "b", "c"}));

    // The derived C and D agree with the reference matrices entry by entry
    // (including the asymmetric denominators on e2's D diagonal).
    CHECK(e1.matches_printed());
    CHECK(e2.matches_printed());

    // Balanced A blocks: tr(A) = det(A).
    const auto& a1 = std::get<Quaternion>(e1.sw.A);
    CHECK(a1.trace() == a1.norm());
    CHECK(a1.trace() == RatFun::constant(a1.ring(), GaussRat(4)));
    const auto& a2 = std::get<Quaternion>(e2.sw.A);
    CHECK(a2.trace() == a2.norm());
    CHECK(a2.trace() == parse_ratfun(a2.ring(), "a^2/(a-1)"));

    // det B = 1 for both, so augmentation owns the whole unit orbit.
    CHECK(std::get<Quaternion>(e1.sw.B).norm().is_one());
    CHECK(std::get<Quaternion>(e2.sw.B).norm().is_one());
    CHECK(e1.sw.unit_vars.empty());
}

TEST_CASE("augmentation preserves the axioms") {
    for (const Switch& s : full_catalog()) {
        if (!verify_switch(s).all_ok()) continue;
        PolyRingPtr ring = s.ring();
        if (!ring->index_of("t")) continue;   // only rings carrying t
        Switch st = augment(s, RatFun::variable(ring, *ring->index_of("t")));
        CHECK(verify_switch(st).all_ok());
    }
    // Explicitly: budapest augmented in a t-ring.
    Switch bt = budapest_t();
    CHECK(verify_switch(bt).all_ok());
    CHECK(bt.unit_vars == std::vector<std::string>{"t"});

    // augment(S, 1) = S.
    Switch b = budapest();
    Switch b1 = augment(b, RatFun::constant(b.ring(), GaussRat(1)));
    CHECK(elem_equal(b1.B, b.B));
    CHECK(elem_equal(b1.C, b.C));
}

TEST_CASE("catalog e1/e2 include the t augmentation") {
    SwitchChoice e1 = make_catalog_switch("e1");
    CHECK(e1.sw.ring()->vars() == std::vector<std::string>{"x", "y", "z", "t"});
    CHECK(e1.sw.unit_vars == std::vector<std::string>{"t"});
    CHECK(e1.notes.empty());
    CHECK(verify_switch(e1.sw).all_ok());

    SwitchChoice bt = make_catalog_switch("budapest", {}, std::string("t"));
    CHECK(verify_switch(bt.sw).all_ok());

    SwitchChoice bound = make_catalog_switch("alexander", {{"B", "3"}}, {});
    CHECK(bound.sw.ring()->vars() == std::vector<std::string>{"C"});
    CHECK(verify_switch(bound.sw).all_ok());
    CHECK(bound.sw.unit_vars == std::vector<std::string>{"C"});

    CHECK_THROWS_AS(make_catalog_switch("no_such"), PreconditionError);
    CHECK_THROWS_AS(make_catalog_switch("budapest", {{"B", "2"}}, {}), PreconditionError);
}

TEST_CASE("sideways matrices and the diagonal property") {
    for (const Switch& s : {alexander_BC(), burau_C(), budapest(), budapest_t(),
                            make_e1(PolyRing::make({"x", "y", "z"})).sw}) {
        INFO("switch ", s.name);
        SidewaysPair sp = sideways(s);
        CHECK(sp.diag_unit_is_unit);
        CHECK(sp.diag_consistent);       // B^-1(1-A) == (1-D)^-1 C
        CHECK(sp.preserves_diagonal);    // S+-(a,a) = (lambda a, lambda a)
        // Sideways blocks of the inverse switch invert the sideways blocks.
        Switch si = switch_inverse(s);
        SidewaysPair spi = sideways(si);
        CHECK(ring_equal(spi.up, ring_inverse(sp.down)));
        CHECK(ring_equal(spi.down, ring_inverse(sp.up)));
    }

    // Alexander: lambda = B^-1 directly.
    Switch a = alexander_BC();
    SidewaysPair sp = sideways(a);
    CHECK(elem_equal(sp.diag_unit, elem_inv(a.B)));

    // Identity switch: lambda = 0 is not a unit; reported, not thrown.
    SidewaysPair degenerate = sideways(make_identity_switch(PolyRing::make({})));
    CHECK_FALSE(degenerate.diag_unit_is_unit);
    CHECK(elem_is_zero(degenerate.diag_unit));
}

TEST_CASE("burau conjugation data") {
    Switch b = budapest();
    RingElem one = one_like(b.A);

    BurauConjugation bc = burau_conjugator(b, 4);
    // Row r: A, BA, B^2 A, ..., ending in B^r.
    CHECK(elem_equal(bc.M.at(0, 0), one));
    CHECK(elem_equal(bc.M.at(2, 0), b.A));
    CHECK(elem_equal(bc.M.at(2, 1), b.B * b.A));
    CHECK(elem_equal(bc.M.at(2, 2), b.B * b.B));
    CHECK(elem_is_zero(bc.M.at(1, 2)));
    CHECK(elem_equal(bc.M.at(3, 2), b.B * b.B * b.A));

    // A^2 + BC = Q + (1-Q)A.
    CHECK(elem_equal(b.A * b.A + b.B * b.C, bc.Q + (one - bc.Q) * b.A));
    CHECK(verify_switch(bc.burau).all_ok());

    // Q commutes with B (checked on e1, where both are full matrices).
    Switch e1 = make_e1(PolyRing::make({"x", "y", "z"})).sw;
    RingElem q1 = burau_conjugator(e1, 2).Q;
    CHECK(elem_equal(q1 * e1.B, e1.B * q1));
}

TEST_CASE("yang-baxter holds for the catalog") {
    for (const Switch& s : full_catalog()) {
        INFO("switch ", s.name);
        CHECK(yang_baxter_holds(s));
    }
}

TEST_CASE("elementary factorization of non-commuting switches") {
    for (Switch s : {budapest(), budapest_t(), make_e1(PolyRing::make({"x", "y", "z"})).sw,
                     make_e2(PolyRing::make({"a", "b", "c"})).sw}) {
        INFO("switch ", s.name);
        CHECK(elementary_factorization_holds(s));
    }
    CHECK_THROWS_AS(elementary_factorization_holds(alexander_BC()), PreconditionError);
}

TEST_CASE("switch inverse is a genuine two-sided inverse") {
    for (const Switch& s : {alexander_BC(), budapest_t(),
                            make_e2(PolyRing::make({"a", "b", "c"})).sw}) {
        RingMatrix m = switch_matrix(s);
        RingMatrix inv = switch_inverse_matrix(s);
        RingMatrix id = ring_identity(2, s.A);
        CHECK(ring_equal(ring_mul(m, inv), id));
        CHECK(ring_equal(ring_mul(inv, m), id));
    }
}
