#include "doctest.h"

#include "vkl/polytext.hpp"
#include "vkl/sampling.hpp"

using namespace vkl;

namespace {

const AlgebraParams HAMILTON{-1, -1};   // classical-style parameters
const AlgebraParams MAT2{-1, 1};        // the 2x2-matrix algebra

PolyRingPtr cring() { return PolyRing::make({}); }

Quaternion Q(const PolyRingPtr& r, AlgebraParams p, long a0, long a1, long a2, long a3) {
    auto c = [&](long v) { return RatFun::constant(r, GaussRat(v)); };
    return Quaternion(p, c(a0), c(a1), c(a2), c(a3));
}

} // namespace

TEST_CASE("multiplication table for all parameter choices") {
    auto r = cring();
    for (int lam : {-1, 1}) {
        for (int mu : {-1, 1}) {
            AlgebraParams p(lam, mu);
            Quaternion one = Quaternion::one(r, p);
            Quaternion i = Quaternion::unit_i(r, p);
            Quaternion j = Quaternion::unit_j(r, p);
            Quaternion k = Quaternion::unit_k(r, p);
            CHECK(i * i == one.scaled(RatFun::constant(r, GaussRat(lam))));
            CHECK(j * j == one.scaled(RatFun::constant(r, GaussRat(mu))));
            CHECK(i * j == k);
            CHECK(j * i == -k);
            CHECK(i * k == k.scaled(RatFun::constant(r, GaussRat(0))) + j.scaled(RatFun::constant(r, GaussRat(lam))));
            CHECK(j * k == i.scaled(RatFun::constant(r, GaussRat(-mu))));
            CHECK(k * k == one.scaled(RatFun::constant(r, GaussRat(-lam * mu))));
        }
    }
}

TEST_CASE("products, conjugation, norms over (-1,-1)") {
    auto r = cring();
    Quaternion one = Quaternion::one(r, HAMILTON);
    Quaternion i = Quaternion::unit_i(r, HAMILTON);
    Quaternion j = Quaternion::unit_j(r, HAMILTON);
    Quaternion k = Quaternion::unit_k(r, HAMILTON);

    CHECK((one + i) * j == j + k);
    CHECK((one + i) * (one + i).inv() == one);
    CHECK((one + i).norm() == RatFun::constant(r, GaussRat(2)));
    CHECK((one + i).inv() == Q(r, HAMILTON, 1, -1, 0, 0).scaled(RatFun::constant(r, GaussRat(mpq_class(1, 2)))));

    // inv(j) = j / mu
    CHECK(j.inv() == j.scaled(RatFun::constant(r, GaussRat(-1))));

    Sampler s(101);
    for (int it = 0; it < 30; ++it) {
        Quaternion a = s.quaternion(r, HAMILTON);
        Quaternion b = s.quaternion(r, HAMILTON);
        CHECK((a * b).norm() == a.norm() * b.norm());
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == b.conj() * a.conj());
        CHECK(a.trace() == a.coord(0) + a.coord(0));
    }
}

TEST_CASE("isotropic elements of the hyperbolic algebra are rejected") {
    auto r = cring();
    Quaternion i = Quaternion::unit_i(r, MAT2);
    Quaternion j = Quaternion::unit_j(r, MAT2);
    CHECK((i + j).norm().is_zero());
    CHECK_THROWS_AS((i + j).inv(), NotInvertible);
}

TEST_CASE("bilinear form and cross product") {
    auto r = cring();
    Quaternion one = Quaternion::one(r, HAMILTON);
    Quaternion i = Quaternion::unit_i(r, HAMILTON);
    Quaternion j = Quaternion::unit_j(r, HAMILTON);

    // The Budapest matching condition: (1+i).j = 0.
    CHECK(dot(one + i, j).is_zero());

    Sampler s(202);
    for (int it = 0; it < 30; ++it) {
        PureQuat a = s.pure_quaternion(r, HAMILTON).pure_part();
        PureQuat b = s.pure_quaternion(r, HAMILTON).pure_part();
        CHECK(cross(a, a).is_zero());
        CHECK(cross(a, b) == -cross(b, a));
        // N(a x b) = N(a) N(b) - (a.b)^2
        CHECK(cross(a, b).norm() == a.norm() * b.norm() - a.dot(b) * a.dot(b));
        // Pure product identity ab = -a.b + a x b.
        Quaternion prod = a.embed() * b.embed();
        CHECK(prod.scalar_part() == -a.dot(b));
        CHECK(prod.pure_part() == cross(a, b));
        // Commutator [A, B] = 2 a x b.
        Quaternion A = s.quaternion(r, HAMILTON), B = s.quaternion(r, HAMILTON);
        CHECK((A * B - B * A).pure_part() ==
              cross(A.pure_part(), B.pure_part()).scaled(RatFun::constant(r, GaussRat(2))));
    }
}

TEST_CASE("triple products") {
    auto r = cring();
    Quaternion i = Quaternion::unit_i(r, HAMILTON);
    Quaternion j = Quaternion::unit_j(r, HAMILTON);
    Quaternion k = Quaternion::unit_k(r, HAMILTON);
    // [i,j,k] = lambda mu = 1 over (-1,-1).
    CHECK(scalar_triple(i.pure_part(), j.pure_part(), k.pure_part()) ==
          RatFun::constant(r, GaussRat(1)));

    Sampler s(303);
    for (int it = 0; it < 30; ++it) {
        PureQuat a = s.pure_quaternion(r, HAMILTON).pure_part();
        PureQuat b = s.pure_quaternion(r, HAMILTON).pure_part();
        PureQuat c = s.pure_quaternion(r, HAMILTON).pure_part();
        CHECK(triple_cross(a, b, c) == b.scaled(c.dot(a)) - c.scaled(b.dot(a)));
        // a, b, a x b dependent exactly when a x b is isotropic.
        bool dependent = scalar_triple(a, b, cross(a, b)).is_zero();
        CHECK(dependent == cross(a, b).norm().is_zero());
    }
}

TEST_CASE("commuting iff pure parts dependent") {
    auto r = cring();
    Sampler s(404);
    for (int it = 0; it < 40; ++it) {
        Quaternion a = s.quaternion(r, HAMILTON);
        Quaternion b = s.quaternion(r, HAMILTON);
        CHECK(commutes(a, b) == cross(a.pure_part(), b.pure_part()).is_zero());
    }
    // Forced dependent pure parts commute.
    Quaternion a = Q(r, HAMILTON, 2, 1, -3, 2);
    Quaternion b = Q(r, HAMILTON, -5, 2, -6, 4);
    CHECK(commutes(a, b));
}

TEST_CASE("balanced, matching and the fundamental equation") {
    auto r = cring();
    Quaternion one = Quaternion::one(r, HAMILTON);
    Quaternion i = Quaternion::unit_i(r, HAMILTON);
    Quaternion j = Quaternion::unit_j(r, HAMILTON);

    Quaternion A = one + i;
    CHECK(is_balanced(A));
    CHECK(is_matching(A, j));
    CHECK(fundamental_holds(A, j));
    // Balanced A has N(A-1) = 1.
    CHECK((A - one).norm() == RatFun::constant(r, GaussRat(1)));

    // Commuting pair is excluded from matching.
    CHECK_FALSE(is_matching(A, i));

    Sampler s(505);
    for (int it = 0; it < 25; ++it) {
        auto [ma, mb] = s.matching_pair(r);
        CHECK(is_matching(ma, mb));
        CHECK(fundamental_holds(ma, mb));
        CHECK(matching_obstruction(ma, mb).is_zero());
    }
    for (int it = 0; it < 25; ++it) {
        auto [na, nb] = s.non_matching_pair(r);
        CHECK_FALSE(matching_obstruction(na, nb).is_zero());
        CHECK_FALSE(fundamental_holds(na, nb));
    }
}

TEST_CASE("obstruction vector is half the difference of the two sides") {
    auto r = cring();
    Sampler s(606);
    RatFun two = RatFun::constant(r, GaussRat(2));
    for (int it = 0; it < 30; ++it) {
        Quaternion A = s.quaternion(r, HAMILTON);
        Quaternion B = s.quaternion(r, HAMILTON);
        // Inverse-free form of the fundamental equation: both sides scaled
        // by N(A) N(B).
        Quaternion lhs = A.conj() * B.conj() * A * B - B * (A.conj() * B.conj() * A);
        Quaternion rhs = (B.conj() * A * B).scaled(A.norm()) - A.scaled(A.norm() * B.norm());
        Quaternion diff = rhs - lhs;
        CHECK(diff.scalar_part().is_zero());
        CHECK(diff.pure_part() == matching_obstruction(A, B).scaled(two));
    }
}

TEST_CASE("the non-definite witness over (-1,+1)") {
    auto r = PolyRing::make({"t"});
    RatFun t = RatFun::variable(r, 0);
    RatFun zero(r), one = RatFun::constant(r, GaussRat(1));
    PureQuat a(MAT2, one, t, -one);
    PureQuat b(MAT2, zero, one, zero);
    CHECK(cross(a, b) == PureQuat(MAT2, -one, zero, one));   // k - i
    // The printed dependency a - t b + a x b = 0, exact.
    CHECK((a - b.scaled(t) + cross(a, b)).is_zero());
    CHECK(a.norm() == -(t * t));
    CHECK(b.norm() == -one);
    CHECK(a.dot(b) == -t);
}

TEST_CASE("matrix model over (-1,+1)") {
    auto r = cring();
    Quaternion k = Quaternion::unit_k(r, MAT2);
    Mat<RatFun> km = to_mat2(k);
    CHECK(km.at(0, 0) == RatFun::constant(r, GaussRat(1)));
    CHECK(km.at(1, 1) == RatFun::constant(r, GaussRat(-1)));
    CHECK(km.at(0, 1).is_zero());
    CHECK(km.at(1, 0).is_zero());

    Sampler s(707);
    for (int it = 0; it < 30; ++it) {
        Quaternion a = s.quaternion(r, MAT2);
        Quaternion b = s.quaternion(r, MAT2);
        // Multiplying as matrices and as quaternions is the same.
        CHECK(to_mat2(a * b) == mat_mul(to_mat2(a), to_mat2(b), RatFun(r)));
        Mat<RatFun> m = to_mat2(a);
        CHECK(a.norm() == m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0));
        // Conjugation is the adjugate.
        Mat<RatFun> cm = to_mat2(a.conj());
        CHECK(cm.at(0, 0) == m.at(1, 1));
        CHECK(cm.at(0, 1) == -m.at(0, 1));
        CHECK(cm.at(1, 0) == -m.at(1, 0));
        CHECK(cm.at(1, 1) == m.at(0, 0));
        CHECK(from_mat2(MAT2, m) == a);
    }
}

TEST_CASE("study embedding is an algebra map for every parameter choice") {
    auto r = cring();
    Sampler s(808);
    for (int lam : {-1, 1}) {
        for (int mu : {-1, 1}) {
            AlgebraParams p(lam, mu);
            for (int it = 0; it < 10; ++it) {
                Quaternion a = s.quaternion(r, p);
                Quaternion b = s.quaternion(r, p);
                CHECK(embed_study(a * b) == mat_mul(embed_study(a), embed_study(b), RatFun(r)));
                Mat<RatFun> m = embed_study(a);
                CHECK(a.norm() == m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0));
                CHECK(unembed_study(p, m) == a);
            }
        }
    }
}

TEST_CASE("conjugation-by-multiplication expansion") {
    auto r = cring();
    Sampler s(909);
    RatFun two = RatFun::constant(r, GaussRat(2));
    for (int it = 0; it < 20; ++it) {
        Quaternion A = s.quaternion(r, HAMILTON);
        Quaternion B = s.quaternion(r, HAMILTON);
        PureQuat a = A.pure_part(), b = B.pure_part();
        const RatFun& a0 = A.scalar_part();
        const RatFun& b0 = B.scalar_part();
        // conj(B) A B = a0 (b0^2 + N(b)) + (b0^2 - N(b)) a + 2(a.b) b + 2 b0 (a x b)
        Quaternion lhs = B.conj() * A * B;
        RatFun b0sq = b0 * b0;
        Quaternion rhs = Quaternion::scalar(HAMILTON, a0 * (b0sq + b.norm())) +
                         a.scaled(b0sq - b.norm()).embed() +
                         b.scaled(two * a.dot(b)).embed() +
                         cross(a, b).scaled(two * b0).embed();
        CHECK(lhs == rhs);
    }
}
