#include "vkl/sampling.hpp"

namespace vkl {

long Sampler::int_in(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen_);
}

GaussRat Sampler::small_int(long bound) { return GaussRat(int_in(-bound, bound)); }

RatFun Sampler::small_const(const PolyRingPtr& ring, long bound) {
    return RatFun::constant(ring, small_int(bound));
}

Quaternion Sampler::quaternion(const PolyRingPtr& ring, AlgebraParams params, long bound) {
    return Quaternion(params, small_const(ring, bound), small_const(ring, bound),
                      small_const(ring, bound), small_const(ring, bound));
}

Quaternion Sampler::invertible_quaternion(const PolyRingPtr& ring, AlgebraParams params,
                                          long bound) {
    while (true) {
        Quaternion q = quaternion(ring, params, bound);
        if (!q.norm().is_zero()) return q;
    }
}

Quaternion Sampler::pure_quaternion(const PolyRingPtr& ring, AlgebraParams params,
                                    long bound) {
    return Quaternion(params, RatFun(ring), small_const(ring, bound),
                      small_const(ring, bound), small_const(ring, bound));
}

Quaternion Sampler::balanced_quaternion(const PolyRingPtr& ring) {
    AlgebraParams params(-1, -1);
    while (true) {
        mpq_class u1(int_in(-3, 3)), u2(int_in(-3, 3)), u3(int_in(-3, 3));
        if (u1 == 0 && u2 == 0 && u3 == 0) continue;
        mpq_class s = u1 * u1 + u2 * u2 + u3 * u3;
        mpq_class f = mpq_class(2) / (1 + s);
        auto coord = [&](const mpq_class& v) {
            mpq_class q = f * v;
            q.canonicalize();
            return RatFun::constant(ring, GaussRat(q));
        };
        return Quaternion(params, coord(1), coord(u1), coord(u2), coord(u3));
    }
}

std::pair<Quaternion, Quaternion> Sampler::matching_pair(const PolyRingPtr& ring) {
    AlgebraParams params(-1, -1);
    while (true) {
        Quaternion a = balanced_quaternion(ring);
        RatFun b1 = small_const(ring), b2 = small_const(ring), b3 = small_const(ring);
        // A.B = a0 b0 + a1 b1 + a2 b2 + a3 b3 over (-1,-1); solve for b0.
        RatFun b0 = -(a.coord(1) * b1 + a.coord(2) * b2 + a.coord(3) * b3) / a.coord(0);
        Quaternion b(params, b0, b1, b2, b3);
        if (b.is_zero() || b.norm().is_zero()) continue;
        if (commutes(a, b)) continue;
        return {a, b};
    }
}

std::pair<Quaternion, Quaternion> Sampler::non_matching_pair(const PolyRingPtr& ring) {
    AlgebraParams params(-1, -1);
    Quaternion one = Quaternion::one(ring, params);
    while (true) {
        Quaternion a = quaternion(ring, params);
        Quaternion b = quaternion(ring, params);
        if (a.norm().is_zero() || b.norm().is_zero()) continue;
        if ((a - one).norm().is_zero()) continue;
        if (commutes(a, b)) continue;
        if (is_matching(a, b)) continue;
        return {a, b};
    }
}

VirtualBraidWord Sampler::braid_word(int strands, int length, bool allow_virtual) {
    std::vector<BraidLetter> letters;
    for (int k = 0; k < length; ++k) {
        int pick = static_cast<int>(int_in(0, allow_virtual ? 2 : 1));
        BraidLetter::Kind kind = pick == 0   ? BraidLetter::Kind::Sigma
                                 : pick == 1 ? BraidLetter::Kind::SigmaInv
                                             : BraidLetter::Kind::Tau;
        letters.push_back(BraidLetter{kind, static_cast<int>(int_in(1, strands - 1))});
    }
    return VirtualBraidWord(strands, std::move(letters));
}

} // namespace vkl
