#pragma once

#include <random>
#include <utility>

#include "vkl/braid.hpp"
#include "vkl/quat.hpp"

namespace vkl {

/// Seeded generator for the randomized checks (property tests and the
/// selftest subcommand). Coordinates stay small integers (|c| <= bound) to
/// bound polynomial blow-up, and stay rational: over rational coordinates
/// the (-1,-1) algebra is anisotropic, which several checks rely on.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}

    long int_in(long lo, long hi);
    GaussRat small_int(long bound = 5);              // nonzero not guaranteed
    RatFun small_const(const PolyRingPtr& ring, long bound = 5);

    Quaternion quaternion(const PolyRingPtr& ring, AlgebraParams params, long bound = 5);
    Quaternion invertible_quaternion(const PolyRingPtr& ring, AlgebraParams params,
                                     long bound = 5);
    Quaternion pure_quaternion(const PolyRingPtr& ring, AlgebraParams params, long bound = 5);

    /// Rational point of the balanced quadric over (-1,-1): tr = N != 0,
    /// nonzero pure part. Uses the stereographic parametrization of the unit
    /// sphere centred at 1.
    Quaternion balanced_quaternion(const PolyRingPtr& ring);

    /// Matching pair (A, B) over (-1,-1): A balanced, A.B = 0 solved
    /// linearly for B's coordinates, non-commuting.
    std::pair<Quaternion, Quaternion> matching_pair(const PolyRingPtr& ring);

    /// Invertible, non-commuting and explicitly not matching, with A-1
    /// invertible; the fundamental-equation obstruction must be nonzero for
    /// these.
    std::pair<Quaternion, Quaternion> non_matching_pair(const PolyRingPtr& ring);

    VirtualBraidWord braid_word(int strands, int length, bool allow_virtual);

private:
    std::mt19937_64 gen_;
};

} // namespace vkl
