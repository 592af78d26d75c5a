#pragma once

#include "vkl/ringelem.hpp"

namespace vkl {

enum class DetAlgo {
    Bareiss,    // fraction-free elimination after clearing row denominators
    Cofactor,   // Laplace expansion with column-subset memoization
};

/// Exact determinant of a commutative matrix. The empty 0x0 matrix has
/// determinant 1.
RatFun det_ratfun(const Mat<RatFun>& m, DetAlgo algo = DetAlgo::Bareiss);

/// The determinant functional d on matrices over the switch's ring:
/// commutative entries take the ordinary determinant, quaternionic entries
/// are pushed through the 2x2 embedding (doubling the size) first.
/// Multiplicative, d(1) = 1, and d(M) = 0 exactly when M is singular.
RatFun det_d(const RingMatrix& m, DetAlgo algo = DetAlgo::Bareiss);

} // namespace vkl
