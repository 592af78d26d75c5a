#pragma once

#include <string>
#include <variant>

#include "vkl/matrix.hpp"
#include "vkl/quat.hpp"

namespace vkl {

/// Entry of a switch or presentation matrix: either a commutative scalar
/// (rational function) or a generalized quaternion. Within one switch or
/// matrix every entry holds the same alternative.
using RingElem = std::variant<RatFun, Quaternion>;

bool is_commutative(const RingElem& e);
const PolyRingPtr& elem_ring(const RingElem& e);
void require_same_kind(const RingElem& a, const RingElem& b);

RingElem zero_like(const RingElem& e);
RingElem one_like(const RingElem& e);
bool elem_is_zero(const RingElem& e);
bool elem_is_one(const RingElem& e);

RingElem operator-(const RingElem& a);
RingElem operator+(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a, const RingElem& b);
RingElem operator*(const RingElem& a, const RingElem& b);
bool elem_equal(const RingElem& a, const RingElem& b);

/// Multiplication by a central scalar.
RingElem scalar_mul(const RatFun& s, const RingElem& e);

bool elem_invertible(const RingElem& e);
RingElem elem_inv(const RingElem& e);   // throws NotInvertible

std::string elem_str(const RingElem& e);

using RingMatrix = Mat<RingElem>;

RingMatrix ring_identity(std::size_t n, const RingElem& prototype);
RingMatrix ring_zero(std::size_t rows, std::size_t cols, const RingElem& prototype);
RingMatrix ring_mul(const RingMatrix& x, const RingMatrix& y);
RingMatrix ring_sub(const RingMatrix& x, const RingMatrix& y);
bool ring_equal(const RingMatrix& x, const RingMatrix& y);

/// Entry-wise 2x2 embedding of a quaternionic matrix into a commutative
/// matrix of twice the size; an algebra isomorphism for parameters in
/// {+1,-1} over Q(i) coefficients.
Mat<RatFun> embed_quat_matrix(const RingMatrix& m);
RingMatrix unembed_quat_matrix(AlgebraParams params, const Mat<RatFun>& m);

/// Exact inverse over the fraction field; throws NotInvertible on singular
/// input.
Mat<RatFun> invert_ratfun_matrix(const Mat<RatFun>& m);

/// Inverse of a square matrix over the switch's ring. Commutative entries
/// invert directly; quaternionic entries go through the 2x2 embedding, so
/// zero-divisor pivots cannot produce false negatives.
RingMatrix ring_inverse(const RingMatrix& m);

} // namespace vkl
