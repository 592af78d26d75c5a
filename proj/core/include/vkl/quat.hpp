#pragma once

#include <array>
#include <string>

#include "vkl/matrix.hpp"
#include "vkl/ratfun.hpp"

namespace vkl {

/// Parameters (lambda, mu) of a generalized quaternion algebra with
/// i^2 = lambda, j^2 = mu, ij = -ji = k. Restricted to {+1, -1}: this covers
/// the classical-style algebra (-1,-1) and the 2x2-matrix algebra (-1,+1),
/// and keeps all square roots needed by the determinant embedding inside
/// Q(i).
class AlgebraParams {
public:
    AlgebraParams(int lambda, int mu) : lambda_(lambda), mu_(mu) {
        if ((lambda != 1 && lambda != -1) || (mu != 1 && mu != -1))
            throw UnsupportedParams("algebra parameters must be +1 or -1");
    }
    int lambda() const { return lambda_; }
    int mu() const { return mu_; }
    bool operator==(const AlgebraParams& o) const {
        return lambda_ == o.lambda_ && mu_ == o.mu_;
    }
    bool operator!=(const AlgebraParams& o) const { return !(*this == o); }

private:
    int lambda_, mu_;
};

class PureQuat;

/// Element of the generalized quaternion algebra (lambda,mu / F) where F is
/// the rational function field of the coordinate ring. Immutable value type.
class Quaternion {
public:
    Quaternion(AlgebraParams params, RatFun a0, RatFun a1, RatFun a2, RatFun a3);

    static Quaternion zero(PolyRingPtr ring, AlgebraParams params);
    static Quaternion one(PolyRingPtr ring, AlgebraParams params);
    static Quaternion scalar(AlgebraParams params, RatFun a0);
    static Quaternion unit_i(PolyRingPtr ring, AlgebraParams params);
    static Quaternion unit_j(PolyRingPtr ring, AlgebraParams params);
    static Quaternion unit_k(PolyRingPtr ring, AlgebraParams params);

    const AlgebraParams& params() const { return params_; }
    const PolyRingPtr& ring() const { return c_[0].ring(); }
    const RatFun& coord(std::size_t k) const { return c_[k]; }

    const RatFun& scalar_part() const { return c_[0]; }
    PureQuat pure_part() const;

    bool is_zero() const;
    bool is_scalar() const;
    bool is_pure() const { return c_[0].is_zero(); }

    Quaternion operator-() const;
    Quaternion operator+(const Quaternion& o) const;
    Quaternion operator-(const Quaternion& o) const;
    Quaternion operator*(const Quaternion& o) const;   // the multiplication table
    Quaternion scaled(const RatFun& s) const;

    Quaternion conj() const;
    RatFun norm() const;    // a0^2 - lambda a1^2 - mu a2^2 + lambda mu a3^2
    RatFun trace() const;   // 2 a0
    /// N(A)^{-1} conj(A); throws NotInvertible on isotropic input.
    Quaternion inv() const;

    bool operator==(const Quaternion& o) const;
    bool operator!=(const Quaternion& o) const { return !(*this == o); }

    std::string str() const;

private:
    AlgebraParams params_;
    std::array<RatFun, 4> c_;
};

/// Pure quaternion (zero scalar part), the 3-vector side of the algebra.
class PureQuat {
public:
    PureQuat(AlgebraParams params, RatFun a1, RatFun a2, RatFun a3);

    const AlgebraParams& params() const { return params_; }
    const RatFun& coord(std::size_t k) const { return c_[k]; }   // k in 0..2 for i,j,k
    Quaternion embed() const;
    bool is_zero() const;

    PureQuat operator-() const;
    PureQuat operator+(const PureQuat& o) const;
    PureQuat operator-(const PureQuat& o) const;
    PureQuat scaled(const RatFun& s) const;

    /// Restriction of the bilinear form: -lambda a1 b1 - mu a2 b2 + lambda mu a3 b3.
    RatFun dot(const PureQuat& o) const;
    RatFun norm() const { return dot(*this); }

    bool operator==(const PureQuat& o) const;
    bool operator!=(const PureQuat& o) const { return !(*this == o); }

private:
    AlgebraParams params_;
    std::array<RatFun, 3> c_;
};

/// Bilinear form on whole quaternions:
/// a0 b0 - lambda a1 b1 - mu a2 b2 + lambda mu a3 b3.
RatFun dot(const Quaternion& a, const Quaternion& b);

/// Cross product: the symbolic determinant with first row (-mu i, -lambda j, k);
/// equals the pure part of the product of two pure quaternions.
PureQuat cross(const PureQuat& a, const PureQuat& b);

/// a x (b x c).
PureQuat triple_cross(const PureQuat& a, const PureQuat& b, const PureQuat& c);

/// [a,b,c] = a . (b x c) = lambda mu det of the coordinate rows.
RatFun scalar_triple(const PureQuat& a, const PureQuat& b, const PureQuat& c);

bool commutes(const Quaternion& a, const Quaternion& b);

/// tr(A) = N(A) != 0.
bool is_balanced(const Quaternion& a);

/// Non-commuting, both invertible, a balanced, a . b = 0. Degenerate inputs
/// return false rather than erroring.
bool is_matching(const Quaternion& a, const Quaternion& b);

/// Checks A^{-1}B^{-1}AB - BA^{-1}B^{-1}A = B^{-1}AB - A by full expansion.
/// Requires A, B and A-1 invertible.
bool fundamental_holds(const Quaternion& a, const Quaternion& b);

/// The obstruction vector whose vanishing is equivalent (for anisotropic
/// coordinates) to the fundamental equation:
///   (tr A - N A) N(b) a + (N A - tr A)(a.b) b + (b0 (N A - tr A) + 2 A.B) a x b.
PureQuat matching_obstruction(const Quaternion& a, const Quaternion& b);

/// Quaternion <-> 2x2 matrix model over (-1, +1): 1, i, j, k map to the
/// identity and the Pauli matrices. Products, norms and conjugation
/// correspond to matrix products, determinants and adjugates.
Mat<RatFun> to_mat2(const Quaternion& a);
Quaternion from_mat2(AlgebraParams params, const Mat<RatFun>& m);

/// General 2x2 embedding over Q(i) coefficients for any lambda, mu in {+1,-1}:
///   i -> [[0, s], [-s, 0]],  j -> [[0, u], [u, 0]],  k -> [[v, 0], [0, -v]]
/// with s = sqrt(-lambda), u = sqrt(mu), v = sqrt(-lambda mu) in {1, I}.
/// For (-1, +1) this is exactly the Pauli correspondence above.
Mat<RatFun> embed_study(const Quaternion& a);
Quaternion unembed_study(AlgebraParams params, const Mat<RatFun>& m);

} // namespace vkl
