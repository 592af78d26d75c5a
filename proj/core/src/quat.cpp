#include "vkl/quat.hpp"

#include <sstream>

namespace vkl {

namespace {

void require_same(const Quaternion& a, const Quaternion& b) {
    if (a.params() != b.params())
        throw RingMismatch("quaternions have different algebra parameters");
    require_same_ring(a.ring(), b.ring());
}

void require_same(const PureQuat& a, const PureQuat& b) {
    if (a.params() != b.params())
        throw RingMismatch("pure quaternions have different algebra parameters");
}

RatFun q_const(const PolyRingPtr& ring, long v) {
    return RatFun::constant(ring, GaussRat(v));
}

// sqrt of e in {+1, -1} inside Q(i).
GaussRat sqrt_sign(int e) { return e == 1 ? GaussRat(1) : GaussRat::i(); }

} // namespace

Quaternion::Quaternion(AlgebraParams params, RatFun a0, RatFun a1, RatFun a2, RatFun a3)
    : params_(params), c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {
    require_same_ring(c_[0].ring(), c_[1].ring());
    require_same_ring(c_[0].ring(), c_[2].ring());
    require_same_ring(c_[0].ring(), c_[3].ring());
}

Quaternion Quaternion::zero(PolyRingPtr ring, AlgebraParams params) {
    RatFun z(ring);
    return Quaternion(params, z, z, z, z);
}

Quaternion Quaternion::one(PolyRingPtr ring, AlgebraParams params) {
    RatFun z(ring);
    return Quaternion(params, q_const(ring, 1), z, z, z);
}

Quaternion Quaternion::scalar(AlgebraParams params, RatFun a0) {
    RatFun z(a0.ring());
    return Quaternion(params, std::move(a0), z, z, z);
}

Quaternion Quaternion::unit_i(PolyRingPtr ring, AlgebraParams params) {
    RatFun z(ring);
    return Quaternion(params, z, q_const(ring, 1), z, z);
}

Quaternion Quaternion::unit_j(PolyRingPtr ring, AlgebraParams params) {
    RatFun z(ring);
    return Quaternion(params, z, z, q_const(ring, 1), z);
}

Quaternion Quaternion::unit_k(PolyRingPtr ring, AlgebraParams params) {
    RatFun z(ring);
    return Quaternion(params, z, z, z, q_const(ring, 1));
}

PureQuat Quaternion::pure_part() const { return PureQuat(params_, c_[1], c_[2], c_[3]); }

bool Quaternion::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool Quaternion::is_scalar() const {
    return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

Quaternion Quaternion::operator-() const {
    return Quaternion(params_, -c_[0], -c_[1], -c_[2], -c_[3]);
}

Quaternion Quaternion::operator+(const Quaternion& o) const {
    require_same(*this, o);
    return Quaternion(params_, c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2],
                      c_[3] + o.c_[3]);
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
    require_same(*this, o);
    return Quaternion(params_, c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2],
                      c_[3] - o.c_[3]);
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
    require_same(*this, o);
    const RatFun &a0 = c_[0], &a1 = c_[1], &a2 = c_[2], &a3 = c_[3];
    const RatFun &b0 = o.c_[0], &b1 = o.c_[1], &b2 = o.c_[2], &b3 = o.c_[3];
    RatFun lam = q_const(ring(), params_.lambda());
    RatFun mu = q_const(ring(), params_.mu());
    RatFun s0 = a0 * b0 + lam * (a1 * b1) + mu * (a2 * b2) - lam * mu * (a3 * b3);
    RatFun s1 = a0 * b1 + a1 * b0 - mu * (a2 * b3 - a3 * b2);
    RatFun s2 = a0 * b2 + a2 * b0 - lam * (a3 * b1 - a1 * b3);
    RatFun s3 = a0 * b3 + a3 * b0 + (a1 * b2 - a2 * b1);
    return Quaternion(params_, std::move(s0), std::move(s1), std::move(s2), std::move(s3));
}

Quaternion Quaternion::scaled(const RatFun& s) const {
    return Quaternion(params_, c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s);
}

Quaternion Quaternion::conj() const {
    return Quaternion(params_, c_[0], -c_[1], -c_[2], -c_[3]);
}

RatFun Quaternion::norm() const {
    RatFun lam = q_const(ring(), params_.lambda());
    RatFun mu = q_const(ring(), params_.mu());
    return c_[0] * c_[0] - lam * (c_[1] * c_[1]) - mu * (c_[2] * c_[2]) +
           lam * mu * (c_[3] * c_[3]);
}

RatFun Quaternion::trace() const { return c_[0] + c_[0]; }

Quaternion Quaternion::inv() const {
    RatFun n = norm();
    if (n.is_zero())
        throw NotInvertible("isotropic quaternion (norm 0) has no inverse: " + str());
    return conj().scaled(n.inv());
}

bool Quaternion::operator==(const Quaternion& o) const {
    require_same(*this, o);
    return c_ == o.c_;
}

std::string Quaternion::str() const {
    static const char* basis[4] = {"", "i", "j", "k"};
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < 4; ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[k].str() << ")" << basis[k];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

PureQuat::PureQuat(AlgebraParams params, RatFun a1, RatFun a2, RatFun a3)
    : params_(params), c_{std::move(a1), std::move(a2), std::move(a3)} {}

Quaternion PureQuat::embed() const {
    return Quaternion(params_, RatFun(c_[0].ring()), c_[0], c_[1], c_[2]);
}

bool PureQuat::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero();
}

PureQuat PureQuat::operator-() const { return PureQuat(params_, -c_[0], -c_[1], -c_[2]); }

PureQuat PureQuat::operator+(const PureQuat& o) const {
    require_same(*this, o);
    return PureQuat(params_, c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]);
}

PureQuat PureQuat::operator-(const PureQuat& o) const {
    require_same(*this, o);
    return PureQuat(params_, c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2]);
}

PureQuat PureQuat::scaled(const RatFun& s) const {
    return PureQuat(params_, c_[0] * s, c_[1] * s, c_[2] * s);
}

RatFun PureQuat::dot(const PureQuat& o) const {
    require_same(*this, o);
    const PolyRingPtr& ring = c_[0].ring();
    RatFun lam = q_const(ring, params_.lambda());
    RatFun mu = q_const(ring, params_.mu());
    return -(lam * (c_[0] * o.c_[0])) - mu * (c_[1] * o.c_[1]) + lam * mu * (c_[2] * o.c_[2]);
}

bool PureQuat::operator==(const PureQuat& o) const {
    require_same(*this, o);
    return c_ == o.c_;
}

RatFun dot(const Quaternion& a, const Quaternion& b) {
    return a.scalar_part() * b.scalar_part() + a.pure_part().dot(b.pure_part());
}

PureQuat cross(const PureQuat& a, const PureQuat& b) {
    const PolyRingPtr& ring = a.coord(0).ring();
    RatFun lam = RatFun::constant(ring, GaussRat(a.params().lambda()));
    RatFun mu = RatFun::constant(ring, GaussRat(a.params().mu()));
    RatFun c1 = -(mu * (a.coord(1) * b.coord(2) - a.coord(2) * b.coord(1)));
    RatFun c2 = lam * (a.coord(0) * b.coord(2) - a.coord(2) * b.coord(0));
    RatFun c3 = a.coord(0) * b.coord(1) - a.coord(1) * b.coord(0);
    return PureQuat(a.params(), std::move(c1), std::move(c2), std::move(c3));
}

PureQuat triple_cross(const PureQuat& a, const PureQuat& b, const PureQuat& c) {
    return cross(a, cross(b, c));
}

RatFun scalar_triple(const PureQuat& a, const PureQuat& b, const PureQuat& c) {
    return a.dot(cross(b, c));
}

bool commutes(const Quaternion& a, const Quaternion& b) { return a * b == b * a; }

bool is_balanced(const Quaternion& a) {
    RatFun n = a.norm();
    return !n.is_zero() && a.trace() == n;
}

bool is_matching(const Quaternion& a, const Quaternion& b) {
    if (a.norm().is_zero() || b.norm().is_zero()) return false;
    if (commutes(a, b)) return false;
    return is_balanced(a) && dot(a, b).is_zero();
}

bool fundamental_holds(const Quaternion& a, const Quaternion& b) {
    const PolyRingPtr& ring = a.scalar_part().ring();
    Quaternion one = Quaternion::one(ring, a.params());
    if (a.norm().is_zero() || b.norm().is_zero() || (a - one).norm().is_zero())
        throw NotInvertible("fundamental equation needs A, B and A-1 invertible");
    Quaternion ai = a.inv();
    Quaternion bi = b.inv();
    Quaternion lhs = ai * bi * a * b - b * ai * bi * a;
    Quaternion rhs = bi * a * b - a;
    return lhs == rhs;
}

PureQuat matching_obstruction(const Quaternion& A, const Quaternion& B) {
    PureQuat a = A.pure_part();
    PureQuat b = B.pure_part();
    RatFun gap = A.norm() - A.trace();
    RatFun two = RatFun::constant(A.ring(), GaussRat(2));
    RatFun c1 = -gap * b.norm();
    RatFun c2 = gap * a.dot(b);
    RatFun c3 = B.scalar_part() * gap + two * dot(A, B);
    return a.scaled(c1) + b.scaled(c2) + cross(a, b).scaled(c3);
}

Mat<RatFun> embed_study(const Quaternion& a) {
    const AlgebraParams& p = a.params();
    const PolyRingPtr& ring = a.ring();
    RatFun s = RatFun::constant(ring, sqrt_sign(-p.lambda()));
    RatFun u = RatFun::constant(ring, sqrt_sign(p.mu()));
    // The root of -lambda mu is pinned to s u, otherwise ij = k breaks.
    RatFun v = s * u;
    Mat<RatFun> m(2, 2, RatFun(ring));
    m.at(0, 0) = a.coord(0) + a.coord(3) * v;
    m.at(0, 1) = a.coord(1) * s + a.coord(2) * u;
    m.at(1, 0) = -(a.coord(1) * s) + a.coord(2) * u;
    m.at(1, 1) = a.coord(0) - a.coord(3) * v;
    return m;
}

Quaternion unembed_study(AlgebraParams params, const Mat<RatFun>& m) {
    if (m.rows() != 2 || m.cols() != 2) throw Error("unembed_study: expected a 2x2 matrix");
    const PolyRingPtr& ring = m.at(0, 0).ring();
    RatFun s = RatFun::constant(ring, sqrt_sign(-params.lambda()));
    RatFun u = RatFun::constant(ring, sqrt_sign(params.mu()));
    RatFun v = s * u;
    RatFun half = RatFun::constant(ring, GaussRat(mpq_class(1, 2)));
    RatFun a0 = (m.at(0, 0) + m.at(1, 1)) * half;
    RatFun a3 = (m.at(0, 0) - m.at(1, 1)) * half / v;
    RatFun a1 = (m.at(0, 1) - m.at(1, 0)) * half / s;
    RatFun a2 = (m.at(0, 1) + m.at(1, 0)) * half / u;
    return Quaternion(params, std::move(a0), std::move(a1), std::move(a2), std::move(a3));
}

Mat<RatFun> to_mat2(const Quaternion& a) {
    if (a.params() != AlgebraParams(-1, 1))
        throw UnsupportedParams("matrix model requires parameters (-1, +1)");
    return embed_study(a);   // all three embedding constants are 1 here
}

Quaternion from_mat2(AlgebraParams params, const Mat<RatFun>& m) {
    if (params != AlgebraParams(-1, 1))
        throw UnsupportedParams("matrix model requires parameters (-1, +1)");
    return unembed_study(params, m);
}

} // namespace vkl
