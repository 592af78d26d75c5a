#include "vkl/ringelem.hpp"

namespace vkl {

bool is_commutative(const RingElem& e) { return std::holds_alternative<RatFun>(e); }

const PolyRingPtr& elem_ring(const RingElem& e) {
    if (const auto* f = std::get_if<RatFun>(&e)) return f->ring();
    return std::get<Quaternion>(e).ring();
}

void require_same_kind(const RingElem& a, const RingElem& b) {
    if (a.index() != b.index())
        throw RingMismatch("mixing commutative and quaternionic ring elements");
}

RingElem zero_like(const RingElem& e) {
    if (const auto* f = std::get_if<RatFun>(&e)) return RatFun(f->ring());
    const auto& q = std::get<Quaternion>(e);
    return Quaternion::zero(q.ring(), q.params());
}

RingElem one_like(const RingElem& e) {
    if (const auto* f = std::get_if<RatFun>(&e))
        return RatFun::constant(f->ring(), GaussRat(1));
    const auto& q = std::get<Quaternion>(e);
    return Quaternion::one(q.ring(), q.params());
}

bool elem_is_zero(const RingElem& e) {
    if (const auto* f = std::get_if<RatFun>(&e)) return f->is_zero();
    return std::get<Quaternion>(e).is_zero();
}

bool elem_is_one(const RingElem& e) {
    if (const auto* f = std::get_if<RatFun>(&e)) return f->is_one();
    const auto& q = std::get<Quaternion>(e);
    return q.is_scalar() && q.scalar_part().is_one();
}

RingElem operator-(const RingElem& a) {
    if (const auto* f = std::get_if<RatFun>(&a)) return -*f;
    return -std::get<Quaternion>(a);
}

RingElem operator+(const RingElem& a, const RingElem& b) {
    require_same_kind(a, b);
    if (const auto* f = std::get_if<RatFun>(&a)) return *f + std::get<RatFun>(b);
    return std::get<Quaternion>(a) + std::get<Quaternion>(b);
}

RingElem operator-(const RingElem& a, const RingElem& b) {
    require_same_kind(a, b);
    if (const auto* f = std::get_if<RatFun>(&a)) return *f - std::get<RatFun>(b);
    return std::get<Quaternion>(a) - std::get<Quaternion>(b);
}

RingElem operator*(const RingElem& a, const RingElem& b) {
    require_same_kind(a, b);
    if (const auto* f = std::get_if<RatFun>(&a)) return *f * std::get<RatFun>(b);
    return std::get<Quaternion>(a) * std::get<Quaternion>(b);
}

bool elem_equal(const RingElem& a, const RingElem& b) {
    require_same_kind(a, b);
    if (const auto* f = std::get_if<RatFun>(&a)) return *f == std::get<RatFun>(b);
    return std::get<Quaternion>(a) == std::get<Quaternion>(b);
}

RingElem scalar_mul(const RatFun& s, const RingElem& e) {
    if (const auto* f = std::get_if<RatFun>(&e)) return s * *f;
    return std::get<Quaternion>(e).scaled(s);
}

bool elem_invertible(const RingElem& e) {
    if (const auto* f = std::get_if<RatFun>(&e)) return !f->is_zero();
    return !std::get<Quaternion>(e).norm().is_zero();
}

RingElem elem_inv(const RingElem& e) {
    if (const auto* f = std::get_if<RatFun>(&e)) {
        if (f->is_zero()) throw NotInvertible("zero scalar has no inverse");
        return f->inv();
    }
    return std::get<Quaternion>(e).inv();
}

std::string elem_str(const RingElem& e) {
    if (const auto* f = std::get_if<RatFun>(&e)) return f->str();
    return std::get<Quaternion>(e).str();
}

RingMatrix ring_identity(std::size_t n, const RingElem& prototype) {
    RingMatrix m(n, n, zero_like(prototype));
    RingElem one = one_like(prototype);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
}

RingMatrix ring_zero(std::size_t rows, std::size_t cols, const RingElem& prototype) {
    return RingMatrix(rows, cols, zero_like(prototype));
}

RingMatrix ring_mul(const RingMatrix& x, const RingMatrix& y) {
    return mat_mul(x, y, zero_like(x.at(0, 0)));
}

RingMatrix ring_sub(const RingMatrix& x, const RingMatrix& y) { return mat_sub(x, y); }

bool ring_equal(const RingMatrix& x, const RingMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (!elem_equal(x.at(i, j), y.at(i, j))) return false;
    return true;
}

Mat<RatFun> embed_quat_matrix(const RingMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) throw Error("embedding an empty matrix");
    const auto& q0 = std::get<Quaternion>(m.at(0, 0));
    Mat<RatFun> r(2 * m.rows(), 2 * m.cols(), RatFun(q0.ring()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Mat<RatFun> block = embed_study(std::get<Quaternion>(m.at(i, j)));
            for (std::size_t bi = 0; bi < 2; ++bi)
                for (std::size_t bj = 0; bj < 2; ++bj)
                    r.at(2 * i + bi, 2 * j + bj) = block.at(bi, bj);
        }
    return r;
}

RingMatrix unembed_quat_matrix(AlgebraParams params, const Mat<RatFun>& m) {
    if (m.rows() % 2 || m.cols() % 2) throw Error("unembed: odd-sized matrix");
    std::size_t rows = m.rows() / 2, cols = m.cols() / 2;
    const PolyRingPtr& ring = m.at(0, 0).ring();
    RingMatrix r(rows, cols, RingElem(Quaternion::zero(ring, params)));
    Mat<RatFun> block(2, 2, RatFun(ring));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            for (std::size_t bi = 0; bi < 2; ++bi)
                for (std::size_t bj = 0; bj < 2; ++bj)
                    block.at(bi, bj) = m.at(2 * i + bi, 2 * j + bj);
            r.at(i, j) = unembed_study(params, block);
        }
    return r;
}

Mat<RatFun> invert_ratfun_matrix(const Mat<RatFun>& m) {
    if (!m.is_square()) throw Error("inverse of non-square matrix");
    std::size_t n = m.rows();
    const PolyRingPtr& ring = m.at(0, 0).ring();
    Mat<RatFun> a = m;
    Mat<RatFun> inv = mat_identity(n, RatFun(ring), RatFun::constant(ring, GaussRat(1)));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) throw NotInvertible("singular matrix");
        a.swap_rows(col, piv);
        inv.swap_rows(col, piv);
        RatFun scale = a.at(col, col).inv();
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) *= scale;
            inv.at(col, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            RatFun f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

RingMatrix ring_inverse(const RingMatrix& m) {
    if (!m.is_square()) throw Error("inverse of non-square matrix");
    if (m.rows() == 0) return m;
    if (is_commutative(m.at(0, 0))) {
        Mat<RatFun> c(m.rows(), m.cols(), RatFun(elem_ring(m.at(0, 0))));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                c.at(i, j) = std::get<RatFun>(m.at(i, j));
        Mat<RatFun> inv = invert_ratfun_matrix(c);
        RingMatrix r(m.rows(), m.cols(), zero_like(m.at(0, 0)));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = inv.at(i, j);
        return r;
    }
    const auto& q = std::get<Quaternion>(m.at(0, 0));
    Mat<RatFun> inv = invert_ratfun_matrix(embed_quat_matrix(m));
    return unembed_quat_matrix(q.params(), inv);
}

} // namespace vkl
