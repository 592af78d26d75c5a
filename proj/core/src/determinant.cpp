#include "vkl/determinant.hpp"

#include <unordered_map>

namespace vkl {

namespace {

MPoly poly_lcm(const MPoly& a, const MPoly& b) {
    MPoly g = poly_gcd(a, b);
    return (*MPoly::exact_div(a, g) * b).canonicalized();
}

RatFun det_bareiss(const Mat<RatFun>& m) {
    std::size_t n = m.rows();
    const PolyRingPtr& ring = m.at(0, 0).ring();
    MPoly one = MPoly::constant(ring, GaussRat(1));

    // Clear denominators row by row so the elimination stays polynomial;
    // the cleared factors divide back out at the end.
    Mat<MPoly> a(n, n, MPoly(ring));
    MPoly cleared = one;
    for (std::size_t i = 0; i < n; ++i) {
        MPoly rowden = one;
        for (std::size_t j = 0; j < n; ++j) rowden = poly_lcm(rowden, m.at(i, j).den());
        for (std::size_t j = 0; j < n; ++j)
            a.at(i, j) = m.at(i, j).num() * *MPoly::exact_div(rowden, m.at(i, j).den());
        cleared = cleared * rowden;
    }

    bool negate = false;
    MPoly prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a.at(piv, k).is_zero()) ++piv;
        if (piv == n) return RatFun(ring);
        if (piv != k) {
            a.swap_rows(k, piv);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MPoly num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                auto q = MPoly::exact_div(num, prev);
                if (!q) throw Error("internal: Bareiss division not exact");
                a.at(i, j) = std::move(*q);
            }
            a.at(i, k) = MPoly(ring);
        }
        prev = a.at(k, k);
    }
    MPoly det = a.at(n - 1, n - 1);
    if (negate) det = -det;
    return RatFun(std::move(det), std::move(cleared));
}

RatFun det_cofactor(const Mat<RatFun>& m) {
    std::size_t n = m.rows();
    const PolyRingPtr& ring = m.at(0, 0).ring();
    if (n > 24) throw Error("cofactor determinant limited to 24x24");
    // det over the rows 0..popcount(mask)-1 and the column subset in mask.
    std::unordered_map<std::uint32_t, RatFun> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> RatFun {
        if (mask == 0) return RatFun::constant(ring, GaussRat(1));
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        // Expand along the last remaining row; cofactor sign is (-1)^(row+k)
        // with k the position of the column within the surviving set.
        std::size_t row = static_cast<std::size_t>(__builtin_popcount(mask)) - 1;
        RatFun acc(ring);
        std::size_t k = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            if (!m.at(row, c).is_zero()) {
                RatFun term = m.at(row, c) * self(self, mask & ~(1u << c));
                acc = ((row + k) % 2) ? acc - term : acc + term;
            }
            ++k;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, (1u << n) - 1u);
}

} // namespace

RatFun det_ratfun(const Mat<RatFun>& m, DetAlgo algo) {
    if (!m.is_square()) throw Error("determinant of non-square matrix");
    if (m.rows() == 0) throw Error("determinant of empty matrix needs a ring; use det_d");
    switch (algo) {
    case DetAlgo::Bareiss: return det_bareiss(m);
    case DetAlgo::Cofactor: return det_cofactor(m);
    }
    throw Error("unreachable");
}

RatFun det_d(const RingMatrix& m, DetAlgo algo) {
    if (!m.is_square()) throw Error("determinant of non-square matrix");
    if (m.rows() == 0)
        throw Error("det_d of a 0x0 matrix has no ring context; handle upstream");
    if (is_commutative(m.at(0, 0))) {
        Mat<RatFun> c(m.rows(), m.cols(), RatFun(elem_ring(m.at(0, 0))));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                c.at(i, j) = std::get<RatFun>(m.at(i, j));
        return det_ratfun(c, algo);
    }
    return det_ratfun(embed_quat_matrix(m), algo);
}

} // namespace vkl
