#pragma once

#include <gmpxx.h>

#include <string>

#include "vkl/errors.hpp"

namespace vkl {

/// Gaussian rational: an element of Q(i), kept exact via GMP rationals.
/// The universal coefficient field of the library; every polynomial,
/// rational function and quaternion coordinate reduces to these.
class GaussRat {
public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long n) : re_(n), im_(0) {}           // NOLINT: implicit by design
    GaussRat(mpq_class re) : re_(std::move(re)), im_(0) {}
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }
    static GaussRat from_ratio(long num, long den);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_rational() const { return im_ == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    /// re^2 + im^2, always a non-negative rational; zero only at zero.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat operator+(const GaussRat& o) const { return GaussRat(re_ + o.re_, im_ + o.im_); }
    GaussRat operator-(const GaussRat& o) const { return GaussRat(re_ - o.re_, im_ - o.im_); }
    GaussRat operator*(const GaussRat& o) const {
        return GaussRat(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    GaussRat operator/(const GaussRat& o) const;
    GaussRat inv() const;

    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
    GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }

    bool operator==(const GaussRat& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }

    /// Plain rendering, e.g. "3/2", "-1", "I", "(2-1/3*I)"; used in error
    /// messages and by the canonical polynomial printer.
    std::string str() const;

private:
    mpq_class re_, im_;
};

inline GaussRat GaussRat::from_ratio(long num, long den) {
    if (den == 0) throw DivisionByZero("0");
    mpq_class q(num, den);
    q.canonicalize();
    return GaussRat(q);
}

inline GaussRat GaussRat::inv() const {
    if (is_zero()) throw DivisionByZero("0");
    mpq_class n = norm();
    return GaussRat(re_ / n, -im_ / n);
}

inline GaussRat GaussRat::operator/(const GaussRat& o) const {
    if (o.is_zero()) throw DivisionByZero("0");
    return *this * o.inv();
}

std::string rational_str(const mpq_class& q);

} // namespace vkl
