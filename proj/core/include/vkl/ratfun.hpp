#pragma once

#include <string>
#include <vector>

#include "vkl/mpoly.hpp"

namespace vkl {

/// Reduced fraction of multivariate polynomials over Q(i): the universal
/// scalar of the library.
///
/// Canonical form invariants: den != 0; gcd(num, den) = 1; den is primitive
/// with positive leading coefficient (the scalar unit is absorbed into num);
/// zero is 0/1. Equality is literal equality of canonical forms.
class RatFun {
public:
    explicit RatFun(PolyRingPtr ring)
        : num_(MPoly(ring)), den_(MPoly::constant(ring, GaussRat(1))) {}
    RatFun(MPoly num);                 // NOLINT: polynomial embeds implicitly
    RatFun(MPoly num, MPoly den);

    static RatFun constant(PolyRingPtr ring, GaussRat value);
    /// var^power; negative powers land in the denominator.
    static RatFun variable(PolyRingPtr ring, std::size_t var, int power = 1);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const PolyRingPtr& ring() const { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    GaussRat constant_value() const { return num_.constant_value(); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun inv() const;
    RatFun pow(int k) const;

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    bool operator==(const RatFun& o) const;
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    std::string str() const;

private:
    void reduce();
    static RatFun from_coprime(MPoly num, MPoly den);
    MPoly num_, den_;
};

/// Image of a polynomial under var -> images[var]; the images fix the target
/// ring, so this also performs ring extension and parameter binding.
RatFun substitute(const MPoly& p, const std::vector<RatFun>& images);
RatFun substitute(const RatFun& f, const std::vector<RatFun>& images);

/// A rational function normalized modulo its unit orbit: numerator and
/// denominator separately primitive with positive leading coefficient, and
/// valuation zero in each listed unit variable.
struct UnitNormalized {
    MPoly num, den;
    bool operator==(const UnitNormalized& o) const { return num == o.num && den == o.den; }
    bool operator!=(const UnitNormalized& o) const { return !(*this == o); }
    std::string str() const;
};

/// Collapse the orbit of f under multiplication by powers of the listed
/// variables and by nonzero scalars. With unit_vars = {t} this is Laurent
/// normalization in t: all t-exponents >= 0 and a nonzero t-constant term.
/// Rejects zero input.
UnitNormalized unit_normalize(const RatFun& f, const std::vector<std::size_t>& unit_vars);

} // namespace vkl
