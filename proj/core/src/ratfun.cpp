#include "vkl/ratfun.hpp"

#include "vkl/errors.hpp"

namespace vkl {

RatFun::RatFun(MPoly num)
    : num_(std::move(num)), den_(MPoly::constant(num_.ring(), GaussRat(1))) {}

RatFun::RatFun(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_ring(num_.ring(), den_.ring());
    reduce();
}

RatFun RatFun::constant(PolyRingPtr ring, GaussRat value) {
    return RatFun(MPoly::constant(std::move(ring), std::move(value)));
}

RatFun RatFun::variable(PolyRingPtr ring, std::size_t var, int power) {
    if (power >= 0) return RatFun(MPoly::variable(std::move(ring), var, power));
    MPoly one = MPoly::constant(ring, GaussRat(1));
    return RatFun(one, MPoly::variable(std::move(ring), var, -power));
}

void RatFun::reduce() {
    if (den_.is_zero()) throw DivisionByZero(num_.str() + " / 0");
    if (num_.is_zero()) {
        den_ = MPoly::constant(num_.ring(), GaussRat(1));
        return;
    }
    if (!num_.is_constant() && !den_.is_constant()) {
        MPoly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *MPoly::exact_div(num_, g);
            den_ = *MPoly::exact_div(den_, g);
        }
    }
    GaussRat u = den_.canonical_unit();
    if (!u.is_one()) {
        GaussRat ui = u.inv();
        num_ = num_.scaled(ui);
        den_ = den_.scaled(ui);
    }
}

// Operands already coprime; only the unit of the denominator is normalized.
RatFun RatFun::from_coprime(MPoly num, MPoly den) {
    RatFun r(num.ring());
    GaussRat u = den.canonical_unit();
    if (u.is_one()) {
        r.num_ = std::move(num);
        r.den_ = std::move(den);
    } else {
        GaussRat ui = u.inv();
        r.num_ = num.scaled(ui);
        r.den_ = den.scaled(ui);
    }
    return r;
}

RatFun RatFun::operator-() const {
    RatFun r(ring());
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

// Addition and multiplication keep the gcd arguments small by cancelling
// cross factors first (the canonical-form invariants make the results
// coprime by construction).

RatFun RatFun::operator+(const RatFun& o) const {
    require_same_ring(ring(), o.ring());
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        MPoly n = num_ + o.num_;
        if (n.is_zero()) return RatFun(ring());
        MPoly h = poly_gcd(n, den_);
        if (h.is_one()) return from_coprime(std::move(n), den_);
        return from_coprime(*MPoly::exact_div(n, h), *MPoly::exact_div(den_, h));
    }
    MPoly g = poly_gcd(den_, o.den_);
    if (g.is_one()) {
        MPoly n = num_ * o.den_ + o.num_ * den_;
        if (n.is_zero()) return RatFun(ring());
        return from_coprime(std::move(n), den_ * o.den_);
    }
    MPoly da = *MPoly::exact_div(den_, g);
    MPoly db = *MPoly::exact_div(o.den_, g);
    MPoly n = num_ * db + o.num_ * da;
    if (n.is_zero()) return RatFun(ring());
    MPoly h = poly_gcd(n, g);
    if (h.is_one()) return from_coprime(std::move(n), den_ * db);
    return from_coprime(*MPoly::exact_div(n, h), *MPoly::exact_div(den_, h) * db);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
    require_same_ring(ring(), o.ring());
    if (is_zero() || o.is_zero()) return RatFun(ring());
    MPoly g1 = poly_gcd(num_, o.den_);
    MPoly g2 = poly_gcd(o.num_, den_);
    MPoly n = *MPoly::exact_div(num_, g1) * *MPoly::exact_div(o.num_, g2);
    MPoly d = *MPoly::exact_div(den_, g2) * *MPoly::exact_div(o.den_, g1);
    return from_coprime(std::move(n), std::move(d));
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inv(); }

RatFun RatFun::inv() const {
    if (is_zero()) throw DivisionByZero(str());
    return from_coprime(den_, num_);
}

RatFun RatFun::pow(int k) const {
    if (k < 0) return inv().pow(-k);
    return RatFun(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
}

bool RatFun::operator==(const RatFun& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

RatFun substitute(const MPoly& p, const std::vector<RatFun>& images) {
    if (images.size() != p.ring()->arity())
        throw Error("substitute: one image required per ring variable");
    PolyRingPtr target = images.empty() ? p.ring() : images.front().ring();
    RatFun acc(target);
    for (const auto& [e, c] : p.terms()) {
        RatFun term = RatFun::constant(target, c);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (e[i] != 0) term *= images[i].pow(e[i]);
        acc += term;
    }
    return acc;
}

RatFun substitute(const RatFun& f, const std::vector<RatFun>& images) {
    return substitute(f.num(), images) / substitute(f.den(), images);
}

UnitNormalized unit_normalize(const RatFun& f, const std::vector<std::size_t>& unit_vars) {
    if (f.is_zero()) throw Error("unit_normalize: zero input has no normal form");
    MPoly num = f.num();
    MPoly den = f.den();
    for (std::size_t v : unit_vars) {
        int a = num.min_degree_in(v);
        if (a > 0) num = *MPoly::exact_div(num, MPoly::variable(num.ring(), v, a));
        int b = den.min_degree_in(v);
        if (b > 0) den = *MPoly::exact_div(den, MPoly::variable(den.ring(), v, b));
    }
    return UnitNormalized{num.canonicalized(), den.canonicalized()};
}

} // namespace vkl
