#include "vkl/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "vkl/errors.hpp"

namespace vkl {

PolyRingPtr PolyRing::make(std::vector<std::string> vars) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw Error("duplicate variable name in ring: " + vars[i]);
    return PolyRingPtr(new PolyRing(std::move(vars)));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

void require_same_ring(const PolyRingPtr& a, const PolyRingPtr& b) {
    if (a == b) return;
    if (a && b && a->same_as(*b)) return;
    throw RingMismatch("operands live in different polynomial rings");
}

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

MPoly MPoly::constant(PolyRingPtr ring, GaussRat value) {
    MPoly p(std::move(ring));
    if (!value.is_zero()) p.terms_.emplace(Exponents(p.ring_->arity(), 0), std::move(value));
    return p;
}

MPoly MPoly::variable(PolyRingPtr ring, std::size_t var, int power) {
    if (var >= ring->arity()) throw Error("variable index out of range");
    if (power < 0) throw Error("negative power in MPoly::variable");
    MPoly p(std::move(ring));
    if (power == 0) return constant(p.ring_, GaussRat(1));
    Exponents e(p.ring_->arity(), 0);
    e[var] = power;
    p.terms_.emplace(std::move(e), GaussRat(1));
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

GaussRat MPoly::constant_value() const {
    if (terms_.empty()) return GaussRat(0);
    return terms_.begin()->second;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& e = terms_.begin()->first;   // graded order: leading term has max degree
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0L));
}

int MPoly::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

int MPoly::min_degree_in(std::size_t var) const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) d = std::min(d, static_cast<int>(e[var]));
    return d;
}

const Exponents& MPoly::leading_exponents() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const GaussRat& MPoly::leading_coeff() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.begin()->second;
}

void MPoly::add_term(const Exponents& e, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    require_same_ring(ring_, o.ring_);
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    require_same_ring(ring_, o.ring_);
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    require_same_ring(ring_, o.ring_);
    MPoly r(ring_);
    Exponents e(ring_->arity());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::scaled(const GaussRat& c) const {
    MPoly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

MPoly MPoly::mul_term(const Exponents& e, const GaussRat& c) const {
    MPoly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [ea, ca] : terms_) {
        Exponents es(ea);
        for (std::size_t i = 0; i < es.size(); ++i) es[i] += e[i];
        r.terms_.emplace(std::move(es), ca * c);
    }
    return r;
}

MPoly MPoly::mul_var_power(std::size_t var, int k) const {
    if (k < 0) throw Error("negative shift in mul_var_power");
    if (k == 0) return *this;
    Exponents e(ring_->arity(), 0);
    e[var] = k;
    return mul_term(e, GaussRat(1));
}

MPoly MPoly::pow(unsigned k) const {
    MPoly r = MPoly::constant(ring_, GaussRat(1));
    MPoly base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        base = base * base;
        k >>= 1u;
    }
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    require_same_ring(ring_, o.ring_);
    return terms_ == o.terms_;
}

mpq_class MPoly::content() const {
    if (terms_.empty()) return 1;
    // Common denominator of all rational components, then gcd of the scaled
    // integer numerators.
    mpz_class den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        den_lcm = lcm(den_lcm, c.re().get_den());
        den_lcm = lcm(den_lcm, c.im().get_den());
    }
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        g = gcd(g, mpz_class(c.re().get_num() * (den_lcm / c.re().get_den())));
        g = gcd(g, mpz_class(c.im().get_num() * (den_lcm / c.im().get_den())));
    }
    mpq_class content(g, den_lcm);
    content.canonicalize();
    return content;
}

GaussRat MPoly::canonical_unit() const {
    if (terms_.empty()) return GaussRat(1);
    // Scaling by the conjugate of the leading coefficient makes the lead a
    // positive rational; the content then normalizes the magnitude. Without
    // the conjugation step, unit factors like I would survive reduction and
    // equal fractions could compare unequal.
    GaussRat lcc = leading_coeff().conj();
    mpq_class c = scaled(lcc).content();
    return GaussRat(c) / lcc;
}

MPoly MPoly::canonicalized() const {
    if (terms_.empty()) return *this;
    return scaled(canonical_unit().inv());
}

std::optional<MPoly> MPoly::exact_div(const MPoly& p, const MPoly& d) {
    require_same_ring(p.ring(), d.ring());
    if (d.is_zero()) throw DivisionByZero("0");
    MPoly q(p.ring_);
    MPoly r = p;
    const Exponents& de = d.leading_exponents();
    const GaussRat& dc = d.leading_coeff();
    Exponents e(p.ring_->arity());
    while (!r.is_zero()) {
        const Exponents& re = r.leading_exponents();
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = re[i] - de[i];
            if (e[i] < 0) return std::nullopt;
        }
        GaussRat c = r.leading_coeff() / dc;
        q.add_term(e, c);
        r -= d.mul_term(e, c);
    }
    return q;
}

MPoly MPoly::coeff_of(std::size_t var, int k) const {
    MPoly r(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == k) {
            Exponents es(e);
            es[var] = 0;
            r.terms_.emplace(std::move(es), c);
        }
    }
    return r;
}

namespace {

// Content of p viewed as univariate in var: gcd of all var-coefficients.
MPoly content_in(const MPoly& p, std::size_t var) {
    MPoly g(p.ring());
    for (int k = 0; k <= p.degree_in(var); ++k) {
        MPoly c = p.coeff_of(var, k);
        if (!c.is_zero()) g = poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

MPoly primitive_in(const MPoly& p, std::size_t var, const MPoly& cont) {
    auto q = MPoly::exact_div(p, cont);
    if (!q) throw Error("internal: content does not divide polynomial");
    return *q;
}

// Pseudo-remainder of a by b in the variable var, lazily: one factor of
// b's leading coefficient per elimination step, with the rational content
// stripped as we go. The result differs from the textbook prem by a unit
// of the coefficient ring, which the primitive PRS strips anyway.
MPoly pseudo_rem(const MPoly& a, const MPoly& b, std::size_t var) {
    int db = b.degree_in(var);
    MPoly lb = b.coeff_of(var, db);
    MPoly r = a;
    while (!r.is_zero()) {
        int dr = r.degree_in(var);
        if (dr < db) break;
        MPoly lr = r.coeff_of(var, dr);
        r = r * lb - (b * lr).mul_var_power(var, dr - db);
        if (r.is_zero()) break;
        mpq_class c = r.content();
        if (c != 1) r = r.scaled(GaussRat(mpq_class(1) / c));
    }
    return r;
}

bool univariate_in(const MPoly& p, std::size_t var) {
    for (const auto& [e, c] : p.terms())
        for (std::size_t v = 0; v < e.size(); ++v)
            if (v != var && e[v] != 0) return false;
    return true;
}

// Monic Euclidean algorithm for univariate operands over the coefficient
// field; avoids pseudo-division entirely at the recursion floor.
MPoly euclid_univariate(MPoly a, MPoly b, std::size_t var) {
    while (!b.is_zero()) {
        int db = b.degree_in(var);
        GaussRat lb = b.coeff_of(var, db).constant_value();
        while (!a.is_zero() && a.degree_in(var) >= db) {
            int da = a.degree_in(var);
            GaussRat q = a.coeff_of(var, da).constant_value() / lb;
            a = a - b.mul_var_power(var, da - db).scaled(q);
        }
        std::swap(a, b);
    }
    return a.canonicalized();
}

} // namespace

namespace {

// gcd with a monomial: the per-variable minimum of the exponents.
MPoly monomial_gcd(const MPoly& mono, const MPoly& p) {
    const Exponents& e = mono.leading_exponents();
    Exponents g(e.size());
    for (std::size_t v = 0; v < e.size(); ++v)
        g[v] = std::min(static_cast<int>(e[v]), p.min_degree_in(v));
    MPoly r(p.ring());
    r.add_term(g, GaussRat(1));
    return r;
}

} // namespace

MPoly poly_gcd(const MPoly& p, const MPoly& q) {
    require_same_ring(p.ring(), q.ring());
    if (p.is_zero()) return q.canonicalized();
    if (q.is_zero()) return p.canonicalized();
    if (p.is_constant() || q.is_constant())
        return MPoly::constant(p.ring(), GaussRat(1));
    if (p.terms().size() == 1) return monomial_gcd(p, q);
    if (q.terms().size() == 1) return monomial_gcd(q, p);
    if (p == q) return p.canonicalized();

    // Divisibility fast path: reducing f*g against g is the common case in
    // fraction arithmetic, and a failed trial division exits early.
    if (auto d = MPoly::exact_div(p, q); d.has_value()) return q.canonicalized();
    if (auto d = MPoly::exact_div(q, p); d.has_value()) return p.canonicalized();

    // Main variable: prefer a variable shared by both operands with the
    // smallest degree (shortest remainder chain); otherwise the first one
    // present in either.
    std::size_t arity = p.ring()->arity();
    std::size_t var = arity;
    int best = -1;
    for (std::size_t v = 0; v < arity; ++v) {
        int dp = p.degree_in(v), dq = q.degree_in(v);
        if (dp > 0 && dq > 0) {
            int weight = std::min(dp, dq);
            if (best < 0 || weight < best) {
                best = weight;
                var = v;
            }
        }
    }
    if (var == arity) {
        var = 0;
        while (p.degree_in(var) <= 0 && q.degree_in(var) <= 0) ++var;
    }
    if (univariate_in(p, var) && univariate_in(q, var))
        return euclid_univariate(p, q, var);

    MPoly cp = content_in(p, var);
    MPoly cq = content_in(q, var);
    MPoly c = poly_gcd(cp, cq);
    MPoly a = primitive_in(p, var, cp);
    MPoly b = primitive_in(q, var, cq);

    if (a.degree_in(var) <= 0 || b.degree_in(var) <= 0) {
        // One primitive part is free of var, hence a unit times a polynomial
        // coprime to the other in var.
        return c.canonicalized();
    }

    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (true) {
        MPoly r = pseudo_rem(a, b, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            b = MPoly::constant(p.ring(), GaussRat(1));
            break;
        }
        a = b;
        b = primitive_in(r, var, content_in(r, var));
    }
    MPoly g = primitive_in(b, var, content_in(b, var));
    return (c * g).canonicalized();
}

} // namespace vkl
