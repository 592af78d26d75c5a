#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vkl/gaussrat.hpp"

namespace vkl {

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// An ordered list of variable names. The declaration order is load-bearing:
/// it fixes the graded-lexicographic term order and hence every canonical
/// form produced by the library.
class PolyRing {
public:
    static PolyRingPtr make(std::vector<std::string> vars);

    std::size_t arity() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool same_as(const PolyRing& o) const { return vars_ == o.vars_; }

private:
    explicit PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    std::vector<std::string> vars_;
};

void require_same_ring(const PolyRingPtr& a, const PolyRingPtr& b);

/// Exponent vector, parallel to the ring's variable list. All entries >= 0.
using Exponents = std::vector<std::int32_t>;

/// Descending graded-lex order, so that a term map's begin() is the leading
/// term: higher total degree first, ties broken lexicographically in the
/// declared variable order.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial over Q(i). No zero coefficients are ever stored.
class MPoly {
public:
    using TermMap = std::map<Exponents, GaussRat, GradedLexGreater>;

    explicit MPoly(PolyRingPtr ring) : ring_(std::move(ring)) {}
    static MPoly constant(PolyRingPtr ring, GaussRat value);
    static MPoly variable(PolyRingPtr ring, std::size_t var, int power = 1);

    const PolyRingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const { return is_constant() && constant_value().is_one(); }
    /// Value at the constant term; zero polynomial gives 0. Only meaningful
    /// when is_constant().
    GaussRat constant_value() const;

    int total_degree() const;       // -1 for the zero polynomial
    int degree_in(std::size_t var) const;
    int min_degree_in(std::size_t var) const;

    const Exponents& leading_exponents() const;
    const GaussRat& leading_coeff() const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const GaussRat& c) const;
    MPoly mul_term(const Exponents& e, const GaussRat& c) const;
    MPoly mul_var_power(std::size_t var, int k) const;   // k >= 0
    MPoly pow(unsigned k) const;

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    void add_term(const Exponents& e, const GaussRat& c);   // builder

    /// Positive rational c such that (*this)/c has Gaussian-integer
    /// coefficients with no common integer factor. content(0) = 1.
    mpq_class content() const;
    /// The unit u in Q(i)* with canonicalized() == *this / u. The canonical
    /// representative has a positive rational leading coefficient and
    /// primitive Gaussian-integer coefficients.
    GaussRat canonical_unit() const;
    /// Canonical representative of the Q(i)* orbit.
    MPoly canonicalized() const;

    /// Quotient when the division is exact, nullopt otherwise.
    static std::optional<MPoly> exact_div(const MPoly& p, const MPoly& d);

    /// Coefficient of var^k, viewing the polynomial as univariate in var;
    /// the result has exponent 0 in var.
    MPoly coeff_of(std::size_t var, int k) const;

    std::string str() const;   // canonical text form, see polytext.hpp

private:
    PolyRingPtr ring_;
    TermMap terms_;
};

/// GCD, canonicalized (primitive, positive leading coefficient).
/// poly_gcd(0, q) = canonical(q). Primitive-PRS recursion on the first
/// variable present.
MPoly poly_gcd(const MPoly& p, const MPoly& q);

} // namespace vkl
