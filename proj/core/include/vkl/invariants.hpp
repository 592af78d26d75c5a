#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vkl/determinant.hpp"
#include "vkl/diagram.hpp"

namespace vkl {

/// Value of Delta_0 or Delta_1: a rational function collapsed onto a chosen
/// representative of its unit orbit (powers of the orbit variables and
/// nonzero scalars quotiented away). Zero is the distinguished zero
/// invariant. Equality of invariants is equality of canonical forms.
class InvariantPoly {
public:
    static InvariantPoly zero(PolyRingPtr ring, std::vector<std::string> orbit);
    static InvariantPoly of(const RatFun& value, std::vector<std::string> orbit);

    bool is_zero() const { return zero_; }
    bool is_one() const { return !zero_ && value_.num.is_one() && value_.den.is_one(); }
    const MPoly& num() const { return value_.num; }
    const MPoly& den() const { return value_.den; }
    /// Which unit multipliers are quotiented: orbit variable names, plus
    /// "scalars" implicitly.
    const std::vector<std::string>& unit_orbit() const { return orbit_; }

    bool operator==(const InvariantPoly& o) const;
    bool operator!=(const InvariantPoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    InvariantPoly(bool zero, UnitNormalized value, std::vector<std::string> orbit)
        : zero_(zero), value_(std::move(value)), orbit_(std::move(orbit)) {}
    bool zero_;
    UnitNormalized value_;
    std::vector<std::string> orbit_;
};

/// Delta_0 = d(M), Laurent-normalized in the orbit variables.
InvariantPoly delta0(const PresentationMatrix& p, DetAlgo algo = DetAlgo::Bareiss);

/// d of the (i,j) minor for all i, j, in row-major order. Computed in
/// parallel; each minor is an independent pure computation.
std::vector<RatFun> minor_determinants(const PresentationMatrix& p,
                                       DetAlgo algo = DetAlgo::Bareiss);

/// Delta_1: gcd over all codimension-1 minors of d, each cleared to a
/// primitive polynomial first (the cleared denominators are units of the
/// localized ring and join the orbit); canonicalized like Delta_0.
InvariantPoly delta1(const PresentationMatrix& p, DetAlgo algo = DetAlgo::Bareiss);

/// Canonical forms of the minors gathered into orbit classes.
struct MinorClass {
    std::optional<InvariantPoly> value;   // nullopt marks zero minors
    std::size_t count;
    std::string text;
};

struct MinorReport {
    std::vector<MinorClass> classes;   // ordered by text, deterministic
    std::size_t total;
    /// All minors fall in one orbit class (a necessary condition for the
    /// underlying knot to be classical).
    bool homogeneous() const { return classes.size() <= 1; }
};

MinorReport check_minor_independence(const PresentationMatrix& p,
                                     DetAlgo algo = DetAlgo::Bareiss);

enum class Classicality { ConsistentWithClassical, NotClassical };

/// Necessary-condition test: Delta_0 != 0 or inhomogeneous minors certify
/// non-classicality; the converse direction is never asserted.
Classicality classicality_obstruction(const PresentationMatrix& p,
                                      DetAlgo algo = DetAlgo::Bareiss);

} // namespace vkl
