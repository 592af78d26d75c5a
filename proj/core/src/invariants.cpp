#include "vkl/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "vkl/polytext.hpp"

namespace vkl {

namespace {

std::vector<std::size_t> orbit_indices(const PolyRingPtr& ring,
                                       const std::vector<std::string>& orbit) {
    std::vector<std::size_t> idx;
    for (const std::string& name : orbit)
        if (auto i = ring->index_of(name)) idx.push_back(*i);
    return idx;
}

const PolyRingPtr& presentation_ring(const PresentationMatrix& p) {
    return elem_ring(p.mat.at(0, 0));
}

} // namespace

InvariantPoly InvariantPoly::zero(PolyRingPtr ring, std::vector<std::string> orbit) {
    MPoly z(ring);
    MPoly one = MPoly::constant(std::move(ring), GaussRat(1));
    return InvariantPoly(true, UnitNormalized{std::move(z), std::move(one)},
                         std::move(orbit));
}

InvariantPoly InvariantPoly::of(const RatFun& value, std::vector<std::string> orbit) {
    if (value.is_zero()) return zero(value.ring(), std::move(orbit));
    UnitNormalized n = unit_normalize(value, orbit_indices(value.ring(), orbit));
    return InvariantPoly(false, std::move(n), std::move(orbit));
}

bool InvariantPoly::operator==(const InvariantPoly& o) const {
    if (zero_ != o.zero_) return false;
    if (zero_) return true;
    return value_ == o.value_;
}

std::string InvariantPoly::str() const {
    if (zero_) return "0";
    return value_.str();
}

InvariantPoly delta0(const PresentationMatrix& p, DetAlgo algo) {
    return InvariantPoly::of(det_d(p.mat, algo), p.unit_vars);
}

std::vector<RatFun> minor_determinants(const PresentationMatrix& p, DetAlgo algo) {
    std::size_t n = p.mat.rows();
    const PolyRingPtr& ring = presentation_ring(p);
    std::vector<RatFun> out(n * n, RatFun(ring));
    if (n == 1) {
        // The single 0x0 minor has determinant 1.
        out[0] = RatFun::constant(ring, GaussRat(1));
        return out;
    }
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                          static_cast<unsigned>(n * n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out[i * n + j] = det_d(p.mat.minor_at(i, j), algo);
        return out;
    }
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            std::size_t k = cursor.fetch_add(1);
            if (k >= n * n) return;
            out[k] = det_d(p.mat.minor_at(k / n, k % n), algo);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

InvariantPoly delta1(const PresentationMatrix& p, DetAlgo algo) {
    const PolyRingPtr& ring = presentation_ring(p);
    std::vector<RatFun> minors = minor_determinants(p, algo);
    // Clear each minor to a primitive polynomial; the dropped denominators
    // and scalar contents are units of the localized ring.
    MPoly g(ring);
    bool any_nonzero = false;
    for (const RatFun& m : minors) {
        if (m.is_zero()) continue;
        any_nonzero = true;
        g = poly_gcd(g, m.num());
        if (g.is_constant()) break;   // gcd has collapsed to a unit
    }
    if (!any_nonzero) return InvariantPoly::zero(ring, p.unit_vars);
    return InvariantPoly::of(RatFun(g), p.unit_vars);
}

MinorReport check_minor_independence(const PresentationMatrix& p, DetAlgo algo) {
    std::vector<RatFun> minors = minor_determinants(p, algo);
    std::map<std::string, MinorClass> classes;
    for (const RatFun& m : minors) {
        if (m.is_zero()) {
            auto [it, fresh] = classes.try_emplace("0", MinorClass{std::nullopt, 0, "0"});
            ++it->second.count;
            continue;
        }
        InvariantPoly v = InvariantPoly::of(m, p.unit_vars);
        std::string key = v.str();
        auto [it, fresh] = classes.try_emplace(key, MinorClass{std::move(v), 0, key});
        ++it->second.count;
    }
    MinorReport rep;
    rep.total = minors.size();
    for (auto& [key, cls] : classes) rep.classes.push_back(std::move(cls));
    return rep;
}

Classicality classicality_obstruction(const PresentationMatrix& p, DetAlgo algo) {
    if (!delta0(p, algo).is_zero()) return Classicality::NotClassical;
    if (!check_minor_independence(p, algo).homogeneous()) return Classicality::NotClassical;
    return Classicality::ConsistentWithClassical;
}

} // namespace vkl
