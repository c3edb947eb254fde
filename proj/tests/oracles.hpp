#ifndef QM_TESTS_ORACLES_HPP
#define QM_TESTS_ORACLES_HPP

// Brute-force reference implementations used by the test suites only.
// They deliberately take the slow route (full subset scans, full function
// spaces) so the library can be checked against an independent path.

#include <cstdint>
#include <vector>

#include "qm/lattice.hpp"

namespace oracle {

using qm::CompleteLattice;
using qm::Elt;
using qm::LatticePtr;

inline std::vector<Elt> subset_from_mask(std::uint32_t mask, int n) {
    std::vector<Elt> s;
    for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(i);
    return s;
}

// f preserves arbitrary joins, checked over every subset of the source.
inline bool sup_preserving_all_subsets(const CompleteLattice& a, const CompleteLattice& b,
                                       const std::vector<Elt>& values) {
    const int n = a.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const std::vector<Elt> s = subset_from_mask(mask, n);
        std::vector<Elt> image;
        image.reserve(s.size());
        for (Elt x : s) image.push_back(values[static_cast<std::size_t>(x)]);
        if (values[static_cast<std::size_t>(a.join_all(s))] != b.join_all(image)) return false;
    }
    return true;
}

// Every function A -> B as a value table, in odometer order.
inline std::vector<std::vector<Elt>> all_functions(const CompleteLattice& a, const CompleteLattice& b) {
    std::vector<std::vector<Elt>> out;
    std::vector<Elt> values(static_cast<std::size_t>(a.size()), 0);
    while (true) {
        out.push_back(values);
        std::size_t pos = 0;
        while (pos < values.size() && ++values[pos] == b.size()) {
            values[pos] = 0;
            ++pos;
        }
        if (pos == values.size()) break;
    }
    return out;
}

// All sup-maps A -> B found by filtering the full function space.
inline std::vector<std::vector<Elt>> enumerate_sup_maps_brute(const CompleteLattice& a,
                                                              const CompleteLattice& b) {
    std::vector<std::vector<Elt>> out;
    for (auto& values : all_functions(a, b))
        if (sup_preserving_all_subsets(a, b, values)) out.push_back(values);
    return out;
}

// Meet distributes over the join of every subset.
inline bool frame_all_subsets(const CompleteLattice& l) {
    const int n = l.size();
    for (int x = 0; x < n; ++x) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            const std::vector<Elt> s = subset_from_mask(mask, n);
            std::vector<Elt> met;
            met.reserve(s.size());
            for (Elt y : s) met.push_back(l.meet(x, y));
            if (l.meet(x, l.join_all(s)) != l.join_all(met)) return false;
        }
    }
    return true;
}

// The Galois adjunction law, checked pointwise on all pairs.
inline bool adjunction_holds(const qm::SupMap& f, const qm::MonotoneMap& g) {
    for (int x = 0; x < f.source->size(); ++x)
        for (int y = 0; y < f.target->size(); ++y)
            if (f.target->leq(f(x), y) != f.source->leq(x, g(y))) return false;
    return true;
}

// g preserves arbitrary meets, checked over every subset of its source.
inline bool meet_preserving_all_subsets(const CompleteLattice& a, const CompleteLattice& b,
                                        const std::vector<Elt>& values) {
    const int n = a.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const std::vector<Elt> s = subset_from_mask(mask, n);
        std::vector<Elt> image;
        image.reserve(s.size());
        for (Elt x : s) image.push_back(values[static_cast<std::size_t>(x)]);
        if (values[static_cast<std::size_t>(a.meet_all(s))] != b.meet_all(image)) return false;
    }
    return true;
}

} // namespace oracle

#endif // QM_TESTS_ORACLES_HPP
