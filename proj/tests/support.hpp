#ifndef QM_TESTS_SUPPORT_HPP
#define QM_TESTS_SUPPORT_HPP

// Small fixture lattices shared across the test suites.

#include <string>
#include <vector>

#include "qm/lattice.hpp"

namespace ts {

using qm::LatticePtr;

// 0 < 1 < ... < n-1
inline LatticePtr chain(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(labels[i], labels[i + 1]);
    return qm::lattice_from_order(labels, pairs);
}

// 0 < a,b < 1 with a,b incomparable
inline LatticePtr diamond() {
    return qm::lattice_from_order({"0", "a", "b", "1"},
                                  {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

// 0 < a,b,c < 1, three incomparable atoms (not distributive)
inline LatticePtr m3() {
    return qm::lattice_from_order({"0", "a", "b", "c", "1"},
                                  {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

inline LatticePtr point() { return qm::lattice_from_order({"*"}, {}); }

} // namespace ts

#endif // QM_TESTS_SUPPORT_HPP
