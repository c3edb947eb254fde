#ifndef QM_LATTICE_HPP
#define QM_LATTICE_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qm/errors.hpp"

namespace qm {

/// Elements of a lattice are dense indices into its tables.
using Elt = int;

/// A finite complete lattice with fully tabulated order, joins and meets.
///
/// Instances are immutable after construction and meant to be shared
/// (`LatticePtr`).  Every derived structure (quantales, modules, maps)
/// refers back to its carrier lattice through such a pointer.
class CompleteLattice {
  public:
    /// Builds a lattice from an arbitrary relation on labelled elements.
    /// The relation is closed reflexively and transitively first, so the
    /// input may be any generating set of comparabilities.
    static CompleteLattice from_relation(std::vector<std::string> labels,
                                         std::vector<std::vector<bool>> rel) {
        const int n = static_cast<int>(labels.size());
        if (n == 0) throw NoBottom();
        // reflexive-transitive closure (Warshall)
        for (int i = 0; i < n; ++i) rel[i][i] = true;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if (rel[i][k])
                    for (int j = 0; j < n; ++j)
                        if (rel[k][j]) rel[i][j] = true;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rel[i][j] && rel[j][i])
                    throw NotAPartialOrder("antisymmetry fails between '" + labels[i] + "' and '" +
                                           labels[j] + "'");
        return CompleteLattice(std::move(labels), std::move(rel));
    }

    int size() const { return static_cast<int>(labels_.size()); }

    const std::string& label(Elt x) const {
        check_element(x);
        return labels_[static_cast<std::size_t>(x)];
    }

    /// Index of a labelled element; throws UnknownElement if absent.
    Elt index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw UnknownElement(label);
        return it->second;
    }

    bool has_label(const std::string& label) const { return index_.count(label) != 0; }

    bool leq(Elt x, Elt y) const {
        check_element(x);
        check_element(y);
        return leq_[x][y];
    }

    Elt join(Elt x, Elt y) const {
        check_element(x);
        check_element(y);
        return join_[x][y];
    }

    Elt meet(Elt x, Elt y) const {
        check_element(x);
        check_element(y);
        return meet_[x][y];
    }

    /// Join of an arbitrary subset; the empty join is the bottom.
    Elt join_all(const std::vector<Elt>& xs) const {
        Elt acc = bottom_;
        for (Elt x : xs) acc = join(acc, x);
        return acc;
    }

    /// Meet of an arbitrary subset; the empty meet is the top.
    Elt meet_all(const std::vector<Elt>& xs) const {
        Elt acc = top_;
        for (Elt x : xs) acc = meet(acc, x);
        return acc;
    }

    Elt bottom() const { return bottom_; }
    Elt top() const { return top_; }

    /// Elements that are not the join of the elements strictly below them.
    /// The bottom (= empty join) is never join-irreducible.
    const std::vector<Elt>& join_irreducibles() const { return join_irreducibles_; }

    const std::vector<std::string>& labels() const { return labels_; }

    /// Structural equality: same labels in the same order, same order relation.
    friend bool operator==(const CompleteLattice& a, const CompleteLattice& b) {
        return a.labels_ == b.labels_ && a.leq_ == b.leq_;
    }

  private:
    CompleteLattice(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
        : labels_(std::move(labels)), leq_(std::move(leq)) {
        const int n = size();
        for (int i = 0; i < n; ++i) {
            if (!index_.emplace(labels_[i], i).second)
                throw NotAPartialOrder("duplicate element label '" + labels_[i] + "'");
        }
        join_.assign(n, std::vector<Elt>(n, -1));
        meet_.assign(n, std::vector<Elt>(n, -1));
        for (int x = 0; x < n; ++x) {
            for (int y = x; y < n; ++y) {
                const Elt j = bound_of(x, y, /*upper=*/true);
                if (j < 0)
                    throw NotALattice("elements '" + labels_[x] + "' and '" + labels_[y] +
                                      "' have no least upper bound");
                const Elt m = bound_of(x, y, /*upper=*/false);
                if (m < 0)
                    throw NotALattice("elements '" + labels_[x] + "' and '" + labels_[y] +
                                      "' have no greatest lower bound");
                join_[x][y] = join_[y][x] = j;
                meet_[x][y] = meet_[y][x] = m;
            }
        }
        // With all binary joins/meets present, bottom and top are the folds
        // over the whole carrier.
        Elt bot = 0, top = 0;
        for (int x = 1; x < n; ++x) {
            bot = meet_[bot][x];
            top = join_[top][x];
        }
        bottom_ = bot;
        top_ = top;
        for (int x = 0; x < n; ++x) {
            Elt below = bottom_;
            for (int y = 0; y < n; ++y)
                if (y != x && leq_[y][x]) below = join_[below][y];
            if (below != x) join_irreducibles_.push_back(x);
        }
    }

    // Least upper bound (or greatest lower bound) of {x,y}, -1 if none.
    Elt bound_of(Elt x, Elt y, bool upper) const {
        const int n = size();
        Elt best = -1;
        for (int z = 0; z < n; ++z) {
            const bool bounds = upper ? (leq_[x][z] && leq_[y][z]) : (leq_[z][x] && leq_[z][y]);
            if (!bounds) continue;
            if (best == -1) {
                best = z;
                continue;
            }
            if (upper ? leq_[z][best] : leq_[best][z]) best = z;
        }
        if (best == -1) return -1;
        for (int z = 0; z < n; ++z) {
            const bool bounds = upper ? (leq_[x][z] && leq_[y][z]) : (leq_[z][x] && leq_[z][y]);
            if (bounds && !(upper ? leq_[best][z] : leq_[z][best])) return -1;
        }
        return best;
    }

    void check_element(Elt x) const {
        if (x < 0 || x >= size()) throw UnknownElement("#" + std::to_string(x));
    }

    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::vector<Elt>> join_;
    std::vector<std::vector<Elt>> meet_;
    std::unordered_map<std::string, Elt> index_;
    Elt bottom_ = -1;
    Elt top_ = -1;
    std::vector<Elt> join_irreducibles_;
};

using LatticePtr = std::shared_ptr<const CompleteLattice>;

/// Builds a complete lattice from labelled elements and a list of
/// generating comparabilities (closed reflexively/transitively here).
inline LatticePtr lattice_from_order(std::vector<std::string> labels,
                                     const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
    const int n = static_cast<int>(labels.size());
    std::unordered_map<std::string, Elt> index;
    for (int i = 0; i < n; ++i) index.emplace(labels[i], i);
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (const auto& [lo, hi] : leq_pairs) {
        auto a = index.find(lo);
        auto b = index.find(hi);
        if (a == index.end()) throw UnknownElement(lo);
        if (b == index.end()) throw UnknownElement(hi);
        rel[a->second][b->second] = true;
    }
    return std::make_shared<CompleteLattice>(CompleteLattice::from_relation(std::move(labels), std::move(rel)));
}

inline LatticePtr lattice_from_relation(std::vector<std::string> labels,
                                        std::vector<std::vector<bool>> rel) {
    return std::make_shared<CompleteLattice>(CompleteLattice::from_relation(std::move(labels), std::move(rel)));
}

/// A tabulated order-preserving map between two lattices.
struct MonotoneMap {
    LatticePtr source;
    LatticePtr target;
    std::vector<Elt> values;

    Elt operator()(Elt x) const { return values[static_cast<std::size_t>(x)]; }
};

/// A tabulated map preserving arbitrary joins (checked on binary joins and
/// the bottom, which suffices in a finite lattice).
struct SupMap {
    LatticePtr source;
    LatticePtr target;
    std::vector<Elt> values;

    Elt operator()(Elt x) const { return values[static_cast<std::size_t>(x)]; }

    MonotoneMap monotone() const { return MonotoneMap{source, target, values}; }
};

inline bool is_monotone_table(const CompleteLattice& a, const CompleteLattice& b,
                              const std::vector<Elt>& values) {
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
            if (a.leq(x, y) && !b.leq(values[x], values[y])) return false;
    return true;
}

inline bool is_sup_preserving_table(const CompleteLattice& a, const CompleteLattice& b,
                                    const std::vector<Elt>& values) {
    if (values[static_cast<std::size_t>(a.bottom())] != b.bottom()) return false;
    for (int x = 0; x < a.size(); ++x)
        for (int y = x + 1; y < a.size(); ++y)
            if (values[static_cast<std::size_t>(a.join(x, y))] != b.join(values[x], values[y])) return false;
    return true;
}

inline MonotoneMap make_monotone_map(LatticePtr source, LatticePtr target, std::vector<Elt> values) {
    if (static_cast<int>(values.size()) != source->size())
        throw UnknownElement("monotone map table has wrong size");
    for (Elt v : values)
        if (v < 0 || v >= target->size()) throw UnknownElement("#" + std::to_string(v));
    if (!is_monotone_table(*source, *target, values))
        throw NotAPartialOrder("map is not monotone");
    return MonotoneMap{std::move(source), std::move(target), std::move(values)};
}

inline SupMap make_sup_map(LatticePtr source, LatticePtr target, std::vector<Elt> values) {
    MonotoneMap m = make_monotone_map(std::move(source), std::move(target), std::move(values));
    if (!is_sup_preserving_table(*m.source, *m.target, m.values))
        throw NotALattice("map does not preserve joins");
    return SupMap{std::move(m.source), std::move(m.target), std::move(m.values)};
}

/// True iff the monotone map preserves all joins.  Binary joins plus the
/// empty join decide this in a finite lattice.
inline bool is_sup_preserving(const MonotoneMap& f) {
    return is_sup_preserving_table(*f.source, *f.target, f.values);
}

/// The order-theoretic right adjoint of a sup-map:
/// f*(y) = join of { x | f(x) <= y }.  Satisfies f(x) <= y iff x <= f*(y).
inline MonotoneMap right_adjoint(const SupMap& f) {
    const CompleteLattice& a = *f.source;
    const CompleteLattice& b = *f.target;
    std::vector<Elt> adj(static_cast<std::size_t>(b.size()));
    for (int y = 0; y < b.size(); ++y) {
        Elt acc = a.bottom();
        for (int x = 0; x < a.size(); ++x)
            if (b.leq(f(x), y)) acc = a.join(acc, x);
        adj[static_cast<std::size_t>(y)] = acc;
    }
    return MonotoneMap{f.target, f.source, std::move(adj)};
}

inline constexpr std::uint64_t kDefaultSupMapBound = 36;

/// All join-preserving maps A -> B, each exactly once, in a deterministic
/// order.  Candidates are generated by assigning values on the
/// join-irreducibles of A and extending by joins; an assignment is kept iff
/// the extension restricts back to it and preserves binary joins.
inline std::vector<SupMap> enumerate_sup_maps(const LatticePtr& a, const LatticePtr& b,
                                              std::uint64_t bound = kDefaultSupMapBound) {
    const std::uint64_t size_product =
        static_cast<std::uint64_t>(a->size()) * static_cast<std::uint64_t>(b->size());
    if (size_product > bound)
        throw BoundExceeded("|A| * |B| = " + std::to_string(size_product) + " > " + std::to_string(bound));
    const std::vector<Elt>& irr = a->join_irreducibles();
    std::uint64_t candidates = 1;
    for (std::size_t i = 0; i < irr.size(); ++i) {
        candidates *= static_cast<std::uint64_t>(b->size());
        if (candidates > 5'000'000ULL)
            throw BoundExceeded("too many join-irreducible assignments");
    }
    std::vector<SupMap> out;
    std::vector<Elt> assign(irr.size(), 0);
    while (true) {
        std::vector<Elt> values(static_cast<std::size_t>(a->size()));
        for (int x = 0; x < a->size(); ++x) {
            Elt acc = b->bottom();
            for (std::size_t i = 0; i < irr.size(); ++i)
                if (a->leq(irr[i], x)) acc = b->join(acc, assign[i]);
            values[static_cast<std::size_t>(x)] = acc;
        }
        bool consistent = true;
        for (std::size_t i = 0; i < irr.size() && consistent; ++i)
            consistent = values[static_cast<std::size_t>(irr[i])] == assign[i];
        if (consistent && is_sup_preserving_table(*a, *b, values))
            out.push_back(SupMap{a, b, std::move(values)});
        // odometer
        std::size_t pos = 0;
        while (pos < assign.size() && ++assign[pos] == b->size()) {
            assign[pos] = 0;
            ++pos;
        }
        if (pos == assign.size()) break;
    }
    return out;
}

/// True iff binary meet distributes over arbitrary joins (checked on binary
/// joins plus the bottom).
inline bool is_frame(const CompleteLattice& l) {
    for (int x = 0; x < l.size(); ++x) {
        if (l.meet(x, l.bottom()) != l.bottom()) return false;
        for (int s = 0; s < l.size(); ++s)
            for (int t = s + 1; t < l.size(); ++t)
                if (l.meet(x, l.join(s, t)) != l.join(l.meet(x, s), l.meet(x, t))) return false;
    }
    return true;
}

} // namespace qm

#endif // QM_LATTICE_HPP
