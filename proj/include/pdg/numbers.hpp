#pragma once

#include <optional>

#include "pdg/oracle.hpp"

namespace pdg {

// Verified value of one characteristic number.
struct NumberValue {
    enum class Kind : uint8_t { Exact, Bounds, Infinite, Unset };
    Kind kind = Kind::Unset;
    long value = 0;                       // Exact
    long lower = 0;                       // Bounds
    std::optional<long> upper;            // Bounds; empty = no finite upper proven
    std::vector<int> witness_chords;      // confirmed subset, ascending ids
    std::vector<Resolution> witness_resolution;
    std::vector<std::string> notes;

    static NumberValue exact(long v) {
        NumberValue n;
        n.kind = Kind::Exact;
        n.value = v;
        return n;
    }
    static NumberValue bounds(long lo, std::optional<long> hi) {
        NumberValue n;
        n.kind = Kind::Bounds;
        n.lower = lo;
        n.upper = hi;
        return n;
    }
    static NumberValue infinite() {
        NumberValue n;
        n.kind = Kind::Infinite;
        return n;
    }
    bool exact_is(long v) const { return kind == Kind::Exact && value == v; }
    std::string to_string() const;
};

// Per-diagram record of the characteristic numbers.
struct CharacteristicReport {
    NumberValue tr, kn, cl, vir, virtr, ubtr;
    std::string to_string() const;
};

// Maximum pairwise-parallel chord subset by interval dynamic programming;
// ties resolve to the lexicographically least witness.
std::vector<int> max_parallel_subset(const PseudoDiagram& d);
// Exhaustive oracle for the same quantity (n <= 20).
std::vector<int> max_parallel_subset_brute(const PseudoDiagram& d);

// Witness resolution of the deleted set that trivializes a shadow: the
// exterior-strand construction, resolving consumed precrossings as
// overpasses of the contracted strand.
struct TrivializingWitness {
    std::vector<int> deleted;                  // the trivializing set
    std::vector<Resolution> resolution;        // parallel to `deleted`
};
TrivializingWitness shadow_trivializing_witness(const PseudoDiagram& shadow);

inline constexpr int kDefaultExactLimit = 14;

// Trivializing number of a shadow. Realizable shadows get the exact chord
// deletion count n - |max parallel|; virtual shadows get that count as
// virtr = ubtr and fall back to the subset search for tr itself.
CharacteristicReport trivializing_number_shadow(const PseudoDiagram& s,
                                                const UnknotOracle& oracle,
                                                int exact_limit = kDefaultExactLimit);

// Minimum k such that some k-subset of precrossings admits a resolution
// making every completion provably unknotted. Unknown verdicts downgrade
// the answer to Bounds; Infinite when every full resolution is provably
// knotted.
NumberValue trivializing_number_general(const PseudoDiagram& p, const UnknotOracle& oracle,
                                        int exact_limit = kDefaultExactLimit);

// Dual search: every completion provably knotted.
NumberValue knotting_number(const PseudoDiagram& p, const UnknotOracle& oracle,
                            int exact_limit = kDefaultExactLimit);

// Certified formula bounds from the intersection-index partition and the
// odd set; exact searches for cl and vir at small precrossing counts.
struct ClVirBounds {
    NumberValue cl;
    NumberValue vir;
};
ClVirBounds cl_vir_bounds(const PseudoDiagram& p);
ClVirBounds cl_vir_exact_small(const PseudoDiagram& p, const UnknotOracle& oracle,
                               int exact_limit = kDefaultExactLimit);

// Full report: tr/kn/cl/vir plus virtr/ubtr on shadows.
CharacteristicReport characteristic_report(const PseudoDiagram& p, const UnknotOracle& oracle,
                                           int exact_limit = kDefaultExactLimit);

}  // namespace pdg
