#pragma once

#include "pdg/numbers.hpp"

namespace pdg {

// Diagram-level bound with its construction; knot-level quantities are
// never claimed, every report is an upper bound for the knot.
struct BoundReport {
    std::string quantity;           // "u", "vu", "g"
    long upper2x = 0;               // doubled so g stays integral
    std::vector<int> witness;       // crossings changed / virtualized
    std::string theorem;            // e.g. "thm:u<=tr/2"
    bool verified = false;          // witness replayed through the oracle
    std::string note;

    // "u <= 1 [thm:u<=tr/2] witness={2} verified"
    std::string to_string() const;
    double upper() const { return upper2x / 2.0; }
};

// Switches the writhe (and overpass) of one classical crossing.
PseudoDiagram switch_crossing(const PseudoDiagram& d, int id);
// Deletes classical crossings, as making them virtual does.
PseudoDiagram virtualize_crossings(const PseudoDiagram& d, const std::vector<int>& ids);

// Replaces crossing `id` by the detoured copy with opposite writhe: a
// classical R2 pair is inserted next to it and the two crossings that a
// virtual R2 would cancel are deleted. The result equals switch_crossing.
PseudoDiagram switch_via_virtual_detour(const PseudoDiagram& d, int id);

// u(D) <= tr(shadow)/2: of the trivializing writhes and their mirrors,
// the cheaper change set. Realizable classical diagrams only.
BoundReport unknotting_upper(const PseudoDiagram& d, const UnknotOracle& oracle);

// Brute force over crossing-change subsets by increasing size.
NumberValue unknotting_exact_small(const PseudoDiagram& d, const UnknotOracle& oracle,
                                   int exact_limit = 10);

// vu(D) <= min(tr(shadow), 2 u_upper).
BoundReport virtual_unknotting_upper(const PseudoDiagram& d, const UnknotOracle& oracle);

// Brute force over virtualization subsets.
NumberValue virtual_unknotting_exact_small(const PseudoDiagram& d, const UnknotOracle& oracle,
                                           int exact_limit = 10);

// Computes g(D) = (c - s + 1)/2 and checks tr/2 >= g and s >= c - tr + 1.
struct GenusCheck {
    long tr = 0;
    int seifert = 0;
    int genus2x = 0;
    bool holds = false;
    BoundReport report() const;
};
GenusCheck genus_bound_check(const PseudoDiagram& d);

}  // namespace pdg
