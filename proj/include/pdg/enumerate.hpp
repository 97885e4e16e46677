#pragma once

#include <functional>

#include "pdg/diagram.hpp"

namespace pdg {

struct EnumFilter {
    bool realizable_only = false;
    bool connected_interlacement_only = false;
    bool canonical_only = false;
};

inline constexpr int kDefaultEnumMax = 8;

// Streams every perfect matching on 2n points as an all-(+1) shadow, in
// lexicographic order of the matching. With canonical_only, a diagram is
// kept only when its own serialization equals its canonical code, so each
// symmetry class appears exactly once. Returns the number of diagrams
// visited. The callback may return false to stop early.
long enumerate_chord_diagrams(int n, const EnumFilter& filter,
                              const std::function<bool(const PseudoDiagram&)>& fn,
                              int max_n = kDefaultEnumMax);

// Same stream, collected. The OpenMP variant shards the search by the
// partner of point 0 and yields the identical list (order restored).
std::vector<PseudoDiagram> collect_chord_diagrams(int n, const EnumFilter& filter,
                                                  int max_n = kDefaultEnumMax);
std::vector<PseudoDiagram> collect_chord_diagrams_parallel(int n, const EnumFilter& filter,
                                                           int max_n = kDefaultEnumMax);

}  // namespace pdg
