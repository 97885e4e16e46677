#include "pdg/enumerate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>

#include "pdg/genus.hpp"

namespace pdg {

namespace {

bool connected_interlacement(const PseudoDiagram& d) {
    const int n = d.n();
    if (n <= 1) return true;
    const InterlacementGraph g = interlacement_graph(d);
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
            if (g.edge(v, w) && !seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

bool keep(const PseudoDiagram& d, const EnumFilter& f) {
    if (f.canonical_only && d.serialize() != d.canonical_code()) return false;
    if (f.connected_interlacement_only && !connected_interlacement(d)) return false;
    if (f.realizable_only && !realizable(d)) return false;
    return true;
}

PseudoDiagram shadow_from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Chord> chords;
    chords.reserve(pairs.size());
    for (auto [a, b] : pairs) chords.push_back(Chord{a, b, ChordState::pre(+1)});
    return PseudoDiagram(std::move(chords));
}

// Recursively matches the smallest free point with every larger free point.
bool walk(std::vector<int>& mate, int m, std::vector<std::pair<int, int>>& acc,
          const EnumFilter& filter, const std::function<bool(const PseudoDiagram&)>& fn,
          long& visited) {
    int a = 0;
    while (a < m && mate[a] != -1) ++a;
    if (a == m) {
        PseudoDiagram d = shadow_from_pairs(acc);
        ++visited;
        if (keep(d, filter)) return fn(d);
        return true;
    }
    for (int b = a + 1; b < m; ++b) {
        if (mate[b] != -1) continue;
        mate[a] = b;
        mate[b] = a;
        acc.emplace_back(a, b);
        const bool go = walk(mate, m, acc, filter, fn, visited);
        acc.pop_back();
        mate[a] = -1;
        mate[b] = -1;
        if (!go) return false;
    }
    return true;
}

}  // namespace

long enumerate_chord_diagrams(int n, const EnumFilter& filter,
                              const std::function<bool(const PseudoDiagram&)>& fn,
                              int max_n) {
    if (n < 0 || n > max_n)
        throw diagram_error("enumeration limited to n <= " + std::to_string(max_n));
    long visited = 0;
    if (n == 0) {
        ++visited;
        PseudoDiagram empty;
        if (keep(empty, filter)) fn(empty);
        return visited;
    }
    std::vector<int> mate(2 * n, -1);
    std::vector<std::pair<int, int>> acc;
    walk(mate, 2 * n, acc, filter, fn, visited);
    return visited;
}

std::vector<PseudoDiagram> collect_chord_diagrams(int n, const EnumFilter& filter, int max_n) {
    std::vector<PseudoDiagram> out;
    enumerate_chord_diagrams(n, filter, [&](const PseudoDiagram& d) {
        out.push_back(d);
        return true;
    }, max_n);
    return out;
}

std::vector<PseudoDiagram> collect_chord_diagrams_parallel(int n, const EnumFilter& filter,
                                                           int max_n) {
    if (n < 0 || n > max_n)
        throw diagram_error("enumeration limited to n <= " + std::to_string(max_n));
    if (n <= 1) return collect_chord_diagrams(n, filter, max_n);
    const int m = 2 * n;
    std::vector<std::vector<PseudoDiagram>> shard(m);
    // shard by the partner of point 0; each shard is an independent subtree
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int b = 1; b < m; ++b) {
        std::vector<int> mate(m, -1);
        mate[0] = b;
        mate[b] = 0;
        std::vector<std::pair<int, int>> acc{{0, b}};
        long visited = 0;
        walk(mate, m, acc, filter, [&](const PseudoDiagram& d) {
            shard[b].push_back(d);
            return true;
        }, visited);
    }
    std::vector<PseudoDiagram> out;
    for (auto& s : shard)
        for (auto& d : s) out.push_back(std::move(d));
    return out;
}

}  // namespace pdg
