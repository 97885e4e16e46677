#include "pdg/invariants.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <numeric>

namespace pdg {

namespace {

void require_classical(const PseudoDiagram& d, const char* op) {
    if (!d.is_classical())
        throw diagram_error(std::string(op) + " requires a fully classical diagram");
}

}  // namespace

long v2(const PseudoDiagram& d) {
    require_classical(d, "v2");
    const int n = d.n();
    long sum = 0;
    for (int x = 0; x < n; ++x) {
        const Chord& cx = d.chord(x);
        const int x_tail = cx.state.over_slot;               // over-preimage
        const int x_head = cx.a == x_tail ? cx.b : cx.a;     // under-preimage
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            const Chord& cy = d.chord(y);
            const int y_tail = cy.state.over_slot;
            const int y_head = cy.a == y_tail ? cy.b : cy.a;
            if (x_head < y_tail && y_tail < x_tail && x_tail < y_head)
                sum += static_cast<long>(cx.state.sign) * cy.state.sign;
        }
    }
    return sum;
}

std::set<int> odd_set(const PseudoDiagram& d) {
    const InterlacementGraph g = interlacement_graph(d);
    std::set<int> odd;
    for (int c = 0; c < g.n; ++c)
        if (g.degree[c] % 2 == 1) odd.insert(c);
    return odd;
}

long j_invariant(const PseudoDiagram& d) {
    require_classical(d, "J");
    long sum = 0;
    for (int c : odd_set(d)) sum += d.chord(c).state.sign;
    return sum;
}

long ind(const PseudoDiagram& d, int c) {
    const Chord& ch = d.chord(c);
    const int m = d.slots();
    // component A holds slots strictly between the endpoints; L1 is the
    // component owning the smallest slot that is not an endpoint of c
    auto in_a = [&](int s) { return ch.a < s && s < ch.b; };
    int lowest = 0;
    while (lowest == ch.a || lowest == ch.b) ++lowest;
    const bool l1_is_a = lowest < m ? in_a(lowest) : false;
    long sum = 0;
    for (int x = 0; x < d.n(); ++x) {
        if (x == c || !d.chords_cross(c, x)) continue;
        const Chord& cx = d.chord(x);
        const bool first_in_a = in_a(cx.a);
        const bool first_in_l1 = first_in_a == l1_is_a;
        sum += first_in_l1 ? d.flat_handedness(x) : -d.flat_handedness(x);
    }
    return sum;
}

std::map<long, std::vector<int>> c_m_partition(const PseudoDiagram& d) {
    std::map<long, std::vector<int>> part;
    for (int c = 0; c < d.n(); ++c) part[std::labs(ind(d, c))].push_back(c);
    return part;
}

IntPolynomial intersection_index_polynomial(const PseudoDiagram& d) {
    require_classical(d, "p_t");
    IntPolynomial p;
    for (int c = 0; c < d.n(); ++c) {
        const long m = std::labs(ind(d, c));
        const int w = d.chord(c).state.sign;
        p.add_term(static_cast<int>(m), w);
        p.add_term(0, -w);
    }
    return p;
}

int seifert_count(const PseudoDiagram& d) {
    require_classical(d, "seifert_count");
    const int n = d.n();
    if (n == 0) return 1;
    const int m = 2 * n;
    // arcs a_k: slot k -> slot k+1; the oriented smoothing at the chord of
    // slot s forwards the strand entering s onto the arc leaving partner(s)
    std::vector<int> next(m);
    for (int k = 0; k < m; ++k) next[k] = d.partner((k + 1) % m);
    std::vector<char> seen(m, 0);
    int cycles = 0;
    for (int k = 0; k < m; ++k) {
        if (seen[k]) continue;
        ++cycles;
        int x = k;
        while (!seen[x]) {
            seen[x] = 1;
            x = next[x];
        }
    }
    return cycles;
}

int diagram_genus2x(const PseudoDiagram& d) {
    return d.n() - seifert_count(d) + 1;
}

namespace {

// Two arc-end labels per arc: 2k start (at slot k), 2k+1 finish. The A
// smoothing of a positive crossing is the oriented one.
struct LoopCounter {
    int m;
    std::vector<int> parent;

    explicit LoopCounter(int arcs) : m(arcs), parent(2 * arcs) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(int x, int y) { parent[find(x)] = find(y); }
};

int state_loops(const PseudoDiagram& d, uint64_t state) {
    const int n = d.n();
    const int m = 2 * n;
    LoopCounter uf(m);
    auto start = [m](int arc) { return 2 * ((arc % m + m) % m); };
    auto finish = [m](int arc) { return 2 * ((arc % m + m) % m) + 1; };
    for (int k = 0; k < m; ++k) uf.join(start(k), finish(k));
    for (int id = 0; id < n; ++id) {
        const Chord& c = d.chord(id);
        const bool a_smoothing = !(state >> id & 1);
        const bool oriented = a_smoothing == (c.state.sign > 0);
        if (oriented) {
            uf.join(finish(c.a - 1), start(c.b));
            uf.join(finish(c.b - 1), start(c.a));
        } else {
            uf.join(finish(c.a - 1), finish(c.b - 1));
            uf.join(start(c.a), start(c.b));
        }
    }
    std::vector<char> root_seen(2 * m, 0);
    int loops = 0;
    for (int x = 0; x < 2 * m; ++x) {
        const int r = uf.find(x);
        if (!root_seen[r]) {
            root_seen[r] = 1;
            ++loops;
        }
    }
    return loops;
}

LaurentPolynomial normalize_bracket(const PseudoDiagram& d, const LaurentPolynomial& bracket) {
    // multiply by (-A^3)^(-writhe)
    const int w = d.writhe();
    LaurentPolynomial norm = Poly::monomial((w % 2 == 0) ? 1 : -1, -3 * w);
    return bracket * norm;
}

void check_bracket_pre(const PseudoDiagram& d, int max_n) {
    require_classical(d, "f_polynomial");
    if (d.n() > max_n)
        throw diagram_error("f_polynomial: " + std::to_string(d.n()) +
                            " crossings exceed the state-sum budget of " + std::to_string(max_n));
}

LaurentPolynomial bracket_from_counts(const std::map<std::pair<int, int>, long long>& counts) {
    // counts: (A-exponent, loops) -> multiplicity; d = -A^2 - A^-2 per extra loop
    const Poly loop = Poly::monomial(-1, 2) + Poly::monomial(-1, -2);
    LaurentPolynomial out;
    for (auto& [key, mult] : counts) {
        Poly term = Poly::monomial(mult, key.first);
        for (int i = 1; i < key.second; ++i) term = term * loop;
        out += term;
    }
    return out;
}

}  // namespace

LaurentPolynomial f_polynomial_serial(const PseudoDiagram& d, int max_n) {
    check_bracket_pre(d, max_n);
    const int n = d.n();
    if (n == 0) return Poly::constant(1);
    std::map<std::pair<int, int>, long long> counts;
    const uint64_t total = uint64_t{1} << n;
    for (uint64_t state = 0; state < total; ++state) {
        const int bexp = 2 * __builtin_popcountll(state) - n;   // #B - #A
        counts[{-bexp, state_loops(d, state)}]++;
    }
    return normalize_bracket(d, bracket_from_counts(counts));
}

LaurentPolynomial f_polynomial(const PseudoDiagram& d, int max_n) {
    check_bracket_pre(d, max_n);
    const int n = d.n();
    if (n == 0) return Poly::constant(1);
    const uint64_t total = uint64_t{1} << n;
    std::map<std::pair<int, int>, long long> counts;
#ifdef _OPENMP
#pragma omp parallel
    {
        std::map<std::pair<int, int>, long long> local;
#pragma omp for schedule(static)
        for (int64_t state = 0; state < static_cast<int64_t>(total); ++state) {
            const int bexp = 2 * __builtin_popcountll(static_cast<uint64_t>(state)) - n;
            local[{-bexp, state_loops(d, static_cast<uint64_t>(state))}]++;
        }
#pragma omp critical(pdg_bracket_merge)
        for (auto& [k, v] : local) counts[k] += v;
    }
#else
    for (uint64_t state = 0; state < total; ++state) {
        const int bexp = 2 * __builtin_popcountll(state) - n;
        counts[{-bexp, state_loops(d, state)}]++;
    }
#endif
    return normalize_bracket(d, bracket_from_counts(counts));
}

}  // namespace pdg
