#include "pdg/moves.hpp"

#include <algorithm>
#include <array>

namespace pdg {

namespace {

int mod(int x, int m) { return (x % m + m) % m; }

bool slots_adjacent(int a, int b, int m) { return mod(a + 1, m) == b; }

PseudoDiagram remove_chords(const PseudoDiagram& d, std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    const int m = d.slots();
    std::vector<char> dead(m, 0);
    for (int id : ids) {
        dead[d.chord(id).a] = 1;
        dead[d.chord(id).b] = 1;
    }
    std::vector<int> shift(m, 0);
    int acc = 0;
    for (int s = 0; s < m; ++s) {
        shift[s] = acc;
        if (dead[s]) ++acc;
    }
    std::vector<Chord> out;
    for (int i = 0; i < d.n(); ++i) {
        if (std::binary_search(ids.begin(), ids.end(), i)) continue;
        Chord c = d.chord(i);
        c.a -= shift[c.a];
        c.b -= shift[c.b];
        if (c.state.kind == StateKind::Classical) c.state.over_slot -= shift[c.state.over_slot];
        out.push_back(c);
    }
    return PseudoDiagram(std::move(out));
}

// Inserts `count` fresh slots before position `pos`; existing slots >= pos move up.
std::vector<Chord> shifted_chords(const PseudoDiagram& d, int pos, int count) {
    std::vector<Chord> out;
    out.reserve(d.n());
    for (const Chord& c : d.chords()) {
        Chord nc = c;
        if (nc.a >= pos) nc.a += count;
        if (nc.b >= pos) nc.b += count;
        if (nc.state.kind == StateKind::Classical && nc.state.over_slot >= pos)
            nc.state.over_slot += count;
        out.push_back(nc);
    }
    return out;
}

bool chord_over_at(const Chord& c, int slot) { return c.state.over_slot == slot; }

// R2 cancelling pair anchored at gap (g, g+1): distinct chords c and d whose
// far endpoints are also cyclically adjacent, writhes opposite, and the
// near strand over at both crossings or under at both.
bool r2_pair_at_gap(const PseudoDiagram& d, int g, int* c_out, int* e_out) {
    const int m = d.slots();
    if (m < 4) return false;
    const int s1 = g, s2 = mod(g + 1, m);
    const int c = d.chord_at(s1), e = d.chord_at(s2);
    if (c == e) return false;
    const int p1 = d.partner(s1), p2 = d.partner(s2);
    if (!slots_adjacent(p2, p1, m) && !slots_adjacent(p1, p2, m)) return false;
    const Chord& cc = d.chord(c);
    const Chord& ce = d.chord(e);
    if (cc.state.sign + ce.state.sign != 0) return false;
    if (chord_over_at(cc, s1) != chord_over_at(ce, s2)) return false;
    *c_out = c;
    *e_out = e;
    return true;
}

struct R3Pattern {
    std::array<int, 3> gaps;        // slot pairs (g, g+1)
    std::array<int, 3> chords;
};

// The three gaps must be pairwise disjoint, their six slots must be covered
// by exactly three chords with no chord inside a single gap, and the
// over/under relations of the three crossings must be acyclic.
bool r3_pattern_at(const PseudoDiagram& d, int g1, int g2, int g3, R3Pattern* out) {
    const int m = d.slots();
    std::array<int, 3> gaps{g1, g2, g3};
    std::array<int, 6> slot{};
    for (int i = 0; i < 3; ++i) {
        slot[2 * i] = gaps[i];
        slot[2 * i + 1] = mod(gaps[i] + 1, m);
    }
    std::array<char, 3> over_in{};   // crossing k: strand holding the over end
    std::array<int, 3> chords{-1, -1, -1};
    int found = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (slot[i] == slot[j]) return false;
    for (int i = 0; i < 6; ++i) {
        const int c = d.chord_at(slot[i]);
        bool known = false;
        for (int k = 0; k < found; ++k) known |= (chords[k] == c);
        if (!known) {
            if (found == 3) return false;
            chords[found++] = c;
        }
    }
    if (found != 3) return false;
    // relation: pair_of(s) = which gap holds slot s; edges oriented over->under
    auto pair_of = [&](int s) {
        for (int i = 0; i < 3; ++i)
            if (slot[2 * i] == s || slot[2 * i + 1] == s) return i;
        return -1;
    };
    std::array<std::array<char, 3>, 3> above{};   // above[i][j]: strand i over strand j
    for (int k = 0; k < 3; ++k) {
        const Chord& c = d.chord(chords[k]);
        const int pa = pair_of(c.a), pb = pair_of(c.b);
        if (pa < 0 || pb < 0 || pa == pb) return false;
        const int over = chord_over_at(c, c.a) ? pa : pb;
        const int under = over == pa ? pb : pa;
        above[over][under] = 1;
        over_in[k] = static_cast<char>(over);
    }
    (void)over_in;
    // each unordered strand pair must meet exactly once
    int meets = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) meets += above[i][j];
    if (meets != 3) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (above[i][j] + above[j][i] != 1) return false;
    const bool cyclic = (above[0][1] && above[1][2] && above[2][0]) ||
                        (above[1][0] && above[2][1] && above[0][2]);
    if (cyclic) return false;
    out->gaps = gaps;
    out->chords = chords;
    return true;
}

PseudoDiagram apply_r3(const PseudoDiagram& d, const R3Pattern& pat) {
    const int m = d.slots();
    std::vector<int> dest(m);
    for (int s = 0; s < m; ++s) dest[s] = s;
    for (int g : pat.gaps) {
        dest[g] = mod(g + 1, m);
        dest[mod(g + 1, m)] = g;
    }
    std::vector<Chord> out;
    out.reserve(d.n());
    for (const Chord& c : d.chords()) {
        Chord nc = c;
        nc.a = dest[c.a];
        nc.b = dest[c.b];
        if (nc.state.kind == StateKind::Classical) nc.state.over_slot = dest[c.state.over_slot];
        if (nc.a > nc.b) {
            std::swap(nc.a, nc.b);
            if (nc.state.kind == StateKind::Pre) nc.state.sign = -nc.state.sign;
        }
        out.push_back(nc);
    }
    return PseudoDiagram(std::move(out));
}

}  // namespace

std::string Move::describe() const {
    switch (kind) {
        case Kind::R1Remove: return "R1- slot " + std::to_string(s1);
        case Kind::R1Add:
            return "R1+ gap " + std::to_string(s1) + (over_first ? " over" : " under") +
                   (w1 > 0 ? " w+" : " w-");
        case Kind::R2Remove: return "R2- gap " + std::to_string(s1);
        case Kind::R2Add:
            return "R2+ gaps " + std::to_string(s1) + "," + std::to_string(s2) +
                   (aligned ? " aligned" : " nested") + (over_first ? " lower-over" : " upper-over") +
                   (w1 > 0 ? " w+" : " w-");
        case Kind::R3:
            return "R3 gaps " + std::to_string(s1) + "," + std::to_string(s2) + "," +
                   std::to_string(s3);
    }
    return "?";
}

PseudoDiagram apply_move(const PseudoDiagram& d, const Move& mv) {
    const int m = d.slots();
    switch (mv.kind) {
        case Move::Kind::R1Remove: {
            const int c = d.chord_at(mv.s1);
            if (!slots_adjacent(d.chord(c).a, d.chord(c).b, m) &&
                !slots_adjacent(d.chord(c).b, d.chord(c).a, m))
                throw diagram_error("R1Remove: chord is not isolated");
            return remove_chords(d, {c});
        }
        case Move::Kind::R1Add: {
            std::vector<Chord> out = shifted_chords(d, mv.s1, 2);
            Chord kink;
            kink.a = mv.s1;
            kink.b = mv.s1 + 1;
            kink.state = ChordState::classical(mv.over_first ? kink.a : kink.b, mv.w1);
            out.push_back(kink);
            return PseudoDiagram(std::move(out));
        }
        case Move::Kind::R2Remove: {
            int c, e;
            if (!r2_pair_at_gap(d, mv.s1, &c, &e))
                throw diagram_error("R2Remove: no cancelling pair at gap");
            return remove_chords(d, {c, e});
        }
        case Move::Kind::R2Add: {
            std::vector<Chord> out = shifted_chords(d, mv.s1, 2);
            {
                PseudoDiagram tmp(out);
                out = shifted_chords(tmp, mv.s2 + 2, 2);
            }
            const int s1 = mv.s1, s2 = mv.s1 + 1, s3 = mv.s2 + 2, s4 = mv.s2 + 3;
            Chord c1, c2;
            if (mv.aligned) {
                c1.a = s1; c1.b = s3;
                c2.a = s2; c2.b = s4;
            } else {
                c1.a = s1; c1.b = s4;
                c2.a = s2; c2.b = s3;
            }
            c1.state = ChordState::classical(mv.over_first ? c1.a : c1.b, mv.w1);
            c2.state = ChordState::classical(mv.over_first ? c2.a : c2.b, -mv.w1);
            out.push_back(c1);
            out.push_back(c2);
            return PseudoDiagram(std::move(out));
        }
        case Move::Kind::R3: {
            R3Pattern pat;
            if (!r3_pattern_at(d, mv.s1, mv.s2, mv.s3, &pat))
                throw diagram_error("R3: no triangle at these gaps");
            return apply_r3(d, pat);
        }
    }
    throw diagram_error("unknown move");
}

std::vector<std::pair<Move, PseudoDiagram>> removal_neighbors(const PseudoDiagram& d) {
    if (!d.is_classical()) throw diagram_error("moves need a fully classical diagram");
    std::vector<std::pair<Move, PseudoDiagram>> out;
    const int m = d.slots();
    for (int i = 0; i < d.n(); ++i) {
        const Chord& c = d.chord(i);
        if (slots_adjacent(c.a, c.b, m) || slots_adjacent(c.b, c.a, m)) {
            Move mv{Move::Kind::R1Remove};
            mv.s1 = c.a;
            out.emplace_back(mv, remove_chords(d, {i}));
        }
    }
    std::vector<char> pair_seen(d.n() * d.n(), 0);
    for (int g = 0; g < m; ++g) {
        int c, e;
        if (!r2_pair_at_gap(d, g, &c, &e)) continue;
        const int key = std::min(c, e) * d.n() + std::max(c, e);
        if (pair_seen[key]) continue;
        pair_seen[key] = 1;
        Move mv{Move::Kind::R2Remove};
        mv.s1 = g;
        out.emplace_back(mv, remove_chords(d, {c, e}));
    }
    return out;
}

std::vector<std::pair<Move, PseudoDiagram>> neighbors(const PseudoDiagram& d, int max_crossings) {
    std::vector<std::pair<Move, PseudoDiagram>> out = removal_neighbors(d);
    const int m = d.slots();
    // R3 slides
    for (int g1 = 0; g1 < m; ++g1)
        for (int g2 = g1 + 1; g2 < m; ++g2)
            for (int g3 = g2 + 1; g3 < m; ++g3) {
                R3Pattern pat;
                if (!r3_pattern_at(d, g1, g2, g3, &pat)) continue;
                Move mv{Move::Kind::R3};
                mv.s1 = g1;
                mv.s2 = g2;
                mv.s3 = g3;
                out.emplace_back(mv, apply_r3(d, pat));
            }
    // additions, within budget
    if (d.n() + 1 <= max_crossings) {
        const int gaps = std::max(1, m);
        for (int g = 0; g < gaps; ++g)
            for (bool over_first : {true, false})
                for (int w : {+1, -1}) {
                    Move mv{Move::Kind::R1Add};
                    mv.s1 = g;
                    mv.over_first = over_first;
                    mv.w1 = w;
                    out.emplace_back(mv, apply_move(d, mv));
                }
    }
    if (d.n() + 2 <= max_crossings) {
        const int gaps = std::max(1, m);
        for (int p = 0; p < gaps; ++p)
            for (int q = p; q < gaps; ++q)
                for (bool aligned : {true, false})
                    for (bool over_first : {true, false})
                        for (int w : {+1, -1}) {
                            Move mv{Move::Kind::R2Add};
                            mv.kind = Move::Kind::R2Add;
                            mv.s1 = p;
                            mv.s2 = q;
                            mv.aligned = aligned;
                            mv.over_first = over_first;
                            mv.w1 = w;
                            out.emplace_back(mv, apply_move(d, mv));
                        }
    }
    return out;
}

}  // namespace pdg
