#include "pdg/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace pdg {

PseudoDiagram::PseudoDiagram(std::vector<Chord> chords) : chords_(std::move(chords)) {
    for (auto& c : chords_) {
        if (c.a > c.b) {
            std::swap(c.a, c.b);
            // a chord is stored first-visit-first; swapping endpoint order
            // flips the flat reference for Pre states
            if (c.state.kind == StateKind::Pre) c.state.sign = -c.state.sign;
        }
    }
    std::sort(chords_.begin(), chords_.end(),
              [](const Chord& x, const Chord& y) { return x.a < y.a; });
    reindex();
}

void PseudoDiagram::reindex() {
    const int m = slots();
    slot_chord_.assign(m, -1);
    for (int i = 0; i < static_cast<int>(chords_.size()); ++i) {
        const Chord& c = chords_[i];
        if (c.a < 0 || c.b < 0 || c.a >= m || c.b >= m || c.a == c.b)
            throw diagram_error("chord endpoints out of range");
        if (slot_chord_[c.a] != -1 || slot_chord_[c.b] != -1)
            throw diagram_error("endpoint slot used by two chords");
        slot_chord_[c.a] = i;
        slot_chord_[c.b] = i;
        if (c.state.kind == StateKind::Classical &&
            c.state.over_slot != c.a && c.state.over_slot != c.b)
            throw diagram_error("over endpoint is not an endpoint of its chord");
    }
}

const Chord& PseudoDiagram::chord(int id) const {
    if (id < 0 || id >= n()) throw diagram_error("unknown chord id");
    return chords_[id];
}

int PseudoDiagram::chord_at(int slot) const {
    if (slot < 0 || slot >= slots()) throw diagram_error("slot out of range");
    return slot_chord_[slot];
}

int PseudoDiagram::partner(int slot) const {
    const Chord& c = chord(chord_at(slot));
    return slot == c.a ? c.b : c.a;
}

bool PseudoDiagram::is_shadow() const {
    return std::all_of(chords_.begin(), chords_.end(),
                       [](const Chord& c) { return c.state.kind == StateKind::Pre; });
}

bool PseudoDiagram::is_classical() const {
    return std::all_of(chords_.begin(), chords_.end(),
                       [](const Chord& c) { return c.state.kind == StateKind::Classical; });
}

int PseudoDiagram::precrossing_count() const {
    int p = 0;
    for (const auto& c : chords_)
        if (c.state.kind == StateKind::Pre) ++p;
    return p;
}

int PseudoDiagram::writhe() const {
    int w = 0;
    for (const auto& c : chords_)
        if (c.state.kind == StateKind::Classical) w += c.state.sign;
    return w;
}

int PseudoDiagram::flat_handedness(int id) const {
    const Chord& c = chord(id);
    if (c.state.kind == StateKind::Pre) return c.state.sign;
    return c.state.over_slot == c.a ? c.state.sign : -c.state.sign;
}

bool PseudoDiagram::chords_cross(int c, int d) const {
    if (c == d) throw diagram_error("chords_cross needs distinct chords");
    const Chord& x = chord(c);
    const Chord& y = chord(d);
    const bool a_in = x.a < y.a && y.a < x.b;
    const bool b_in = x.a < y.b && y.b < x.b;
    return a_in != b_in;
}

PseudoDiagram PseudoDiagram::rotate_basepoint(int k) const {
    const int m = slots();
    if (m == 0) return *this;
    k = ((k % m) + m) % m;
    std::vector<Chord> out;
    out.reserve(chords_.size());
    for (const Chord& c : chords_) {
        Chord nc = c;
        nc.a = (c.a - k + m) % m;
        nc.b = (c.b - k + m) % m;
        const bool swapped = nc.a > nc.b;
        if (nc.state.kind == StateKind::Classical) {
            nc.state.over_slot = (c.state.over_slot - k + m) % m;
        } else if (swapped) {
            nc.state.sign = -nc.state.sign;
        }
        if (swapped) std::swap(nc.a, nc.b);
        out.push_back(nc);
    }
    PseudoDiagram d;
    d.chords_ = std::move(out);
    std::sort(d.chords_.begin(), d.chords_.end(),
              [](const Chord& x, const Chord& y) { return x.a < y.a; });
    d.reindex();
    return d;
}

PseudoDiagram PseudoDiagram::mirror() const {
    PseudoDiagram d = *this;
    for (auto& c : d.chords_) c.state.sign = -c.state.sign;
    return d;
}

PseudoDiagram PseudoDiagram::reverse() const {
    const int m = slots();
    if (m == 0) return *this;
    std::vector<Chord> out;
    out.reserve(chords_.size());
    for (const Chord& c : chords_) {
        Chord nc = c;
        nc.a = (m - c.a) % m;
        nc.b = (m - c.b) % m;
        const bool swapped = nc.a > nc.b;
        if (nc.state.kind == StateKind::Classical) {
            nc.state.over_slot = (m - c.state.over_slot) % m;
        } else if (swapped) {
            nc.state.sign = -nc.state.sign;
        }
        if (swapped) std::swap(nc.a, nc.b);
        out.push_back(nc);
    }
    PseudoDiagram d;
    d.chords_ = std::move(out);
    std::sort(d.chords_.begin(), d.chords_.end(),
              [](const Chord& x, const Chord& y) { return x.a < y.a; });
    d.reindex();
    return d;
}

PseudoDiagram PseudoDiagram::resolve(int id, Resolution choice, bool uber) const {
    const Chord& c = chord(id);
    if (c.state.kind != StateKind::Pre)
        throw diagram_error("chord is already classical");
    if (choice == Resolution::Virtual) {
        if (!uber) throw diagram_error("virtual resolution requires uber mode");
        const int m = slots();
        std::vector<int> shift(m, 0);
        for (int s = 0; s < m; ++s)
            shift[s] = (s > c.a ? 1 : 0) + (s > c.b ? 1 : 0);
        std::vector<Chord> out;
        out.reserve(chords_.size() - 1);
        for (int i = 0; i < n(); ++i) {
            if (i == id) continue;
            Chord nc = chords_[i];
            nc.a -= shift[nc.a];
            nc.b -= shift[nc.b];
            if (nc.state.kind == StateKind::Classical)
                nc.state.over_slot -= shift[nc.state.over_slot];
            out.push_back(nc);
        }
        PseudoDiagram d;
        d.chords_ = std::move(out);
        d.reindex();
        return d;
    }
    PseudoDiagram d = *this;
    Chord& nc = d.chords_[id];
    const int flat = c.state.sign;
    if (choice == Resolution::OverFirst)
        nc.state = ChordState::classical(c.a, flat);
    else
        nc.state = ChordState::classical(c.b, -flat);
    return d;
}

std::vector<int> PseudoDiagram::precrossing_ids() const {
    std::vector<int> ids;
    for (int i = 0; i < n(); ++i)
        if (chords_[i].state.kind == StateKind::Pre) ids.push_back(i);
    return ids;
}

PseudoDiagram PseudoDiagram::complete(uint64_t mask) const {
    PseudoDiagram d = *this;
    int bit = 0;
    for (int i = 0; i < n(); ++i) {
        if (d.chords_[i].state.kind != StateKind::Pre) continue;
        const Chord& c = d.chords_[i];
        const int flat = c.state.sign;
        if (mask >> bit & 1)
            d.chords_[i].state = ChordState::classical(c.b, -flat);
        else
            d.chords_[i].state = ChordState::classical(c.a, flat);
        ++bit;
    }
    return d;
}

std::string PseudoDiagram::serialize() const {
    if (n() == 0) return "()";
    std::string out;
    std::vector<int> label(n(), 0);
    int next = 1;
    for (int s = 0; s < slots(); ++s) {
        const int id = slot_chord_[s];
        const Chord& c = chords_[id];
        if (label[id] == 0) label[id] = next++;
        char letter;
        if (c.state.kind == StateKind::Pre)
            letter = 'P';
        else
            letter = (c.state.over_slot == s) ? 'O' : 'U';
        out += letter;
        out += std::to_string(label[id]);
        out += (c.state.sign > 0) ? '+' : '-';
    }
    return out;
}

std::string PseudoDiagram::canonical_code() const {
    std::string best = serialize();
    for (int rev = 0; rev < 2; ++rev) {
        PseudoDiagram base = rev ? reverse() : *this;
        for (int k = 0; k < slots(); ++k) {
            std::string s = base.rotate_basepoint(k).serialize();
            if (s < best) best = s;
        }
        if (slots() == 0) break;
    }
    return best;
}

namespace {

struct Token {
    char letter;
    int label;
    int sign;
    std::string text;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> toks;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        const size_t start = i;
        const char letter = text[i];
        if (letter != 'O' && letter != 'U' && letter != 'P')
            throw diagram_error("parse error at '" + std::string(1, letter) +
                                "': expected O, U or P");
        ++i;
        int label = 0;
        size_t digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            label = label * 10 + (text[i] - '0');
            ++i;
            ++digits;
        }
        if (digits == 0 || label == 0)
            throw diagram_error("parse error at '" + std::string(text.substr(start, i - start)) +
                                "': expected a positive label");
        if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
            throw diagram_error("parse error at '" + std::string(text.substr(start, i - start)) +
                                "': expected trailing + or -");
        const int sign = text[i] == '+' ? +1 : -1;
        ++i;
        toks.push_back({letter, label, sign, std::string(text.substr(start, i - start))});
    }
    return toks;
}

}  // namespace

PseudoDiagram parse_gauss(std::string_view text) {
    // "()" denotes the 0-chord unknot diagram
    {
        std::string trimmed;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
        if (trimmed == "()") return PseudoDiagram{};
        if (trimmed.empty()) throw diagram_error("empty input: the unknot is written '()'");
    }
    const std::vector<Token> toks = tokenize(text);
    std::map<int, std::vector<int>> visits;   // label -> slot list
    for (int s = 0; s < static_cast<int>(toks.size()); ++s) visits[toks[s].label].push_back(s);

    std::vector<Chord> chords;
    for (const auto& [label, slots] : visits) {
        if (slots.size() != 2)
            throw diagram_error("label " + std::to_string(label) + " used " +
                                std::to_string(slots.size()) + " times, expected 2");
        const Token& t1 = toks[slots[0]];
        const Token& t2 = toks[slots[1]];
        if (t1.sign != t2.sign)
            throw diagram_error("sign mismatch between '" + t1.text + "' and '" + t2.text + "'");
        Chord c;
        c.a = slots[0];
        c.b = slots[1];
        if (t1.letter == 'P' || t2.letter == 'P') {
            if (t1.letter != 'P' || t2.letter != 'P')
                throw diagram_error("mixed state tokens for label " + std::to_string(label) +
                                    ": '" + t1.text + "' vs '" + t2.text + "'");
            c.state = ChordState::pre(t1.sign);
        } else {
            if (t1.letter == t2.letter)
                throw diagram_error("label " + std::to_string(label) +
                                    " visited twice as '" + std::string(1, t1.letter) +
                                    "', expected one O and one U");
            c.state = ChordState::classical(t1.letter == 'O' ? c.a : c.b, t1.sign);
        }
        chords.push_back(c);
    }
    return PseudoDiagram(std::move(chords));
}

InterlacementGraph interlacement_graph(const PseudoDiagram& d) {
    InterlacementGraph g;
    g.n = d.n();
    g.adj.assign(g.n, std::vector<char>(g.n, 0));
    g.degree.assign(g.n, 0);
    for (int c = 0; c < g.n; ++c)
        for (int e = c + 1; e < g.n; ++e)
            if (d.chords_cross(c, e)) {
                g.adj[c][e] = g.adj[e][c] = 1;
                ++g.degree[c];
                ++g.degree[e];
            }
    return g;
}

bool evenly_intersticed(const PseudoDiagram& d) {
    const InterlacementGraph g = interlacement_graph(d);
    return std::all_of(g.degree.begin(), g.degree.end(), [](int x) { return x % 2 == 0; });
}

PseudoDiagram shadow_of(const PseudoDiagram& d) {
    std::vector<Chord> out;
    out.reserve(d.n());
    for (int i = 0; i < d.n(); ++i) {
        Chord c = d.chord(i);
        c.state = ChordState::pre(d.flat_handedness(i));
        out.push_back(c);
    }
    return PseudoDiagram(std::move(out));
}

}  // namespace pdg
