#include "pdg/bounds.hpp"

#include <algorithm>

#include "pdg/genus.hpp"
#include "pdg/invariants.hpp"

namespace pdg {

namespace {

PseudoDiagram drop_chords(const PseudoDiagram& d, std::vector<int> ids) {
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

void require_realizable_classical(const PseudoDiagram& d, const char* op) {
    if (!d.is_classical())
        throw diagram_error(std::string(op) + " requires a fully classical diagram");
    if (!realizable(d))
        throw diagram_error(std::string(op) + " requires a realizable diagram");
}

}  // namespace

std::string BoundReport::to_string() const {
    std::string out = quantity + " <= ";
    if (upper2x % 2 == 0)
        out += std::to_string(upper2x / 2);
    else
        out += std::to_string(upper2x) + "/2";
    out += " [" + theorem + "]";
    if (!witness.empty()) {
        out += " witness={";
        for (size_t i = 0; i < witness.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(witness[i]);
        }
        out += "}";
    }
    out += verified ? " verified" : " unverified";
    if (!note.empty()) out += " (" + note + ")";
    return out;
}

PseudoDiagram switch_crossing(const PseudoDiagram& d, int id) {
    const Chord& c = d.chord(id);
    if (c.state.kind != StateKind::Classical)
        throw diagram_error("switch_crossing needs a classical crossing");
    std::vector<Chord> out = d.chords();
    Chord& nc = out[id];
    nc.state.sign = -nc.state.sign;
    nc.state.over_slot = (nc.state.over_slot == nc.a) ? nc.b : nc.a;
    return PseudoDiagram(std::move(out));
}

PseudoDiagram virtualize_crossings(const PseudoDiagram& d, const std::vector<int>& ids) {
    return drop_chords(d, ids);
}

PseudoDiagram switch_via_virtual_detour(const PseudoDiagram& d, int id) {
    const Chord c = d.chord(id);
    if (c.state.kind != StateKind::Classical)
        throw diagram_error("detour switch needs a classical crossing");
    Move r2{Move::Kind::R2Add};
    r2.s1 = c.a;
    r2.s2 = c.b;
    r2.aligned = true;
    r2.over_first = (c.state.over_slot == c.b);   // the survivor flips the overpass
    r2.w1 = c.state.sign;                         // pair carries (w, -w)
    const PseudoDiagram with_pair = apply_move(d, r2);
    // after the insertions the original crossing sits at (a+2, b+4) and the
    // first new chord at (a, b+2); making both virtual is deletion
    const int moved_id = with_pair.chord_at(c.a + 2);
    const int first_new = with_pair.chord_at(c.a);
    return virtualize_crossings(with_pair, {moved_id, first_new});
}

BoundReport unknotting_upper(const PseudoDiagram& d, const UnknotOracle& oracle) {
    require_realizable_classical(d, "unknotting_upper");
    BoundReport rep;
    rep.quantity = "u";
    rep.theorem = "thm:u<=tr/2";
    if (d.n() == 0) {
        rep.upper2x = 0;
        rep.verified = true;
        return rep;
    }
    const PseudoDiagram shadow = shadow_of(d);
    const TrivializingWitness w = shadow_trivializing_witness(shadow);
    // trivializing writhes on the deleted set, and their mirrors
    std::vector<int> toward, against;
    for (size_t i = 0; i < w.deleted.size(); ++i) {
        const int id = w.deleted[i];
        const int h = shadow.flat_handedness(id);
        const int target = (w.resolution[i] == Resolution::OverFirst) ? h : -h;
        if (d.chord(id).state.sign != target)
            toward.push_back(id);
        else
            against.push_back(id);
    }
    rep.witness = (toward.size() <= against.size()) ? toward : against;
    rep.upper2x = 2 * static_cast<long>(rep.witness.size());
    PseudoDiagram switched = d;
    for (int id : rep.witness) switched = switch_crossing(switched, id);
    const Verdict v = oracle.is_unknot(switched);
    rep.verified = v.trivial();
    if (!rep.verified) rep.note = "oracle " + v.to_string() + " on witness";
    return rep;
}

NumberValue unknotting_exact_small(const PseudoDiagram& d, const UnknotOracle& oracle,
                                   int exact_limit) {
    if (!d.is_classical())
        throw diagram_error("unknotting_exact_small requires a classical diagram");
    const int n = d.n();
    if (n > exact_limit)
        throw diagram_error("unknotting_exact_small limited to n <= " + std::to_string(exact_limit));
    std::optional<long> first_open;
    std::vector<int> combo;
    for (int k = 0; k <= n; ++k) {
        combo.assign(k, 0);
        for (int i = 0; i < k; ++i) combo[i] = i;
        bool more = true;
        while (more) {
            PseudoDiagram sw = d;
            for (int id : combo) sw = switch_crossing(sw, id);
            const Verdict v = oracle.is_unknot(sw);
            if (v.trivial()) {
                NumberValue out = first_open ? NumberValue::bounds(*first_open, k)
                                             : NumberValue::exact(k);
                out.witness_chords = combo;
                return out;
            }
            if (v.unknown() && !first_open) first_open = k;
            int i = k - 1;
            while (i >= 0 && combo[i] == n - k + i) --i;
            if (i < 0) {
                more = false;
            } else {
                ++combo[i];
                for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            }
            if (k == 0) more = false;
        }
    }
    NumberValue out = NumberValue::bounds(first_open ? *first_open : n + 1, std::nullopt);
    out.notes.push_back("no provably trivial switch found");
    return out;
}

BoundReport virtual_unknotting_upper(const PseudoDiagram& d, const UnknotOracle& oracle) {
    require_realizable_classical(d, "virtual_unknotting_upper");
    BoundReport rep;
    rep.quantity = "vu";
    rep.theorem = "thm:vu<=min(tr,2u)";
    if (d.n() == 0) {
        rep.upper2x = 0;
        rep.verified = true;
        return rep;
    }
    const PseudoDiagram shadow = shadow_of(d);
    const TrivializingWitness w = shadow_trivializing_witness(shadow);
    const long tr = static_cast<long>(w.deleted.size());
    const BoundReport u = unknotting_upper(d, oracle);
    const long two_u = 2 * (u.upper2x / 2);
    if (tr <= two_u) {
        rep.upper2x = 2 * tr;
        rep.witness = w.deleted;
        rep.note = "virtualize the trivializing set";
        const Verdict v = oracle.is_unknot(virtualize_crossings(d, w.deleted));
        rep.verified = v.trivial();
    } else {
        rep.upper2x = 2 * two_u;
        rep.witness = u.witness;
        rep.note = "detour transform at each changed crossing";
        PseudoDiagram sw = d;
        for (int id : rep.witness) sw = switch_crossing(sw, id);
        const Verdict v = oracle.is_unknot(sw);
        rep.verified = v.trivial();
    }
    return rep;
}

NumberValue virtual_unknotting_exact_small(const PseudoDiagram& d, const UnknotOracle& oracle,
                                           int exact_limit) {
    if (!d.is_classical())
        throw diagram_error("virtual_unknotting_exact_small requires a classical diagram");
    const int n = d.n();
    if (n > exact_limit)
        throw diagram_error("virtual_unknotting_exact_small limited to n <= " +
                            std::to_string(exact_limit));
    std::optional<long> first_open;
    std::vector<int> combo;
    for (int k = 0; k <= n; ++k) {
        combo.assign(k, 0);
        for (int i = 0; i < k; ++i) combo[i] = i;
        bool more = true;
        while (more) {
            const Verdict v = oracle.is_unknot(virtualize_crossings(d, combo));
            if (v.trivial()) {
                NumberValue out = first_open ? NumberValue::bounds(*first_open, k)
                                             : NumberValue::exact(k);
                out.witness_chords = combo;
                return out;
            }
            if (v.unknown() && !first_open) first_open = k;
            int i = k - 1;
            while (i >= 0 && combo[i] == n - k + i) --i;
            if (i < 0) {
                more = false;
            } else {
                ++combo[i];
                for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            }
            if (k == 0) more = false;
        }
    }
    NumberValue out = NumberValue::bounds(first_open ? *first_open : n + 1, std::nullopt);
    out.notes.push_back("no provably trivial virtualization found");
    return out;
}

GenusCheck genus_bound_check(const PseudoDiagram& d) {
    require_realizable_classical(d, "genus_bound_check");
    GenusCheck chk;
    const PseudoDiagram shadow = shadow_of(d);
    chk.tr = d.n() - static_cast<long>(max_parallel_subset(shadow).size());
    chk.seifert = seifert_count(d);
    chk.genus2x = diagram_genus2x(d);
    chk.holds = (chk.tr >= chk.genus2x) && (chk.seifert >= d.n() - chk.tr + 1);
    return chk;
}

BoundReport GenusCheck::report() const {
    BoundReport rep;
    rep.quantity = "g";
    rep.theorem = "thm:tr/2>=g";
    rep.upper2x = tr;   // g <= tr/2, stored doubled
    rep.verified = holds;
    rep.note = "s=" + std::to_string(seifert) + " 2g=" + std::to_string(genus2x);
    return rep;
}

}  // namespace pdg
