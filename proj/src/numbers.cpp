#include "pdg/numbers.hpp"

#include <algorithm>

#include "pdg/genus.hpp"
#include "pdg/invariants.hpp"

namespace pdg {

namespace {

std::string resolution_name(Resolution r) {
    switch (r) {
        case Resolution::OverFirst: return "over-first";
        case Resolution::OverSecond: return "over-second";
        case Resolution::Virtual: return "virtual";
    }
    return "?";
}

}  // namespace

std::string NumberValue::to_string() const {
    std::string out;
    switch (kind) {
        case Kind::Exact: out = "Exact(" + std::to_string(value) + ")"; break;
        case Kind::Bounds:
            out = "Bounds(" + std::to_string(lower) + "," +
                  (upper ? std::to_string(*upper) : "") + ")";
            break;
        case Kind::Infinite: out = "Infinite"; break;
        case Kind::Unset: return "Unset";
    }
    if (!witness_chords.empty()) {
        out += " witness=[";
        for (size_t i = 0; i < witness_chords.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(witness_chords[i]);
            if (i < witness_resolution.size()) out += ":" + resolution_name(witness_resolution[i]);
        }
        out += "]";
    }
    return out;
}

std::string CharacteristicReport::to_string() const {
    std::string out;
    const std::pair<const char*, const NumberValue*> rows[] = {
        {"tr", &tr}, {"kn", &kn}, {"cl", &cl}, {"vir", &vir}, {"virtr", &virtr}, {"ubtr", &ubtr}};
    for (auto [name, v] : rows) {
        if (v->kind == NumberValue::Kind::Unset) continue;
        if (!out.empty()) out += " ";
        out += std::string(name) + "=" + v->to_string();
    }
    return out;
}

std::vector<int> max_parallel_subset(const PseudoDiagram& d) {
    const int n = d.n();
    if (n == 0) return {};
    const int m = 2 * n;
    // best[i][j]: largest parallel subset among chords inside slot range [i, j]
    std::vector<std::vector<int>> best(m + 1, std::vector<int>(m + 1, 0));
    for (int i = m - 1; i >= 0; --i) {
        for (int j = i; j < m; ++j) {
            const int k = d.partner(i);
            int take = -1;
            if (i < k && k <= j)
                take = 1 + (k > i + 1 ? best[i + 1][k - 1] : 0) + (k < j ? best[k + 1][j] : 0);
            const int skip = best[i + 1][j];
            best[i][j] = std::max(skip, take);
        }
    }
    // reconstruct, preferring the earliest chord on ties for a
    // lexicographically least witness
    std::vector<int> witness;
    std::vector<std::pair<int, int>> stack{{0, m - 1}};
    while (!stack.empty()) {
        auto [i, j] = stack.back();
        stack.pop_back();
        if (i > j || i >= m) continue;
        const int k = d.partner(i);
        int take = -1;
        if (i < k && k <= j)
            take = 1 + (k > i + 1 ? best[i + 1][k - 1] : 0) + (k < j ? best[k + 1][j] : 0);
        if (take >= best[i + 1][j] && take == best[i][j]) {
            witness.push_back(d.chord_at(i));
            if (k < j) stack.push_back({k + 1, j});
            if (i + 1 <= k - 1) stack.push_back({i + 1, k - 1});
        } else {
            stack.push_back({i + 1, j});
        }
    }
    std::sort(witness.begin(), witness.end());
    return witness;
}

std::vector<int> max_parallel_subset_brute(const PseudoDiagram& d) {
    const int n = d.n();
    if (n == 0) return {};
    if (n > 20) throw diagram_error("brute-force parallel subset limited to n <= 20");
    std::vector<uint32_t> cross(n, 0);
    for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e)
            if (c != e && d.chords_cross(c, e)) cross[c] |= uint32_t{1} << e;
    uint32_t best_mask = 0;
    int best = 0;
    const uint32_t total = uint32_t{1} << n;
    for (uint32_t mask = 0; mask < total; ++mask) {
        const int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool ok = true;
        for (int c = 0; c < n && ok; ++c)
            if (mask >> c & 1) ok = (mask & cross[c]) == 0;
        if (ok) {
            best = size;
            best_mask = mask;
        }
    }
    std::vector<int> out;
    for (int c = 0; c < n; ++c)
        if (best_mask >> c & 1) out.push_back(c);
    return out;
}

TrivializingWitness shadow_trivializing_witness(const PseudoDiagram& shadow) {
    if (!shadow.is_shadow()) throw diagram_error("witness construction expects a shadow");
    const int n = shadow.n();
    const std::vector<int> keep_list = max_parallel_subset(shadow);
    std::vector<char> keep(n, 0), alive(n, 1);
    for (int c : keep_list) keep[c] = 1;

    TrivializingWitness w;
    std::vector<Resolution> res(n, Resolution::OverFirst);
    std::vector<char> resolved(n, 0);

    auto slot_alive = [&](int s) { return alive[shadow.chord_at(s)]; };

    int keep_alive = static_cast<int>(keep_list.size());
    while (keep_alive > 0) {
        // innermost alive kept chord: smallest span with no kept endpoint inside
        int a = -1;
        int a_span = 1 << 30;
        for (int c = 0; c < n; ++c) {
            if (!alive[c] || !keep[c]) continue;
            const Chord& ch = shadow.chord(c);
            bool kept_inside = false;
            for (int s = ch.a + 1; s < ch.b; ++s) {
                if (!slot_alive(s)) continue;
                const int e = shadow.chord_at(s);
                if (keep[e] && e != c) {
                    kept_inside = true;
                    break;
                }
            }
            if (!kept_inside && ch.b - ch.a < a_span) {
                a = c;
                a_span = ch.b - ch.a;
            }
        }
        if (a < 0) throw diagram_error("no exterior chord; kept set is not parallel");
        const Chord& ca = shadow.chord(a);
        // contract the strand cut off by `a`: every crossing with an endpoint
        // on the arc resolves with the arc strand as the overpass
        for (int s = ca.a + 1; s < ca.b; ++s) {
            const int c = shadow.chord_at(s);
            if (!alive[c] || c == a || resolved[c]) continue;
            res[c] = (s == shadow.chord(c).a) ? Resolution::OverFirst : Resolution::OverSecond;
            resolved[c] = 1;
            alive[c] = 0;
        }
        alive[a] = 0;
        --keep_alive;
    }
    // leftovers are parallel to everything that mattered; descending works
    for (int c = 0; c < n; ++c) {
        if (!keep[c] && !resolved[c]) {
            res[c] = Resolution::OverFirst;
            resolved[c] = 1;
        }
    }
    for (int c = 0; c < n; ++c) {
        if (keep[c]) continue;
        w.deleted.push_back(c);
        w.resolution.push_back(res[c]);
    }
    return w;
}

namespace {

enum : uint8_t { kGood = 0, kBad = 1, kOpen = 2 };

// Tri-state classification of all 2^p completions of the precrossings,
// indexed by the completion mask (bit i = OverSecond for the i-th
// precrossing in chord-id order).
std::vector<uint8_t> unknot_table(const PseudoDiagram& p, const UnknotOracle& oracle) {
    const int pp = p.precrossing_count();
    std::vector<uint8_t> table(uint64_t{1} << pp);
    for (uint64_t mask = 0; mask < table.size(); ++mask) {
        const Verdict v = oracle.is_unknot(p.complete(mask));
        table[mask] = v.trivial() ? kGood : v.nontrivial() ? kBad : kOpen;
    }
    return table;
}

std::vector<uint8_t> classical_table(const PseudoDiagram& p, const UnknotOracle& oracle) {
    const int pp = p.precrossing_count();
    std::vector<uint8_t> table(uint64_t{1} << pp);
    for (uint64_t mask = 0; mask < table.size(); ++mask) {
        const ClassicalVerdict v = oracle.classicality(p.complete(mask));
        table[mask] = v.classical() ? kGood : v.nonclassical() ? kBad : kOpen;
    }
    return table;
}

// Minimum k such that some k-subset of precrossings and resolution makes
// every completion a `good` row. Deterministic order: cardinality, then
// lexicographic subsets, then resolution bits.
NumberValue subset_min_force(const PseudoDiagram& p, const std::vector<uint8_t>& table,
                             uint8_t good, uint8_t bad) {
    const std::vector<int> pre = p.precrossing_ids();
    const int pp = static_cast<int>(pre.size());
    std::optional<long> first_open_level;

    std::vector<int> combo;
    for (int k = 0; k <= pp; ++k) {
        bool level_has_open = false;
        std::optional<std::pair<std::vector<int>, uint64_t>> confirmed;

        combo.assign(k, 0);
        for (int i = 0; i < k; ++i) combo[i] = i;
        bool more = true;
        while (more && !confirmed) {
            const int free_count = pp - k;
            for (uint64_t rbits = 0; rbits < (uint64_t{1} << k) && !confirmed; ++rbits) {
                uint64_t base = 0;
                for (int i = 0; i < k; ++i)
                    if (rbits >> i & 1) base |= uint64_t{1} << combo[i];
                bool refuted = false, open = false;
                for (uint64_t f = 0; f < (uint64_t{1} << free_count); ++f) {
                    uint64_t mask = base;
                    int fi = 0;
                    for (int bit = 0; bit < pp; ++bit) {
                        if (std::find(combo.begin(), combo.end(), bit) != combo.end()) continue;
                        if (f >> fi & 1) mask |= uint64_t{1} << bit;
                        ++fi;
                    }
                    const uint8_t row = table[mask];
                    if (row == bad) {
                        refuted = true;
                        break;
                    }
                    if (row != good) open = true;
                }
                if (refuted) continue;
                if (open) {
                    level_has_open = true;
                } else {
                    confirmed = {{combo}, rbits};
                }
            }
            // next lexicographic combination
            int i = k - 1;
            while (i >= 0 && combo[i] == pp - k + i) --i;
            if (i < 0) {
                more = false;
            } else {
                ++combo[i];
                for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            }
            if (k == 0) more = false;
        }

        if (confirmed) {
            const long lower = first_open_level ? *first_open_level : k;
            NumberValue out = (lower == k) ? NumberValue::exact(k)
                                           : NumberValue::bounds(lower, k);
            for (int idx : confirmed->first) out.witness_chords.push_back(pre[idx]);
            for (int i = 0; i < k; ++i)
                out.witness_resolution.push_back((confirmed->second >> i & 1)
                                                     ? Resolution::OverSecond
                                                     : Resolution::OverFirst);
            return out;
        }
        if (level_has_open && !first_open_level) first_open_level = k;
    }
    if (!first_open_level) return NumberValue::infinite();
    NumberValue out = NumberValue::bounds(*first_open_level, std::nullopt);
    out.notes.push_back("oracle Unknown blocked confirmation");
    return out;
}

void require_exact_limit(const PseudoDiagram& p, int exact_limit, const char* what) {
    if (p.precrossing_count() > exact_limit)
        throw diagram_error(std::string(what) + ": " + std::to_string(p.precrossing_count()) +
                            " precrossings exceed the exact limit " + std::to_string(exact_limit));
}

}  // namespace

NumberValue trivializing_number_general(const PseudoDiagram& p, const UnknotOracle& oracle,
                                        int exact_limit) {
    require_exact_limit(p, exact_limit, "trivializing_number_general");
    return subset_min_force(p, unknot_table(p, oracle), kGood, kBad);
}

NumberValue knotting_number(const PseudoDiagram& p, const UnknotOracle& oracle, int exact_limit) {
    require_exact_limit(p, exact_limit, "knotting_number");
    return subset_min_force(p, unknot_table(p, oracle), kBad, kGood);
}

CharacteristicReport trivializing_number_shadow(const PseudoDiagram& s, const UnknotOracle& oracle,
                                                int exact_limit) {
    if (!s.is_shadow()) throw diagram_error("trivializing_number_shadow expects a shadow");
    CharacteristicReport rep;
    const int n = s.n();
    const long delta = n - static_cast<long>(max_parallel_subset(s).size());

    // deleting the complement of a maximum parallel set leaves a parallel
    // diagram, trivial under every uber completion; conversely remaining
    // crossed prechords admit a knotted completion
    NumberValue deletion = NumberValue::exact(delta);
    {
        TrivializingWitness w = shadow_trivializing_witness(s);
        deletion.witness_chords = w.deleted;
        deletion.witness_resolution.assign(w.deleted.size(), Resolution::Virtual);
    }
    rep.virtr = deletion;
    rep.ubtr = deletion;

    if (realizable(s)) {
        TrivializingWitness w = shadow_trivializing_witness(s);
        NumberValue tr = NumberValue::exact(delta);
        tr.witness_chords = w.deleted;
        tr.witness_resolution = w.resolution;
        tr.notes.push_back("chord deletion count; realizable shadow");
        rep.tr = tr;
    } else if (n <= exact_limit) {
        rep.tr = trivializing_number_general(s, oracle, exact_limit);
    } else {
        long lo = std::max<long>(delta, delta == 1 ? 2 : delta);
        rep.tr = NumberValue::bounds(lo, std::nullopt);
        rep.tr.notes.push_back("virtual shadow beyond exact limit");
    }
    return rep;
}

ClVirBounds cl_vir_bounds(const PseudoDiagram& p) {
    ClVirBounds out;
    const auto part = c_m_partition(p);
    const auto odd = odd_set(p);
    const std::vector<int> pre = p.precrossing_ids();
    const bool shadow = p.is_shadow();

    long odd_pre = 0;
    for (int c : odd)
        if (p.chord(c).state.kind == StateKind::Pre) ++odd_pre;

    long cl_lo = odd_pre;   // cl >= |Odd ∩ precrossings|
    if (shadow) {
        long nonzero = 0;
        for (const auto& [m, cell] : part)
            if (m != 0) nonzero += static_cast<long>(cell.size());
        cl_lo = std::max(cl_lo, nonzero);   // cl >= sum over m != 0 of |C_m|
    }
    out.cl = NumberValue::bounds(cl_lo, std::nullopt);

    std::optional<long> vir_hi;
    if (shadow) {
        for (const auto& [m, cell] : part) {
            if (m == 0) continue;
            const long cand = static_cast<long>(cell.size()) / 2 + 1;
            if (!vir_hi || cand < *vir_hi) vir_hi = cand;
        }
    }
    if (!odd.empty() && odd_pre >= static_cast<long>(odd.size()) / 2 + 1) {
        const long cand = static_cast<long>(odd.size()) / 2 + 1;
        if (!vir_hi || cand < *vir_hi) vir_hi = cand;
    }
    const long vir_lo = (shadow && realizable(p)) ? 3 : 0;
    out.vir = NumberValue::bounds(vir_lo, vir_hi);
    return out;
}

ClVirBounds cl_vir_exact_small(const PseudoDiagram& p, const UnknotOracle& oracle,
                               int exact_limit) {
    require_exact_limit(p, exact_limit, "cl_vir_exact_small");
    const std::vector<uint8_t> table = classical_table(p, oracle);
    ClVirBounds out;
    out.cl = subset_min_force(p, table, kGood, kBad);
    out.vir = subset_min_force(p, table, kBad, kGood);
    // formula bounds must stay consistent; tighten Bounds results with them
    const ClVirBounds formula = cl_vir_bounds(p);
    if (out.cl.kind == NumberValue::Kind::Bounds)
        out.cl.lower = std::max(out.cl.lower, formula.cl.lower);
    if (out.vir.kind == NumberValue::Kind::Bounds && formula.vir.upper)
        out.vir.upper = out.vir.upper ? std::min(*out.vir.upper, *formula.vir.upper)
                                      : formula.vir.upper;
    return out;
}

CharacteristicReport characteristic_report(const PseudoDiagram& p, const UnknotOracle& oracle,
                                           int exact_limit) {
    CharacteristicReport rep;
    const int pp = p.precrossing_count();
    if (p.is_shadow()) {
        rep = trivializing_number_shadow(p, oracle, exact_limit);
    } else if (pp <= exact_limit) {
        rep.tr = trivializing_number_general(p, oracle, exact_limit);
    }
    if (pp <= exact_limit) {
        rep.kn = knotting_number(p, oracle, exact_limit);
        const ClVirBounds cv = cl_vir_exact_small(p, oracle, exact_limit);
        rep.cl = cv.cl;
        rep.vir = cv.vir;
    } else {
        const ClVirBounds cv = cl_vir_bounds(p);
        rep.cl = cv.cl;
        rep.vir = cv.vir;
    }
    return rep;
}

}  // namespace pdg
