#include "pdg/oracle.hpp"

#include <algorithm>
#include <deque>

#include "pdg/genus.hpp"
#include "pdg/invariants.hpp"

namespace pdg {

namespace {

constexpr size_t kCacheCap = 1u << 20;

struct SearchNode {
    PseudoDiagram diagram;
    int parent = -1;
    Move via{};
};

std::vector<Move> unwind(const std::vector<SearchNode>& nodes, int idx) {
    std::vector<Move> trace;
    while (idx > 0) {
        trace.push_back(nodes[idx].via);
        idx = nodes[idx].parent;
    }
    std::reverse(trace.begin(), trace.end());
    return trace;
}

// Applies the first available removal until none fits. Cheap fast path;
// reaching the target there short-circuits the breadth-first search.
template <typename Stop>
std::optional<std::vector<Move>> greedy_reduce(const PseudoDiagram& start, Stop&& done) {
    PseudoDiagram cur = start;
    std::vector<Move> trace;
    while (true) {
        if (done(cur)) return trace;
        auto rems = removal_neighbors(cur);
        if (rems.empty()) return std::nullopt;
        trace.push_back(rems.front().first);
        cur = std::move(rems.front().second);
    }
}

}  // namespace

std::string Verdict::to_string() const {
    switch (kind) {
        case Kind::Trivial: return "Trivial(" + std::to_string(trace.size()) + " moves)";
        case Kind::Nontrivial:
            return "Nontrivial(" + (cert ? cert->invariant + "=" + cert->value : "?") + ")";
        case Kind::Unknown: return "Unknown(" + std::to_string(states) + " states)";
    }
    return "?";
}

std::string ClassicalVerdict::to_string() const {
    switch (kind) {
        case Kind::Classical: return "Classical(" + std::to_string(trace.size()) + " moves)";
        case Kind::NonClassical:
            return "NonClassical(" + (cert ? cert->invariant + "=" + cert->value : "?") + ")";
        case Kind::Unknown: return "Unknown(" + std::to_string(states) + " states)";
    }
    return "?";
}

PseudoDiagram descending_resolution(const PseudoDiagram& p, int basepoint) {
    const int m = p.slots();
    PseudoDiagram d = p;
    for (int id = 0; id < p.n(); ++id) {
        if (p.chord(id).state.kind != StateKind::Pre) continue;
        const Chord& c = p.chord(id);
        const int da = (c.a - basepoint % m + m) % m;
        const int db = (c.b - basepoint % m + m) % m;
        d = d.resolve(id, da < db ? Resolution::OverFirst : Resolution::OverSecond);
    }
    return d;
}

PseudoDiagram replay_trace(const PseudoDiagram& start, const std::vector<Move>& trace) {
    PseudoDiagram d = start;
    for (const Move& mv : trace) d = apply_move(d, mv);
    return d;
}

Verdict UnknotOracle::is_unknot(const PseudoDiagram& d) const {
    if (!d.is_classical()) throw diagram_error("is_unknot requires a fully classical diagram");
    if (d.n() == 0) return Verdict{Verdict::Kind::Trivial, {}, {}, 0};
    const std::string key = d.canonical_code();
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    Verdict verdict;
    // certificate shortcuts, cheap first; all are sound for virtual knots,
    // v2 only on realizable diagrams where it is the classical invariant
    if (long j = j_invariant(d); j != 0) {
        verdict = {Verdict::Kind::Nontrivial, {}, Certificate{"J", std::to_string(j)}, 0};
    } else if (IntPolynomial pt = intersection_index_polynomial(d); !pt.is_zero()) {
        verdict = {Verdict::Kind::Nontrivial, {}, Certificate{"p_t", pt.to_string('t')}, 0};
    } else {
        const bool real = realizable(d);
        if (real && v2(d) != 0) {
            verdict = {Verdict::Kind::Nontrivial, {}, Certificate{"v2", std::to_string(v2(d))}, 0};
        } else if (d.n() <= budget_.bracket_max_n) {
            LaurentPolynomial f = f_polynomial(d, budget_.bracket_max_n);
            if (!f.is_one()) {
                verdict = {Verdict::Kind::Nontrivial, {}, Certificate{"f", f.to_string('A')}, 0};
            }
        }
    }
    if (verdict.kind == Verdict::Kind::Nontrivial) {
        if (cache_.size() < kCacheCap) cache_.emplace(key, verdict);
        return verdict;
    }

    if (auto trace = greedy_reduce(d, [](const PseudoDiagram& x) { return x.n() == 0; })) {
        Verdict v{Verdict::Kind::Trivial, std::move(*trace), {}, 0};
        if (cache_.size() < kCacheCap) cache_.emplace(key, v);
        return v;
    }

    // breadth-first search for the empty diagram; layered so the reached
    // set is independent of expansion order under the state cap
    const int max_crossings = budget_.cap_for(d.n());
    std::vector<SearchNode> nodes;
    std::unordered_map<std::string, int> seen;
    nodes.push_back({d, -1, {}});
    seen.emplace(key, 0);
    std::vector<int> layer{0};
    long visited = 1;
    bool truncated = false;
    while (!layer.empty()) {
        std::vector<int> next_layer;
        for (int idx : layer) {
            for (auto& [mv, nd] : neighbors(nodes[idx].diagram, max_crossings)) {
                const std::string code = nd.canonical_code();
                if (seen.count(code)) continue;
                const int ni = static_cast<int>(nodes.size());
                nodes.push_back({nd, idx, mv});
                seen.emplace(code, ni);
                ++visited;
                if (nd.n() == 0) {
                    Verdict v{Verdict::Kind::Trivial, unwind(nodes, ni), {}, visited};
                    if (cache_.size() < kCacheCap) cache_.emplace(key, v);
                    return v;
                }
                next_layer.push_back(ni);
            }
        }
        if (visited > budget_.max_states) {
            truncated = true;
            break;
        }
        layer = std::move(next_layer);
    }
    (void)truncated;
    Verdict v{Verdict::Kind::Unknown, {}, {}, visited};
    if (cache_.size() < kCacheCap) cache_.emplace(key, v);
    return v;
}

ClassicalVerdict UnknotOracle::classicality(const PseudoDiagram& d) const {
    if (!d.is_classical()) throw diagram_error("classicality requires a fully classical diagram");
    if (d.n() == 0) return ClassicalVerdict{ClassicalVerdict::Kind::Classical, {}, {}, 0};
    const std::string key = d.canonical_code();
    if (auto it = classical_cache_.find(key); it != classical_cache_.end()) return it->second;

    ClassicalVerdict verdict;
    if (long j = j_invariant(d); j != 0) {
        verdict = {ClassicalVerdict::Kind::NonClassical, {}, Certificate{"J", std::to_string(j)}, 0};
    } else if (IntPolynomial pt = intersection_index_polynomial(d); !pt.is_zero()) {
        verdict = {ClassicalVerdict::Kind::NonClassical, {},
                   Certificate{"p_t", pt.to_string('t')}, 0};
    } else if (realizable(d)) {
        verdict = {ClassicalVerdict::Kind::Classical, {}, {}, 0};
    } else if (auto trace = greedy_reduce(d, [](const PseudoDiagram& x) { return realizable(x); })) {
        verdict = {ClassicalVerdict::Kind::Classical, std::move(*trace), {}, 0};
    } else {
        // move search for any realizable representative
        const int max_crossings = budget_.cap_for(d.n());
        std::vector<SearchNode> nodes;
        std::unordered_map<std::string, int> seen;
        nodes.push_back({d, -1, {}});
        seen.emplace(key, 0);
        std::vector<int> layer{0};
        long visited = 1;
        bool found = false;
        while (!layer.empty() && !found) {
            std::vector<int> next_layer;
            for (int idx : layer) {
                for (auto& [mv, nd] : neighbors(nodes[idx].diagram, max_crossings)) {
                    const std::string code = nd.canonical_code();
                    if (seen.count(code)) continue;
                    const int ni = static_cast<int>(nodes.size());
                    nodes.push_back({nd, idx, mv});
                    seen.emplace(code, ni);
                    ++visited;
                    if (realizable(nd)) {
                        verdict = {ClassicalVerdict::Kind::Classical, unwind(nodes, ni), {}, visited};
                        found = true;
                        break;
                    }
                    next_layer.push_back(ni);
                }
                if (found) break;
            }
            if (visited > budget_.max_states) break;
            layer = std::move(next_layer);
        }
        if (!found) verdict = {ClassicalVerdict::Kind::Unknown, {}, {}, visited};
    }
    if (classical_cache_.size() < kCacheCap) classical_cache_.emplace(key, verdict);
    return verdict;
}

}  // namespace pdg
