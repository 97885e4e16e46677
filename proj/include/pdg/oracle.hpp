#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pdg/moves.hpp"
#include "pdg/poly.hpp"

namespace pdg {

struct OracleBudget {
    int extra_crossings = 2;         // BFS may grow a diagram to n + extra_crossings
    int max_crossings_override = 0;  // absolute cap instead, when positive
    long max_states = 200000;        // visited-state cap, checked per BFS layer
    int bracket_max_n = 16;          // certificate state sums stop above this

    int cap_for(int n) const {
        return max_crossings_override > 0 ? max_crossings_override : n + extra_crossings;
    }
};

struct Certificate {
    std::string invariant;   // "J", "p_t", "v2", "f"
    std::string value;
};

// Three-valued answer of the bounded triviality test.
struct Verdict {
    enum class Kind : uint8_t { Trivial, Nontrivial, Unknown };
    Kind kind = Kind::Unknown;
    std::vector<Move> trace;              // Trivial: replays to the 0-chord diagram
    std::optional<Certificate> cert;      // Nontrivial: recomputes to a nonzero value
    long states = 0;

    bool trivial() const { return kind == Kind::Trivial; }
    bool nontrivial() const { return kind == Kind::Nontrivial; }
    bool unknown() const { return kind == Kind::Unknown; }
    std::string to_string() const;
};

// Bounded classicality test.
struct ClassicalVerdict {
    enum class Kind : uint8_t { Classical, NonClassical, Unknown };
    Kind kind = Kind::Unknown;
    std::vector<Move> trace;              // Classical: leads to a genus-0 diagram
    std::optional<Certificate> cert;
    long states = 0;

    bool classical() const { return kind == Kind::Classical; }
    bool nonclassical() const { return kind == Kind::NonClassical; }
    bool unknown() const { return kind == Kind::Unknown; }
    std::string to_string() const;
};

// Resolves every precrossing as an overpass at its first visit from the
// given basepoint slot; classical chords are untouched. On a realizable
// shadow the result is a diagram of the unknot.
PseudoDiagram descending_resolution(const PseudoDiagram& p, int basepoint = 0);

class UnknotOracle {
public:
    UnknotOracle() = default;
    explicit UnknotOracle(OracleBudget budget) : budget_(budget) {}

    const OracleBudget& budget() const { return budget_; }

    // Certificates first (J, p_t, v2 on realizable diagrams, normalized
    // bracket), then breadth-first move search for the 0-chord diagram.
    Verdict is_unknot(const PseudoDiagram& d) const;

    // NonClassical by J or p_t; Classical by reaching a genus-0 diagram.
    ClassicalVerdict classicality(const PseudoDiagram& d) const;

    void clear_cache() const { cache_.clear(); classical_cache_.clear(); }

private:
    OracleBudget budget_;
    mutable std::unordered_map<std::string, Verdict> cache_;
    mutable std::unordered_map<std::string, ClassicalVerdict> classical_cache_;
};

// Replays a move trace from `start`; throws if some move does not apply.
PseudoDiagram replay_trace(const PseudoDiagram& start, const std::vector<Move>& trace);

}  // namespace pdg
