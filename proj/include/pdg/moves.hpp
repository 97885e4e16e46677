#pragma once

#include <string>
#include <vector>

#include "pdg/diagram.hpp"

namespace pdg {

// One Gauss-diagram Reidemeister move, parametrized so it can be replayed.
struct Move {
    enum class Kind : uint8_t { R1Remove, R1Add, R2Remove, R2Add, R3 };
    Kind kind;
    // R1Remove: s1 = slot of the isolated chord's first endpoint.
    // R1Add: s1 = insertion gap, over_first/w1 pick the kink.
    // R2Remove: s1 = gap whose two slots hold the cancelling pair.
    // R2Add: s1 <= s2 insertion gaps, aligned picks the chord shape,
    //        over_first chooses which strand lies over, w1 the first writhe.
    // R3: s1 < s2 < s3 are the gaps of the three strand segments.
    int s1 = 0, s2 = 0, s3 = 0;
    bool aligned = true;
    bool over_first = true;
    int w1 = +1;

    std::string describe() const;
};

// Applies a move; throws diagram_error when the move does not fit.
PseudoDiagram apply_move(const PseudoDiagram& d, const Move& mv);

// All diagrams one move away. Removals always; additions only while the
// result stays within max_crossings. Requires a fully classical diagram.
std::vector<std::pair<Move, PseudoDiagram>> neighbors(const PseudoDiagram& d, int max_crossings);

// Removal-only neighbor list (R1/R2 removals), used by greedy reduction.
std::vector<std::pair<Move, PseudoDiagram>> removal_neighbors(const PseudoDiagram& d);

}  // namespace pdg
