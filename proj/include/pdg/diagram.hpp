#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pdg {

// Thrown by parse_gauss and by operations whose preconditions fail.
class diagram_error : public std::runtime_error {
public:
    explicit diagram_error(const std::string& what) : std::runtime_error(what) {}
};

enum class StateKind : uint8_t { Pre, Classical };

// State of one chord. For Pre, `sign` is the basepoint-relative flat sign:
// the writhe the crossing would get if its first-visited endpoint were the
// overpass. For Classical, `sign` is the writhe and `over_slot` is the
// endpoint slot at which the strand passes over.
struct ChordState {
    StateKind kind = StateKind::Pre;
    int sign = +1;
    int over_slot = -1;

    static ChordState pre(int flat_sign) {
        if (flat_sign != 1 && flat_sign != -1)
            throw diagram_error("flat sign must be +1 or -1");
        return ChordState{StateKind::Pre, flat_sign, -1};
    }
    static ChordState classical(int over_slot, int writhe) {
        if (writhe != 1 && writhe != -1)
            throw diagram_error("writhe must be +1 or -1");
        return ChordState{StateKind::Classical, writhe, over_slot};
    }
    bool operator==(const ChordState&) const = default;
};

// One chord of the diagram: endpoint slots a < b plus its state.
struct Chord {
    int a = 0;
    int b = 0;
    ChordState state;
    bool operator==(const Chord&) const = default;
};

// How a precrossing may be resolved.
enum class Resolution : uint8_t { OverFirst, OverSecond, Virtual };

// Decorated chord diagram of a pseudodiagram. Slots 0..2n-1 run
// counterclockwise from the basepoint (slot 0). Chord ids follow
// first-visit order, so chords_[i].a is increasing in i.
class PseudoDiagram {
public:
    PseudoDiagram() = default;

    // Builds from endpoint pairs and states; normalizes chord order to
    // first-visit order and validates the perfect matching.
    PseudoDiagram(std::vector<Chord> chords);

    int n() const { return static_cast<int>(chords_.size()); }
    int slots() const { return 2 * n(); }
    const std::vector<Chord>& chords() const { return chords_; }
    const Chord& chord(int id) const;
    // Chord id owning a slot.
    int chord_at(int slot) const;
    // The other endpoint of the chord at `slot`.
    int partner(int slot) const;

    bool is_shadow() const;      // all chords Pre
    bool is_classical() const;   // all chords Classical
    int precrossing_count() const;
    // Sum of writhes over classical chords.
    int writhe() const;

    // Flat handedness of a chord: equals the flat sign for precrossings and
    // the sign the crossing contributes when its first-visited endpoint is
    // read as the overpass for classical ones.
    int flat_handedness(int id) const;

    // True iff the endpoints of the two chords interleave on the circle.
    bool chords_cross(int c, int d) const;

    PseudoDiagram rotate_basepoint(int k) const;
    PseudoDiagram mirror() const;
    PseudoDiagram reverse() const;

    // Classical resolution or (uber mode only) virtualization of one
    // precrossing. Virtualization deletes the chord and compacts slots.
    PseudoDiagram resolve(int id, Resolution choice, bool uber = false) const;

    // All 2^p classical completions have each precrossing resolved
    // OverFirst (bit 0) or OverSecond (bit 1); bit i of `mask` drives the
    // i-th precrossing in chord-id order.
    PseudoDiagram complete(uint64_t mask) const;
    std::vector<int> precrossing_ids() const;

    std::string serialize() const;
    // Lexicographically least serialization over all 4n symmetries
    // (2n rotations, with and without reversal).
    std::string canonical_code() const;

    bool operator==(const PseudoDiagram&) const = default;

private:
    std::vector<Chord> chords_;
    std::vector<int> slot_chord_;

    void reindex();
};

PseudoDiagram parse_gauss(std::string_view text);

// Adjacency view of chord crossings (a circle graph).
struct InterlacementGraph {
    int n = 0;
    std::vector<std::vector<char>> adj;   // n x n, symmetric, no loops
    std::vector<int> degree;

    bool edge(int c, int d) const { return adj[c][d] != 0; }
};

InterlacementGraph interlacement_graph(const PseudoDiagram& d);

// True when every chord crosses an even number of chords.
bool evenly_intersticed(const PseudoDiagram& d);

// Forgets all crossing information, keeping the flat handedness.
PseudoDiagram shadow_of(const PseudoDiagram& d);

}  // namespace pdg
