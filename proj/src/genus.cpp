#include "pdg/genus.hpp"

#include <array>

namespace pdg {

// Darts: arc k (slot k -> slot k+1) owns darts 2k (tail, leaving slot k)
// and 2k+1 (head, arriving at slot k+1 mod 2n). At the crossing of chord
// (a, b) the four incident darts are
//   in1 = head of arc a-1, out1 = tail of arc a,
//   in2 = head of arc b-1, out2 = tail of arc b,
// and the counterclockwise rotation is (in1, in2, out1, out2) for
// handedness +1, (in1, out2, out1, in2) for -1.
int face_count(const PseudoDiagram& d, uint64_t assign) {
    const int n = d.n();
    if (n == 0) return 1;
    const int m = 2 * n;
    const int darts = 2 * m;
    // rot[x] = next dart counterclockwise at the vertex of dart x
    static thread_local std::vector<int> rot;
    rot.assign(darts, -1);
    auto head = [m](int arc) { return 2 * ((arc % m + m) % m) + 1; };
    auto tail = [m](int arc) { return 2 * ((arc % m + m) % m); };
    for (int id = 0; id < n; ++id) {
        const Chord& c = d.chord(id);
        const int in1 = head(c.a - 1), out1 = tail(c.a);
        const int in2 = head(c.b - 1), out2 = tail(c.b);
        if (!(assign >> id & 1)) {
            rot[in1] = in2; rot[in2] = out1; rot[out1] = out2; rot[out2] = in1;
        } else {
            rot[in1] = out2; rot[out2] = out1; rot[out1] = in2; rot[in2] = in1;
        }
    }
    // faces are orbits of phi(x) = rot[alpha(x)], alpha swapping tail<->head
    static thread_local std::vector<char> seen;
    seen.assign(darts, 0);
    int faces = 0;
    for (int s = 0; s < darts; ++s) {
        if (seen[s]) continue;
        ++faces;
        int x = s;
        while (!seen[x]) {
            seen[x] = 1;
            x = rot[x ^ 1];
        }
    }
    return faces;
}

int carrier_genus(const PseudoDiagram& d) {
    const int n = d.n();
    if (n == 0) return 0;
    if (n > 62) throw diagram_error("carrier_genus: diagram too large");
    int best_faces = 0;
    const uint64_t total = uint64_t{1} << n;
    for (uint64_t assign = 0; assign < total; ++assign) {
        const int f = face_count(d, assign);
        if (f > best_faces) {
            best_faces = f;
            if (best_faces == n + 2) break;   // sphere reached
        }
    }
    return (2 - n + 2 * n - best_faces) / 2;
}

bool realizable(const PseudoDiagram& d) {
    if (!evenly_intersticed(d)) return false;
    return carrier_genus(d) == 0;
}

}  // namespace pdg
