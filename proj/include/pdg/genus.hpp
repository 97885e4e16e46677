#pragma once

#include "pdg/diagram.hpp"

namespace pdg {

// Number of faces traced on the carrier surface when chord `id` crosses
// with handedness `assign>>id & 1 ? -1 : +1`. V = n vertices, E = 2n arcs.
int face_count(const PseudoDiagram& d, uint64_t assign);

// Genus of the cheapest carrier surface of this diagram: the 4-valent
// graph of the flat diagram is face-traced under every transversal crossing
// handedness, and the smallest (2 - V + E - F)/2 wins. States are ignored.
// Zero exactly when the chord diagram is realizable as a classical shadow.
int carrier_genus(const PseudoDiagram& d);

// carrier_genus(d) == 0, with the evenly-intersticed test as a cheap
// negative filter before the full sweep.
bool realizable(const PseudoDiagram& d);

}  // namespace pdg
