#pragma once

#include <map>
#include <set>

#include "pdg/diagram.hpp"
#include "pdg/poly.hpp"

namespace pdg {

// Second-degree Vassiliev invariant from the single two-arrow configuration:
// sum of w_x * w_y over ordered chord pairs (x, y) whose endpoints appear as
// x_head, y_tail, x_tail, y_head on one counterclockwise circuit from the
// basepoint. Arrows run from the over- to the under-preimage. Requires a
// fully classical diagram; basepoint-independent on realizable ones.
long v2(const PseudoDiagram& d);

// Chords of odd interlacement degree. Works on any pseudodiagram.
std::set<int> odd_set(const PseudoDiagram& d);

// Sum of writhes over the odd set; zero on every classical diagram.
long j_invariant(const PseudoDiagram& d);

// Intersection index of chord c: the flat linking number of the two circle
// components obtained by the oriented smoothing at c. Signs come from flat
// handedness; the component containing the lowest non-endpoint slot counts
// as L1. Only |ind| is basepoint-independent.
long ind(const PseudoDiagram& d, int c);

// Chords grouped by |ind|; key 0 collects the vanishing ones.
std::map<long, std::vector<int>> c_m_partition(const PseudoDiagram& d);

// p_t = sum over crossings of w_c (t^|ind(c)| - 1); zero for every
// classically realizable diagram. Requires fully classical input.
IntPolynomial intersection_index_polynomial(const PseudoDiagram& d);

// Cycles of the oriented smoothing of every chord.
int seifert_count(const PseudoDiagram& d);

// Twice the diagram genus: n - s + 1. Even (integer genus) on realizable
// classical diagrams.
int diagram_genus2x(const PseudoDiagram& d);

inline constexpr int kDefaultBracketBudget = 20;

// Writhe-normalized Kauffman bracket via the 2^n state sum; loop counts by
// union-find over arc ends. Equals 1 on every diagram of the unknot.
// Throws diagram_error beyond the state budget rather than approximating.
LaurentPolynomial f_polynomial(const PseudoDiagram& d, int max_n = kDefaultBracketBudget);

// Serial single-loop reference for the state sum; kept for tests and the
// benchmark, compared term-for-term against the OpenMP version.
LaurentPolynomial f_polynomial_serial(const PseudoDiagram& d, int max_n = kDefaultBracketBudget);

}  // namespace pdg
