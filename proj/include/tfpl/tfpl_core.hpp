#pragma once

// Plain and oriented TFPL configurations on G^N, their enumeration,
// boundary extraction, turn statistics, q-weights, and the vertical
// reflection.

#include <array>
#include <optional>
#include <vector>

#include "tfpl/algebra.hpp"
#include "tfpl/grid.hpp"
#include "tfpl/words.hpp"

namespace tfpl {

struct Boundary {
    Word u, v, w;
    bool operator==(const Boundary& o) const { return u == o.u && v == o.v && w == o.w; }
};

// An oriented TFPL is exactly a pair of edge-disjoint perfect matchings:
// mo on G^N_o(u,w) (edges oriented odd -> even) and me on G^N_e(v,w)
// (even -> odd). Every operation reads off this pair.
struct OrientedTFPL {
    const Grid* g = nullptr;
    EdgeSet mo, me;

    bool operator==(const OrientedTFPL& o) const { return mo == o.mo && me == o.me; }
    bool operator<(const OrientedTFPL& o) const;  // canonical configuration order
};

struct PlainTFPL {
    const Grid* g = nullptr;
    EdgeSet edges;

    bool operator==(const PlainTFPL& o) const { return edges == o.edges; }
    bool operator<(const PlainTFPL& o) const;
};

// ---------------------------------------------------------------------------
// Turn statistics

// Counts of the eight perpendicular turn types, indexed by in*4+out.
struct TurnCensus {
    std::array<int, 16> turns{};        // all vertices
    std::array<int, 16> turns_odd{};    // turns at odd vertices
    std::array<int, 16> turns_even{};   // turns at even vertices
    int rl = 0;                          // bottom paths oriented right to left
    int n_cw = 0, n_ccw = 0;             // closed paths by orientation

    int x(Dir in, Dir out) const { return turns[int(in) * 4 + int(out)]; }
    int x_odd(Dir in, Dir out) const { return turns_odd[int(in) * 4 + int(out)]; }
    int x_even(Dir in, Dir out) const { return turns_even[int(in) * 4 + int(out)]; }
};

// Per-path turn data, for the turning-number identities.
struct PathTurns {
    bool closed = false;
    Dir first = DIR_U, last = DIR_U;  // stub steps included for open paths
    std::array<int, 16> turns{};
    bool clockwise = false;  // meaningful for closed paths
    int x(Dir in, Dir out) const { return turns[int(in) * 4 + int(out)]; }
};

struct TurnReport {
    TurnCensus census;
    std::vector<PathTurns> paths;
};

// External stub edges are part of every path: open paths begin with an r or
// u step and end with an r or d step.
TurnReport turn_census(const OrientedTFPL& f);

// Weight exponent t_ccw(f) - t_cw(f) for t_cw in {dl,lu}, t_ccw in {ld,ul}.
int weight_exponent(const TurnCensus& c, Dir cw_in, Dir cw_out, Dir ccw_in, Dir ccw_out);
int weight_exponent(const OrientedTFPL& f);  // default choice (dl, ld)
LaurentPoly weight(const OrientedTFPL& f);   // q^exponent

// ---------------------------------------------------------------------------
// Boundaries

Boundary boundary_of(const OrientedTFPL& f);

// Plain boundary: u,v from degrees, w from global path connectivity,
// plus the extended link pattern of the bottom endpoints.
struct PlainBoundary {
    Boundary b;
    ExtendedLinkPattern pattern;
};
PlainBoundary plain_boundary_of(const PlainTFPL& f);

// The directed extended link pattern of an oriented TFPL.
DirectedExtendedLinkPattern directed_pattern_of(const OrientedTFPL& f);

// ---------------------------------------------------------------------------
// Enumeration

// All oriented TFPLs with boundary (u,v;w), via the disjoint-matchings
// decomposition; sorted canonically. Empty unless contents match.
std::vector<OrientedTFPL> enumerate_oriented(const Word& u, const Word& v, const Word& w);

// All plain TFPLs with boundary (u,v;w), by direct subgraph backtracking
// with the global path-connectivity filter; independent of the oriented
// search path.
std::vector<PlainTFPL> enumerate_plain(const Word& u, const Word& v, const Word& w);

// Plain TFPLs with the given (u,v), grouped by bottom word w.
std::vector<std::pair<Word, std::vector<PlainTFPL>>> enumerate_plain_by_w(const Word& u,
                                                                          const Word& v);

// ---------------------------------------------------------------------------
// Conversions

PlainTFPL underlying(const OrientedTFPL& f);

// The injection T -> T_oriented: closed paths clockwise, bottom-to-bottom
// paths left to right. Preserves the boundary triple.
OrientedTFPL canonical_orient(const PlainTFPL& f);

// Vertical reflection with reorientation: maps boundary (u,v;w) to
// (v*,u*;w*). Involution.
OrientedTFPL vertical_reflect(const OrientedTFPL& f);

// ---------------------------------------------------------------------------
// Weighted counts

// Sum of q^{weight exponent} over oriented TFPLs with boundary (u,v;w);
// restrict_rl0 keeps only configurations whose bottom paths all go left to
// right (the set T-bar).
LaurentPoly weighted_count(const Word& u, const Word& v, const Word& w, bool restrict_rl0);

inline Int oriented_count(const Word& u, const Word& v, const Word& w) {
    return Int(enumerate_oriented(u, v, w).size());
}

}  // namespace tfpl
