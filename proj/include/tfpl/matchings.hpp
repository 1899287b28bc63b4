#pragma once

// The odd/even subgraphs of G^N, their perfect matchings, direction
// censuses, the split/merge bijection with oriented TFPLs, the encoding as
// nonintersecting lattice paths, and determinant counting.

#include <vector>

#include "tfpl/tfpl_core.hpp"

namespace tfpl {

enum class Side { Odd, Even };

// G^N_o(u,w): G^N minus all R_i, minus B_i with w_i=0, minus L_i with u_i=0.
// G^N_e(v,w): G^N minus all L_i, minus B_i with w_i=1, minus R_i with v_i=1.
struct MatchGraph {
    const Grid* g = nullptr;
    Side side = Side::Odd;
    Word first, w;               // (u,w) for odd, (v,w) for even
    std::vector<char> present;   // per vertex id
    int present_odd = 0, present_even = 0;
};

MatchGraph odd_graph(const Grid& g, const Word& u, const Word& w);
MatchGraph even_graph(const Grid& g, const Word& v, const Word& w);

struct PerfectMatching {
    const Grid* g = nullptr;
    Side side = Side::Odd;
    EdgeSet edges;

    bool operator==(const PerfectMatching& o) const { return edges == o.edges; }
};

// Complete, duplicate-free list of perfect matchings, with the given edges
// excluded. Vertices are processed along NW-SE diagonals left to right.
std::vector<EdgeSet> enumerate_matchings(const MatchGraph& mg, const EdgeSet& banned = {});

inline std::vector<PerfectMatching> enumerate_matchings_pm(const MatchGraph& mg) {
    std::vector<PerfectMatching> out;
    for (auto& e : enumerate_matchings(mg)) out.push_back({mg.g, mg.side, e});
    return out;
}

// Counts of matching edges by direction: odd side orients odd -> even,
// even side orients even -> odd.
struct DirectionCensus {
    int up = 0, down = 0, left = 0, right = 0;
    int total() const { return up + down + left + right; }
};
DirectionCensus direction_census(const PerfectMatching& m);

// f -> (M_o, M_e); the inverse merge rejects non-disjoint pairs.
std::pair<PerfectMatching, PerfectMatching> split_matchings(const OrientedTFPL& f);
OrientedTFPL merge_matchings(const PerfectMatching& mo, const PerfectMatching& me);

// ---------------------------------------------------------------------------
// Nonintersecting lattice paths

// Blue paths run from D_k=(2 i_k - 2, 0) (w_{i_k}=0) up-left to
// E_k=(j_k-1, j_k-1) (u_{j_k}=0) with steps (-1,1),(-1,-1),(-2,0); red paths
// run from (2 i_k - 1, 0) (w_{i_k}=1) up-right to (N-1+j_k, N-j_k)
// (v_{j_k}=1) with steps (1,1),(1,-1),(2,0). Never below the x-axis.
enum class StepKind { Up, Down, Horizontal };

struct LatticePath {
    std::pair<int, int> start;
    std::vector<StepKind> steps;

    std::pair<int, int> point(size_t k, bool blue) const;  // vertex after k steps
    std::pair<int, int> end(bool blue) const { return point(steps.size(), blue); }
    std::string step_string() const;  // over {U,D,H}
};

struct PathFamily {
    bool blue = true;
    int n = 0;  // grid size N
    std::vector<LatticePath> paths;

    bool operator==(const PathFamily& o) const;
};

PathFamily matching_to_paths(const PerfectMatching& m);
PerfectMatching paths_to_matching(const PathFamily& f, const Word& boundary_w);

// ---------------------------------------------------------------------------
// Counting

// Paths from (0,0) to (2n+m, m) with steps (1,1),(1,-1),(2,0) staying on or
// above the x-axis:
//   sum_p [ C(2n-2p+m, n-p) - C(2n-2p+m, n-p-1) ] * C(2n+m-p, p).
Int schroeder_prefix_count(int n, int m);

// Test oracle: exhaustive path enumeration.
Int schroeder_prefix_count_enumerate(int n, int m);

// Lindstrom-Gessel-Viennot determinant for the number of perfect matchings
// of G^N_o(u,w) (side Odd) or G^N_e(v,w) (side Even).
Int count_matchings_det(Side side, const Word& first, const Word& w);

// The product of the two determinants; an upper bound for the oriented
// count only, since it ignores the disjointness constraint.
Int disjoint_pair_upper_bound(const Word& u, const Word& v, const Word& w);

}  // namespace tfpl
