#pragma once

// The triangular grid G^N: N centered rows of the square lattice with
// 3,5,...,2N+1 vertices, plus the distinguished boundary families.
//
// Coordinates: (a,h) with h the height above the bottom row (h=0..N-1) and
// a the absolute column; row h spans a in [h, 2N-h]. A vertex is odd
// (circle) iff a+h is even; leftmost vertices are odd. Special vertices,
// numbered left to right:
//   B_i = (2i-1, 0)      even vertices of the bottom row, i=1..N
//   L_i = (i-1, i-1)     leftmost vertex of each row
//   R_i = (N+i, N-i)     rightmost vertex of each row

#include <array>
#include <bitset>
#include <cassert>
#include <stdexcept>
#include <vector>

namespace tfpl {

constexpr int kMaxGridN = 8;
constexpr int kMaxEdges = 2 * kMaxGridN * kMaxGridN + kMaxGridN;  // 2N^2+N-1 edges
using EdgeSet = std::bitset<kMaxEdges>;

enum Dir : int { DIR_U = 0, DIR_R = 1, DIR_D = 2, DIR_L = 3 };

inline Dir opposite(Dir d) { return Dir((int(d) + 2) % 4); }

struct GridEdge {
    int va, vb;       // vertex ids, va < vb
    Dir dir_ab;       // direction of the step va -> vb
};

class Grid {
  public:
    explicit Grid(int n);

    int n() const { return n_; }
    int vertex_count() const { return int(pos_.size()); }
    int edge_count() const { return int(edges_.size()); }

    bool in_grid(int a, int h) const {
        return h >= 0 && h < n_ && a >= h && a <= 2 * n_ - h;
    }
    int vid(int a, int h) const {
        assert(in_grid(a, h));
        return vid_[h][a];
    }
    std::pair<int, int> pos(int v) const { return pos_[v]; }
    bool odd_vertex(int v) const { return ((pos_[v].first + pos_[v].second) & 1) == 0; }

    const std::vector<GridEdge>& edges() const { return edges_; }
    const GridEdge& edge(int e) const { return edges_[e]; }
    const std::vector<int>& incident(int v) const { return incident_[v]; }
    int other(int e, int v) const {
        return edges_[e].va == v ? edges_[e].vb : edges_[e].va;
    }
    Dir dir_from(int e, int v) const {
        return edges_[e].va == v ? edges_[e].dir_ab : opposite(edges_[e].dir_ab);
    }

    // 1-based accessors for the special families.
    int B(int i) const { return vid(2 * i - 1, 0); }
    int L(int i) const { return vid(i - 1, i - 1); }
    int R(int i) const { return vid(n_ + i, n_ - i); }
    bool is_B(int v, int* i = nullptr) const;
    bool is_L(int v, int* i = nullptr) const;
    bool is_R(int v, int* i = nullptr) const;

    // Vertices ordered along NW-SE diagonals (by a+h, then a).
    const std::vector<int>& diagonal_order() const { return diag_order_; }

  private:
    int n_;
    std::vector<std::pair<int, int>> pos_;
    std::vector<std::vector<int>> vid_;
    std::vector<GridEdge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> diag_order_;
};

// Shared grid instances (immutable after construction).
const Grid& grid_of_size(int n);

}  // namespace tfpl
