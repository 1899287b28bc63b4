#include "tfpl/grid.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace tfpl {

Grid::Grid(int n) : n_(n) {
    if (n < 1 || n > kMaxGridN) throw std::invalid_argument("grid size out of range");
    vid_.assign(n, std::vector<int>(2 * n + 1, -1));
    for (int h = 0; h < n; ++h)
        for (int a = h; a <= 2 * n - h; ++a) {
            vid_[h][a] = int(pos_.size());
            pos_.emplace_back(a, h);
        }
    incident_.assign(pos_.size(), {});
    auto add_edge = [&](int a1, int h1, int a2, int h2, Dir d) {
        GridEdge e{vid(a1, h1), vid(a2, h2), d};
        if (e.va > e.vb) {
            std::swap(e.va, e.vb);
            e.dir_ab = opposite(e.dir_ab);
        }
        incident_[e.va].push_back(int(edges_.size()));
        incident_[e.vb].push_back(int(edges_.size()));
        edges_.push_back(e);
    };
    for (int h = 0; h < n; ++h)
        for (int a = h; a < 2 * n - h; ++a) add_edge(a, h, a + 1, h, DIR_R);
    for (int h = 0; h + 1 < n; ++h)
        for (int a = h + 1; a <= 2 * n - h - 1; ++a) add_edge(a, h, a, h + 1, DIR_U);
    assert(edge_count() <= kMaxEdges);

    diag_order_.resize(pos_.size());
    for (size_t v = 0; v < pos_.size(); ++v) diag_order_[v] = int(v);
    std::sort(diag_order_.begin(), diag_order_.end(), [&](int x, int y) {
        auto [ax, hx] = pos_[x];
        auto [ay, hy] = pos_[y];
        if (ax + hx != ay + hy) return ax + hx < ay + hy;
        return ax < ay;
    });
}

bool Grid::is_B(int v, int* i) const {
    auto [a, h] = pos_[v];
    if (h != 0 || a % 2 != 1) return false;
    if (i) *i = (a + 1) / 2;
    return true;
}

bool Grid::is_L(int v, int* i) const {
    auto [a, h] = pos_[v];
    if (a != h) return false;
    if (i) *i = a + 1;
    return true;
}

bool Grid::is_R(int v, int* i) const {
    auto [a, h] = pos_[v];
    if (a != 2 * n_ - h) return false;
    if (i) *i = n_ - h;
    return true;
}

const Grid& grid_of_size(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Grid>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<Grid>(n);
    return *slot;
}

}  // namespace tfpl
