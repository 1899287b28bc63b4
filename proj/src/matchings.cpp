#include "tfpl/matchings.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tfpl {

static void require_length(const Word& a, const Word& b, int n) {
    if (int(a.size()) != n || int(b.size()) != n)
        throw std::invalid_argument("word length does not match grid size");
}

MatchGraph odd_graph(const Grid& g, const Word& u, const Word& w) {
    require_word(u);
    require_word(w);
    require_length(u, w, g.n());
    MatchGraph mg{&g, Side::Odd, u, w, std::vector<char>(g.vertex_count(), 1), 0, 0};
    for (int i = 1; i <= g.n(); ++i) {
        mg.present[g.R(i)] = 0;
        if (w[i - 1] == '0') mg.present[g.B(i)] = 0;
        if (u[i - 1] == '0') mg.present[g.L(i)] = 0;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mg.present[v]) (g.odd_vertex(v) ? mg.present_odd : mg.present_even)++;
    return mg;
}

MatchGraph even_graph(const Grid& g, const Word& v, const Word& w) {
    require_word(v);
    require_word(w);
    require_length(v, w, g.n());
    MatchGraph mg{&g, Side::Even, v, w, std::vector<char>(g.vertex_count(), 1), 0, 0};
    for (int i = 1; i <= g.n(); ++i) {
        mg.present[g.L(i)] = 0;
        if (w[i - 1] == '1') mg.present[g.B(i)] = 0;
        if (v[i - 1] == '1') mg.present[g.R(i)] = 0;
    }
    for (int x = 0; x < g.vertex_count(); ++x)
        if (mg.present[x]) (g.odd_vertex(x) ? mg.present_odd : mg.present_even)++;
    return mg;
}

namespace {

struct MatchSearch {
    const Grid* g;
    const MatchGraph* mg;
    const EdgeSet* banned;
    std::vector<int> scan;  // present vertices in diagonal order
    std::vector<char> covered;
    EdgeSet current;
    std::vector<EdgeSet>* out;

    void run(size_t k) {
        while (k < scan.size() && covered[scan[k]]) ++k;
        if (k == scan.size()) {
            out->push_back(current);
            return;
        }
        int v = scan[k];
        for (int e : g->incident(v)) {
            if ((*banned)[e]) continue;
            int z = g->other(e, v);
            if (!mg->present[z] || covered[z]) continue;
            covered[v] = covered[z] = 1;
            current[e] = 1;
            run(k + 1);
            current[e] = 0;
            covered[v] = covered[z] = 0;
        }
    }
};

}  // namespace

std::vector<EdgeSet> enumerate_matchings(const MatchGraph& mg, const EdgeSet& banned) {
    std::vector<EdgeSet> out;
    if (mg.present_odd != mg.present_even) return out;  // bipartite parity
    MatchSearch s;
    s.g = mg.g;
    s.mg = &mg;
    s.banned = &banned;
    for (int v : mg.g->diagonal_order())
        if (mg.present[v]) s.scan.push_back(v);
    s.covered.assign(mg.g->vertex_count(), 0);
    s.out = &out;
    s.run(0);
    return out;
}

DirectionCensus direction_census(const PerfectMatching& m) {
    const Grid& g = *m.g;
    DirectionCensus c;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!m.edges[e]) continue;
        int va = g.edge(e).va;
        // orient from the odd vertex (odd side) resp. the even vertex.
        bool from_va = g.odd_vertex(va) == (m.side == Side::Odd);
        Dir d = from_va ? g.edge(e).dir_ab : opposite(g.edge(e).dir_ab);
        switch (d) {
            case DIR_U: ++c.up; break;
            case DIR_D: ++c.down; break;
            case DIR_L: ++c.left; break;
            case DIR_R: ++c.right; break;
        }
    }
    return c;
}

std::pair<PerfectMatching, PerfectMatching> split_matchings(const OrientedTFPL& f) {
    return {PerfectMatching{f.g, Side::Odd, f.mo}, PerfectMatching{f.g, Side::Even, f.me}};
}

OrientedTFPL merge_matchings(const PerfectMatching& mo, const PerfectMatching& me) {
    if (mo.side != Side::Odd || me.side != Side::Even || mo.g != me.g)
        throw std::invalid_argument("merge_matchings: sides/grids do not match");
    if ((mo.edges & me.edges).any())
        throw std::invalid_argument("merge_matchings: matchings share an edge");
    OrientedTFPL f{mo.g, mo.edges, me.edges};
    boundary_of(f);  // validates degree structure
    return f;
}

// ---------------------------------------------------------------------------
// Lattice paths

std::pair<int, int> LatticePath::point(size_t k, bool blue) const {
    auto [x, y] = start;
    int sx = blue ? -1 : 1;
    for (size_t i = 0; i < k; ++i) {
        switch (steps[i]) {
            case StepKind::Up: x += sx; y += 1; break;
            case StepKind::Down: x += sx; y -= 1; break;
            case StepKind::Horizontal: x += 2 * sx; break;
        }
    }
    return {x, y};
}

std::string LatticePath::step_string() const {
    std::string s;
    for (StepKind k : steps)
        s += (k == StepKind::Up ? 'U' : k == StepKind::Down ? 'D' : 'H');
    return s;
}

bool PathFamily::operator==(const PathFamily& o) const {
    if (blue != o.blue || n != o.n || paths.size() != o.paths.size()) return false;
    for (size_t i = 0; i < paths.size(); ++i)
        if (paths[i].start != o.paths[i].start || paths[i].steps != o.paths[i].steps)
            return false;
    return true;
}

PathFamily matching_to_paths(const PerfectMatching& m) {
    const Grid& g = *m.g;
    int n = g.n();
    bool blue = m.side == Side::Odd;
    // step out of each path vertex, keyed by the step's starting point
    std::map<std::pair<int, int>, std::pair<StepKind, std::pair<int, int>>> step_at;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!m.edges[e]) continue;
        int odd = g.odd_vertex(g.edge(e).va) ? g.edge(e).va : g.edge(e).vb;
        auto [a, h] = g.pos(odd);
        if (blue) {
            // oriented odd -> even; U/D/L give blue steps starting at the
            // blue point (a,h) right of the odd vertex
            switch (g.dir_from(e, odd)) {
                case DIR_U: step_at[{a, h}] = {StepKind::Up, {a - 1, h + 1}}; break;
                case DIR_D: step_at[{a, h}] = {StepKind::Down, {a - 1, h - 1}}; break;
                case DIR_L: step_at[{a, h}] = {StepKind::Horizontal, {a - 2, h}}; break;
                case DIR_R: break;
            }
        } else {
            // oriented even -> odd; steps start at the red point (a-1,h)
            // left of the odd vertex
            switch (g.dir_from(e, g.other(e, odd))) {
                case DIR_D: step_at[{a - 1, h}] = {StepKind::Up, {a, h + 1}}; break;
                case DIR_U: step_at[{a - 1, h}] = {StepKind::Down, {a, h - 1}}; break;
                case DIR_L: step_at[{a - 1, h}] = {StepKind::Horizontal, {a + 1, h}}; break;
                case DIR_R: break;
            }
        }
    }
    PathFamily fam;
    fam.blue = blue;
    fam.n = n;
    for (int i = 1; i <= n; ++i) {
        // paths start where B_i was removed from the graph, i.e. where B_i
        // carries no matching edge
        std::pair<int, int> s = blue ? std::make_pair(2 * i - 2, 0) : std::make_pair(2 * i - 1, 0);
        bool b_matched = false;
        for (int e : g.incident(g.B(i)))
            if (m.edges[e]) b_matched = true;
        if (b_matched) continue;
        LatticePath p;
        p.start = s;
        auto cur = s;
        while (true) {
            auto it = step_at.find(cur);
            if (it == step_at.end()) break;
            p.steps.push_back(it->second.first);
            cur = it->second.second;
        }
        fam.paths.push_back(std::move(p));
    }
    return fam;
}

PerfectMatching paths_to_matching(const PathFamily& fam, const Word& boundary_w) {
    const Grid& g = grid_of_size(fam.n);
    bool blue = fam.blue;
    // words defining the graph, reconstructed from starts/ends
    Word w(fam.n, blue ? '1' : '0');
    Word first(fam.n, blue ? '1' : '0');
    for (const LatticePath& p : fam.paths) {
        auto [sx, sy] = p.start;
        if (sy != 0) throw std::invalid_argument("path does not start on the bottom");
        if (blue) {
            if (sx % 2 != 0) throw std::invalid_argument("blue start parity");
            w[sx / 2] = '0';
        } else {
            if (sx % 2 != 1) throw std::invalid_argument("red start parity");
            w[(sx - 1) / 2] = '1';
        }
        auto [ex, ey] = p.end(blue);
        if (blue) {
            if (ex != ey || ex < 0 || ex >= fam.n)
                throw std::invalid_argument("blue path must end on the left boundary");
            first[ex] = '0';
        } else {
            int j = fam.n - ey;
            if (ex != fam.n - 1 + j || j < 1 || j > fam.n)
                throw std::invalid_argument("red path must end on the right boundary");
            first[j - 1] = '1';
        }
    }
    if (!boundary_w.empty() && boundary_w != w)
        throw std::invalid_argument("path family bottom word mismatch");
    MatchGraph mg = blue ? odd_graph(g, first, w) : even_graph(g, first, w);

    PerfectMatching m{&g, blue ? Side::Odd : Side::Even, {}};
    std::vector<char> covered(g.vertex_count(), 0);
    auto add = [&](int a1, int h1, int a2, int h2) {
        if (!g.in_grid(a1, h1) || !g.in_grid(a2, h2))
            throw std::invalid_argument("step leaves the grid");
        int x = g.vid(a1, h1), y = g.vid(a2, h2);
        int hit = -1;
        for (int e : g.incident(x))
            if (g.other(e, x) == y) hit = e;
        if (hit < 0) throw std::invalid_argument("step does not follow a grid edge");
        if (!mg.present[x] || !mg.present[y] || covered[x] || covered[y])
            throw std::invalid_argument("step covers a removed or doubly matched vertex");
        m.edges[hit] = 1;
        covered[x] = covered[y] = 1;
    };
    for (const LatticePath& p : fam.paths) {
        auto cur = p.start;
        for (size_t k = 0; k < p.steps.size(); ++k) {
            auto [a, h] = cur;
            if (blue) {
                switch (p.steps[k]) {  // odd vertex at (a,h)
                    case StepKind::Up: add(a, h, a, h + 1); break;
                    case StepKind::Down: add(a, h, a, h - 1); break;
                    case StepKind::Horizontal: add(a, h, a - 1, h); break;
                }
            } else {
                switch (p.steps[k]) {  // odd vertex at (a+1,h)
                    case StepKind::Up: add(a + 1, h, a + 1, h + 1); break;
                    case StepKind::Down: add(a + 1, h, a + 1, h - 1); break;
                    case StepKind::Horizontal: add(a + 1, h, a + 2, h); break;
                }
            }
            cur = p.point(k + 1, blue);
        }
    }
    // remaining vertices pair off horizontally: odd matched to its right
    // neighbour (odd side) resp. to its left neighbour (even side)
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!mg.present[v] || covered[v] || !g.odd_vertex(v)) continue;
        auto [a, h] = g.pos(v);
        if (blue)
            add(a, h, a + 1, h);
        else
            add(a, h, a - 1, h);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mg.present[v] && !covered[v])
            throw std::invalid_argument("path family does not cover the graph");
    return m;
}

// ---------------------------------------------------------------------------
// Counting

Int schroeder_prefix_count(int n, int m) {
    if (n < 0 || m < 0) return 0;
    Int total = 0;
    for (int p = 0; p <= n; ++p) {
        Int ballot = binomial(2 * n - 2 * p + m, n - p) - binomial(2 * n - 2 * p + m, n - p - 1);
        total += ballot * binomial(2 * n + m - p, p);
    }
    return total;
}

Int schroeder_prefix_count_enumerate(int n, int m) {
    if (n < 0 || m < 0) return 0;
    int width = 2 * n + m;
    // count[x][y] = paths from (0,0) to (x,y)
    std::vector<std::vector<Int>> count(width + 1, std::vector<Int>(width + 1, 0));
    count[0][0] = 1;
    for (int x = 1; x <= width; ++x)
        for (int y = 0; y <= width; ++y) {
            Int c = 0;
            if (y > 0) c += count[x - 1][y - 1];
            if (y + 1 <= width) c += count[x - 1][y + 1];
            if (x >= 2) c += count[x - 2][y];
            count[x][y] = c;
        }
    return count[width][m];
}

Int count_matchings_det(Side side, const Word& first, const Word& w) {
    require_word(first);
    require_word(w);
    if (first.size() != w.size()) throw std::invalid_argument("length mismatch");
    int n = int(w.size());
    std::vector<int> I, J;
    if (side == Side::Odd) {
        if (zeros_of(first) != zeros_of(w))
            throw std::invalid_argument("count_matchings_det: |u|_0 != |w|_0");
        for (int i = 1; i <= n; ++i)
            if (w[i - 1] == '0') I.push_back(i);
        for (int j = 1; j <= n; ++j)
            if (first[j - 1] == '0') J.push_back(j);
    } else {
        if (ones_of(first) != ones_of(w))
            throw std::invalid_argument("count_matchings_det: |v|_1 != |w|_1");
        for (int i = 1; i <= n; ++i)
            if (w[i - 1] == '1') I.push_back(i);
        for (int j = 1; j <= n; ++j)
            if (first[j - 1] == '1') J.push_back(j);
    }
    int sz = int(I.size());
    std::vector<std::vector<Int>> a(sz, std::vector<Int>(sz));
    for (int k = 0; k < sz; ++k)
        for (int l = 0; l < sz; ++l)
            a[k][l] = side == Side::Odd ? schroeder_prefix_count(I[k] - J[l], J[l] - 1)
                                        : schroeder_prefix_count(J[l] - I[k], n - J[l]);
    return integer_determinant(std::move(a));
}

Int disjoint_pair_upper_bound(const Word& u, const Word& v, const Word& w) {
    return count_matchings_det(Side::Odd, u, w) * count_matchings_det(Side::Even, v, w);
}

}  // namespace tfpl
