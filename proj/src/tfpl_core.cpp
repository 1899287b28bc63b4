#include "tfpl/tfpl_core.hpp"

#include <algorithm>
#include <map>

#include "tfpl/matchings.hpp"

namespace tfpl {

namespace {

int edgeset_cmp(const EdgeSet& a, const EdgeSet& b) {
    for (int i = 0; i < kMaxEdges; ++i)
        if (a[i] != b[i]) return a[i] ? 1 : -1;
    return 0;
}

bool covered_by(const Grid& g, int v, const EdgeSet& s) {
    for (int e : g.incident(v))
        if (s[e]) return true;
    return false;
}

}  // namespace

bool OrientedTFPL::operator<(const OrientedTFPL& o) const {
    int c = edgeset_cmp(mo, o.mo);
    if (c != 0) return c < 0;
    return edgeset_cmp(me, o.me) < 0;
}

bool PlainTFPL::operator<(const PlainTFPL& o) const { return edgeset_cmp(edges, o.edges) < 0; }

Boundary boundary_of(const OrientedTFPL& f) {
    const Grid& g = *f.g;
    int n = g.n();
    if ((f.mo & f.me).any()) throw std::invalid_argument("orientations share an edge");
    // degree structure: every internal vertex covered by both matchings,
    // L only by mo, R only by me, B by exactly one
    Boundary b;
    b.u.assign(n, '0');
    b.v.assign(n, '1');
    b.w.assign(n, '?');
    for (int v = 0; v < g.vertex_count(); ++v) {
        int in_mo = 0, in_me = 0;
        for (int e : g.incident(v)) {
            in_mo += f.mo[e];
            in_me += f.me[e];
        }
        int i;
        if (g.is_L(v, &i)) {
            if (in_me || in_mo > 1) throw std::invalid_argument("bad degree at L");
            if (in_mo) b.u[i - 1] = '1';
        } else if (g.is_R(v, &i)) {
            if (in_mo || in_me > 1) throw std::invalid_argument("bad degree at R");
            if (in_me) b.v[i - 1] = '0';
        } else if (g.is_B(v, &i)) {
            if (in_mo + in_me != 1) throw std::invalid_argument("bad degree at B");
            b.w[i - 1] = in_mo ? '1' : '0';
        } else {
            if (in_mo != 1 || in_me != 1) throw std::invalid_argument("bad internal degree");
        }
    }
    return b;
}

// ---------------------------------------------------------------------------
// Turn statistics

TurnReport turn_census(const OrientedTFPL& f) {
    const Grid& g = *f.g;
    int V = g.vertex_count();
    std::vector<int> out_to(V, -1), in_from(V, -1);
    std::vector<Dir> out_dir(V, DIR_U), in_dir(V, DIR_U);
    for (int e = 0; e < g.edge_count(); ++e) {
        bool mo = f.mo[e], me = f.me[e];
        if (!mo && !me) continue;
        int va = g.edge(e).va, vb = g.edge(e).vb;
        int from = (g.odd_vertex(va) == mo) ? va : vb;  // mo: odd->even, me: even->odd
        int to = g.other(e, from);
        out_to[from] = to;
        out_dir[from] = g.dir_from(e, from);
        in_from[to] = from;
        in_dir[to] = out_dir[from];
    }

    TurnReport rep;
    std::vector<char> visited(V, 0);
    auto record = [&](PathTurns& p, Dir in, Dir out, bool odd) {
        if (in == out) return;  // straight, not a turn
        int idx = int(in) * 4 + int(out);
        ++p.turns[idx];
        ++rep.census.turns[idx];
        ++(odd ? rep.census.turns_odd : rep.census.turns_even)[idx];
    };

    // open paths, stubs included: start with r (at L) or u (below B),
    // end with r (at R) or d (below B)
    for (int v = 0; v < V; ++v) {
        if (out_to[v] < 0 || in_from[v] >= 0) continue;
        PathTurns pt;
        int bi;
        pt.first = g.is_B(v, &bi) ? DIR_U : DIR_R;
        int start_b = g.is_B(v, &bi) ? bi : 0;
        Dir prev = pt.first;
        int cur = v;
        while (out_to[cur] >= 0) {
            record(pt, prev, out_dir[cur], g.odd_vertex(cur));
            prev = out_dir[cur];
            visited[cur] = 1;
            cur = out_to[cur];
        }
        visited[cur] = 1;
        int end_b;
        pt.last = g.is_B(cur, &end_b) ? DIR_D : DIR_R;
        record(pt, prev, pt.last, g.odd_vertex(cur));
        if (start_b && g.is_B(cur, &end_b) && end_b < start_b) ++rep.census.rl;
        rep.paths.push_back(pt);
    }
    // closed paths
    for (int v = 0; v < V; ++v) {
        if (visited[v] || out_to[v] < 0) continue;
        PathTurns pt;
        pt.closed = true;
        int cur = v;
        do {
            record(pt, in_dir[cur], out_dir[cur], g.odd_vertex(cur));
            visited[cur] = 1;
            cur = out_to[cur];
        } while (cur != v);
        pt.clockwise = pt.x(DIR_D, DIR_L) - pt.x(DIR_L, DIR_D) > 0;
        (pt.clockwise ? rep.census.n_cw : rep.census.n_ccw)++;
        rep.paths.push_back(pt);
    }
    return rep;
}

int weight_exponent(const TurnCensus& c, Dir cw_in, Dir cw_out, Dir ccw_in, Dir ccw_out) {
    return c.x(ccw_in, ccw_out) - c.x(cw_in, cw_out);
}

int weight_exponent(const OrientedTFPL& f) {
    TurnCensus c = turn_census(f).census;
    return weight_exponent(c, DIR_D, DIR_L, DIR_L, DIR_D);
}

LaurentPoly weight(const OrientedTFPL& f) { return LaurentPoly::q_power(weight_exponent(f)); }

// ---------------------------------------------------------------------------
// Patterns

DirectedExtendedLinkPattern directed_pattern_of(const OrientedTFPL& f) {
    const Grid& g = *f.g;
    int V = g.vertex_count();
    std::vector<int> out_to(V, -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!f.mo[e] && !f.me[e]) continue;
        int va = g.edge(e).va;
        int from = (g.odd_vertex(va) == bool(f.mo[e])) ? va : g.edge(e).vb;
        out_to[from] = g.other(e, from);
    }
    DirectedExtendedLinkPattern dp;
    dp.pattern.n = g.n();
    std::vector<std::pair<std::pair<int, int>, bool>> pairs;  // ((i,j), right_to_left)
    for (int i = 1; i <= g.n(); ++i) {
        int v = g.B(i);
        bool source = false;
        for (int e : g.incident(v))
            if (f.me[e]) source = true;  // out-edge at B_i means w_i = 0
        if (!source) continue;
        int cur = v;
        while (out_to[cur] >= 0) cur = out_to[cur];
        int j;
        if (g.is_B(cur, &j))
            pairs.push_back({{std::min(i, j), std::max(i, j)}, j < i});
        else if (g.is_R(cur, &j))
            dp.pattern.right.push_back(i);
        else
            throw std::invalid_argument("source path ends at a sink boundary");
    }
    // sinks at the bottom that are fed from L are left points
    for (int i = 1; i <= g.n(); ++i) {
        int v = g.B(i);
        bool sink = false;
        for (int e : g.incident(v))
            if (f.mo[e]) sink = true;
        if (!sink) continue;
        bool paired = false;
        for (auto& [pr, rl] : pairs)
            if (pr.first == i || pr.second == i) paired = true;
        if (!paired) dp.pattern.left.push_back(i);
    }
    std::sort(pairs.begin(), pairs.end());
    for (auto& [pr, rl] : pairs) {
        dp.pattern.pairs.push_back(pr);
        dp.right_to_left.push_back(rl);
    }
    return dp;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<OrientedTFPL> enumerate_oriented(const Word& u, const Word& v, const Word& w) {
    require_word(u);
    require_word(v);
    require_word(w);
    if (u.size() != v.size() || u.size() != w.size())
        throw std::invalid_argument("boundary words must have equal length");
    std::vector<OrientedTFPL> out;
    if (u.empty()) return out;
    if (zeros_of(u) != zeros_of(w) || zeros_of(v) != zeros_of(w)) return out;
    const Grid& g = grid_of_size(int(u.size()));
    MatchGraph go = odd_graph(g, u, w);
    MatchGraph ge = even_graph(g, v, w);
    std::vector<EdgeSet> mos = enumerate_matchings(go);
    if (mos.empty()) return out;
    std::vector<EdgeSet> mes = enumerate_matchings(ge);
    if (mes.empty()) return out;
    if (Int(mos.size()) * Int(mes.size()) <= 1 << 22) {
        for (const EdgeSet& a : mos)
            for (const EdgeSet& b : mes)
                if ((a & b).none()) out.push_back({&g, a, b});
    } else {
        // output-sensitive: re-run the even search with mo's edges excluded
        for (const EdgeSet& a : mos)
            for (const EdgeSet& b : enumerate_matchings(ge, a)) out.push_back({&g, a, b});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Direct subgraph backtracking for plain TFPLs with (u,v) fixed; yields
// every global-condition-respecting configuration keyed by its bottom word.
struct PlainSearch {
    const Grid* g;
    Word u, v;
    std::vector<int> target;     // required degree per vertex
    std::vector<int> fixed_deg;  // degree from decided edges
    std::vector<int> scan;       // vertices by (h, a)
    std::vector<std::vector<int>> fwd;  // edges to later vertices
    EdgeSet chosen;
    std::map<Word, std::vector<PlainTFPL>>* sink;

    void init(const Grid& grid, const Word& uu, const Word& vv) {
        g = &grid;
        u = uu;
        v = vv;
        int V = grid.vertex_count();
        target.assign(V, 2);
        for (int i = 1; i <= grid.n(); ++i) {
            target[grid.L(i)] = u[i - 1] == '1' ? 1 : 0;
            target[grid.R(i)] = v[i - 1] == '0' ? 1 : 0;
            target[grid.B(i)] = 1;
        }
        fixed_deg.assign(V, 0);
        for (int x = 0; x < V; ++x) scan.push_back(x);
        std::sort(scan.begin(), scan.end(), [&](int x, int y) {
            auto [ax, hx] = grid.pos(x);
            auto [ay, hy] = grid.pos(y);
            if (hx != hy) return hx < hy;
            return ax < ay;
        });
        std::vector<int> rank(V);
        for (int k = 0; k < V; ++k) rank[scan[k]] = k;
        fwd.assign(V, {});
        for (int x = 0; x < V; ++x)
            for (int e : grid.incident(x))
                if (rank[grid.other(e, x)] > rank[x]) fwd[x].push_back(e);
    }

    bool feasible(int z) const {
        return fixed_deg[z] <= target[z] &&
               target[z] - fixed_deg[z] <= int(fwd[z].size());
    }

    void run(size_t k) {
        if (k == scan.size()) {
            emit();
            return;
        }
        int vx = scan[k];
        int need = target[vx] - fixed_deg[vx];
        const auto& fe = fwd[vx];
        if (need < 0 || need > int(fe.size())) return;
        // choose `need` of the forward edges
        int nf = int(fe.size());
        for (int mask = 0; mask < (1 << nf); ++mask) {
            if (__builtin_popcount(unsigned(mask)) != need) continue;
            bool ok = true;
            for (int t = 0; t < nf && ok; ++t)
                if (mask & (1 << t)) {
                    int z = g->other(fe[t], vx);
                    chosen[fe[t]] = 1;
                    ++fixed_deg[z];
                    if (!feasible(z)) ok = false;
                }
            if (ok) run(k + 1);
            for (int t = 0; t < nf; ++t)
                if (mask & (1 << t)) {
                    chosen[fe[t]] = 0;
                    --fixed_deg[g->other(fe[t], vx)];
                }
        }
    }

    void emit() {
        // trace open paths; reject L-L and R-R connections; read off w
        const Grid& grid = *g;
        int V = grid.vertex_count();
        std::vector<std::vector<int>> adj(V);
        for (int e = 0; e < grid.edge_count(); ++e)
            if (chosen[e]) {
                adj[grid.edge(e).va].push_back(grid.edge(e).vb);
                adj[grid.edge(e).vb].push_back(grid.edge(e).va);
            }
        Word w(grid.n(), '?');
        std::vector<char> used(V, 0);
        for (int s = 0; s < V; ++s) {
            if (target[s] != 1 || used[s]) continue;
            used[s] = 1;
            int prev = -1, cur = s;
            while (true) {
                int nxt = -1;
                for (int z : adj[cur])
                    if (z != prev) nxt = z;
                if (nxt < 0) break;
                prev = cur;
                cur = nxt;
            }
            used[cur] = 1;
            int i1, i2;
            bool sL = grid.is_L(s, &i1), cL = grid.is_L(cur, &i2);
            bool sR = grid.is_R(s, &i1), cR = grid.is_R(cur, &i2);
            if ((sL && cL) || (sR && cR)) return;  // forbidden connection
            int bs, bc;
            bool sB = grid.is_B(s, &bs), cB = grid.is_B(cur, &bc);
            if (sB && cB) {
                w[std::min(bs, bc) - 1] = '0';
                w[std::max(bs, bc) - 1] = '1';
            } else if (sB || cB) {
                int bi = sB ? bs : bc;
                bool toL = sB ? cL : sL;
                w[bi - 1] = toL ? '1' : '0';
            }
        }
        if (w.find('?') != Word::npos) throw std::logic_error("unpaired bottom vertex");
        (*sink)[w].push_back(PlainTFPL{g, chosen});
    }
};

}  // namespace

std::vector<std::pair<Word, std::vector<PlainTFPL>>> enumerate_plain_by_w(const Word& u,
                                                                          const Word& v) {
    require_word(u);
    require_word(v);
    if (u.size() != v.size()) throw std::invalid_argument("boundary words must have equal length");
    std::map<Word, std::vector<PlainTFPL>> buckets;
    if (!u.empty()) {
        const Grid& g = grid_of_size(int(u.size()));
        PlainSearch s;
        s.init(g, u, v);
        s.sink = &buckets;
        s.run(0);
    }
    std::vector<std::pair<Word, std::vector<PlainTFPL>>> out;
    for (auto& [w, list] : buckets) {
        std::sort(list.begin(), list.end());
        out.emplace_back(w, std::move(list));
    }
    return out;
}

std::vector<PlainTFPL> enumerate_plain(const Word& u, const Word& v, const Word& w) {
    require_word(w);
    if (w.size() != u.size()) throw std::invalid_argument("boundary words must have equal length");
    for (auto& [ww, list] : enumerate_plain_by_w(u, v))
        if (ww == w) return list;
    return {};
}

// ---------------------------------------------------------------------------
// Conversions

PlainTFPL underlying(const OrientedTFPL& f) { return PlainTFPL{f.g, f.mo | f.me}; }

PlainBoundary plain_boundary_of(const PlainTFPL& f) {
    const Grid& g = *f.g;
    int n = g.n(), V = g.vertex_count();
    std::vector<std::vector<int>> adj(V);
    std::vector<int> deg(V, 0);
    for (int e = 0; e < g.edge_count(); ++e)
        if (f.edges[e]) {
            adj[g.edge(e).va].push_back(g.edge(e).vb);
            adj[g.edge(e).vb].push_back(g.edge(e).va);
            ++deg[g.edge(e).va];
            ++deg[g.edge(e).vb];
        }
    PlainBoundary pb;
    pb.b.u.assign(n, '0');
    pb.b.v.assign(n, '1');
    pb.b.w.assign(n, '?');
    pb.pattern.n = n;
    for (int i = 1; i <= n; ++i) {
        if (deg[g.L(i)] == 1) pb.b.u[i - 1] = '1';
        if (deg[g.R(i)] == 1) pb.b.v[i - 1] = '0';
        if (deg[g.B(i)] != 1) throw std::invalid_argument("bottom vertex degree must be 1");
    }
    for (int x = 0; x < V; ++x) {
        int want = 2;
        int idx;
        if (g.is_L(x, &idx) || g.is_R(x, &idx))
            want = deg[x] <= 1 ? deg[x] : -1;
        else if (g.is_B(x, &idx))
            want = 1;
        if (want < 0 || deg[x] != want) throw std::invalid_argument("invalid plain degrees");
    }
    std::vector<char> used(V, 0);
    for (int i = 1; i <= n; ++i) {
        int s = g.B(i);
        if (used[s]) continue;
        used[s] = 1;
        int prev = -1, cur = s;
        while (true) {
            int nxt = -1;
            for (int z : adj[cur])
                if (z != prev) nxt = z;
            if (nxt < 0) break;
            prev = cur;
            cur = nxt;
        }
        used[cur] = 1;
        int j;
        if (g.is_B(cur, &j)) {
            pb.b.w[std::min(i, j) - 1] = '0';
            pb.b.w[std::max(i, j) - 1] = '1';
            pb.pattern.pairs.emplace_back(std::min(i, j), std::max(i, j));
        } else if (g.is_L(cur, &j)) {
            pb.b.w[i - 1] = '1';
            pb.pattern.left.push_back(i);
        } else if (g.is_R(cur, &j)) {
            pb.b.w[i - 1] = '0';
            pb.pattern.right.push_back(i);
        } else {
            throw std::invalid_argument("bottom path ends at an interior vertex");
        }
    }
    std::sort(pb.pattern.pairs.begin(), pb.pattern.pairs.end());
    // L-L / R-R rejection for paths avoiding the bottom
    for (int i = 1; i <= n; ++i) {
        for (int s : {g.L(i), g.R(i)}) {
            if (deg[s] != 1 || used[s]) continue;
            used[s] = 1;
            int prev = -1, cur = s;
            while (true) {
                int nxt = -1;
                for (int z : adj[cur])
                    if (z != prev) nxt = z;
                if (nxt < 0) break;
                prev = cur;
                cur = nxt;
            }
            used[cur] = 1;
            int a, b2;
            if ((g.is_L(s, &a) && g.is_L(cur, &b2)) || (g.is_R(s, &a) && g.is_R(cur, &b2)))
                throw std::invalid_argument("path joins two L or two R vertices");
        }
    }
    return pb;
}

OrientedTFPL canonical_orient(const PlainTFPL& f) {
    const Grid& g = *f.g;
    int V = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(V);  // (neighbor, edge)
    std::vector<int> deg(V, 0);
    for (int e = 0; e < g.edge_count(); ++e)
        if (f.edges[e]) {
            adj[g.edge(e).va].push_back({g.edge(e).vb, e});
            adj[g.edge(e).vb].push_back({g.edge(e).va, e});
            ++deg[g.edge(e).va];
            ++deg[g.edge(e).vb];
        }
    OrientedTFPL of{&g, {}, {}};
    auto add_directed = [&](int from, int e) {
        (g.odd_vertex(from) ? of.mo : of.me)[e] = 1;
    };
    std::vector<char> used(V, 0);
    // emit=false only finds the far endpoint
    auto walk_from = [&](int s, bool emit) {
        int prev = -1, cur = s;
        while (true) {
            int nxt = -1, ne = -1;
            for (auto [z, e] : adj[cur])
                if (z != prev) {
                    nxt = z;
                    ne = e;
                }
            if (nxt < 0) break;
            if (emit) {
                add_directed(cur, ne);
                used[cur] = 1;
            }
            prev = cur;
            cur = nxt;
        }
        if (emit) used[cur] = 1;
        return cur;
    };
    auto source_of = [&](int s, int t) -> int {
        int i, j;
        if (g.is_L(s, &i)) return s;
        if (g.is_L(t, &i)) return t;
        if (g.is_R(s, &i)) return t;
        if (g.is_R(t, &i)) return s;
        bool bs = g.is_B(s, &i), bt = g.is_B(t, &j);
        if (bs && bt) return i < j ? s : t;  // bottom paths left to right
        throw std::logic_error("open path without boundary endpoints");
    };
    for (int s = 0; s < V; ++s) {
        if (deg[s] != 1 || used[s]) continue;
        int t = walk_from(s, false);
        walk_from(source_of(s, t), true);
    }
    // closed paths: orient clockwise (x_dl - x_ld = +1)
    for (int s = 0; s < V; ++s) {
        if (deg[s] != 2 || used[s]) continue;
        std::vector<std::pair<int, int>> cycle;  // (vertex, edge to next)
        int prev = -1, cur = s;
        do {
            int nxt = -1, ne = -1;
            for (auto [z, e] : adj[cur])
                if (z != prev || (adj[cur].size() == 1)) {
                    nxt = z;
                    ne = e;
                }
            cycle.push_back({cur, ne});
            used[cur] = 1;
            prev = cur;
            cur = nxt;
        } while (cur != s);
        int x_dl = 0, x_ld = 0;
        for (size_t k = 0; k < cycle.size(); ++k) {
            Dir din = g.dir_from(cycle[(k + cycle.size() - 1) % cycle.size()].second,
                                 cycle[(k + cycle.size() - 1) % cycle.size()].first);
            Dir dout = g.dir_from(cycle[k].second, cycle[k].first);
            if (din == DIR_D && dout == DIR_L) ++x_dl;
            if (din == DIR_L && dout == DIR_D) ++x_ld;
        }
        bool cw = x_dl - x_ld > 0;
        for (auto [vx, e] : cycle) {
            int from = cw ? vx : g.other(e, vx);
            add_directed(from, e);
        }
    }
    boundary_of(of);  // validate
    return of;
}

OrientedTFPL vertical_reflect(const OrientedTFPL& f) {
    const Grid& g = *f.g;
    int n = g.n();
    auto reflect_set = [&](const EdgeSet& s) {
        EdgeSet r;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (!s[e]) continue;
            auto [a1, h1] = g.pos(g.edge(e).va);
            auto [a2, h2] = g.pos(g.edge(e).vb);
            int x = g.vid(2 * n - a1, h1), y = g.vid(2 * n - a2, h2);
            int hit = -1;
            for (int e2 : g.incident(x))
                if (g.other(e2, x) == y) hit = e2;
            r[hit] = 1;
        }
        return r;
    };
    // reflection plus reorientation swaps the roles of the two matchings
    return OrientedTFPL{&g, reflect_set(f.me), reflect_set(f.mo)};
}

LaurentPoly weighted_count(const Word& u, const Word& v, const Word& w, bool restrict_rl0) {
    LaurentPoly total;
    for (const OrientedTFPL& f : enumerate_oriented(u, v, w)) {
        TurnCensus c = turn_census(f).census;
        if (restrict_rl0 && c.rl != 0) continue;
        total += LaurentPoly::q_power(weight_exponent(c, DIR_D, DIR_L, DIR_L, DIR_D));
    }
    return total;
}

}  // namespace tfpl
