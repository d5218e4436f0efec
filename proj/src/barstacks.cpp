#include "crossfam/barstacks.hpp"

#include "crossfam/duality.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crossfam {

void validate_barstack(const BarStack& b) {
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, bb] : b.bars) {
        if (!(1 <= a && a < bb && bb <= b.pillars))
            throw std::invalid_argument("bar interval out of range");
        if (!seen.insert({a, bb}).second)
            throw std::invalid_argument("duplicate bar interval");
    }
}

std::vector<int> Marbling::pillars_with_marbles() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < slot_of.size(); ++i)
        if (slot_of[i] >= 0) out.push_back(static_cast<int>(i) + 1);
    return out;
}

SideCompatCheck validate_side_compatible(const BarStack& b,
                                         const WireSequence& w,
                                         const Marbling& m, bool ordered) {
    std::vector<bool> slot_used(w.levels.size(), false);
    for (std::size_t p = 0; p < m.slot_of.size(); ++p) {
        int s = m.slot_of[p];
        if (s < 0) continue;
        if (s >= static_cast<int>(w.levels.size()) || slot_used[s])
            return {false, -1};
        slot_used[s] = true;
    }
    for (int h = 1; h <= b.height_count(); ++h) {
        auto [a, bb] = b.bars[h - 1];
        if (a > static_cast<int>(m.slot_of.size()) ||
            bb > static_cast<int>(m.slot_of.size()))
            continue;
        int sa = m.slot_of[a - 1];
        int sb = m.slot_of[bb - 1];
        if (sa < 0 || sb < 0) continue;
        int fa = w.levels[sa];
        int fb = w.levels[sb];
        bool below = fa < h && fb < h;
        bool above = fa >= h && fb >= h;
        if (!below && !above) return {false, h};
        if (ordered) {
            if (below && !(fa < fb)) return {false, h};
            if (above && !(fa > fb)) return {false, h};
        }
    }
    return {};
}

namespace {

struct SideCompatSearch {
    const BarStack* bar_stack;
    const WireSequence* wires;
    bool ordered;
    int n;
    // Per distinct level: the slot indices carrying it, ascending.
    std::vector<std::pair<int, std::vector<int>>> level_slots;
    std::vector<int> level_use;  // how many slots of level_slots[k] are taken
    std::vector<int> assignment;  // pillar-1 -> level index in level_slots, -1 none
    std::vector<bool> in_subset;
    std::vector<std::vector<std::pair<int, int>>> bars_at;  // pillar -> (other, height)
    std::vector<int> best_assignment;
    int best = -1;
    std::chrono::steady_clock::time_point deadline;
    bool timed_out = false;
    long tick = 0;

    bool out_of_time() {
        if (timed_out) return true;
        if (++tick % 4096 != 0) return false;
        if (std::chrono::steady_clock::now() >= deadline) timed_out = true;
        return timed_out;
    }

    bool bar_ok(int level_value, int other_level_value, int h) const {
        bool below = level_value < h && other_level_value < h;
        bool above = level_value >= h && other_level_value >= h;
        if (!below && !above) return false;
        return true;
    }

    void dfs(int pillar, int count) {
        if (out_of_time()) return;
        if (pillar > n) {
            if (count > best) {
                best = count;
                best_assignment = assignment;
            }
            return;
        }
        if (count + (n - pillar + 1) <= best) return;
        for (std::size_t li = 0; li < level_slots.size(); ++li) {
            if (level_use[li] >=
                static_cast<int>(level_slots[li].second.size()))
                continue;
            int value = level_slots[li].first;
            bool feasible = true;
            for (auto [other, h] : bars_at[pillar - 1]) {
                if (other >= pillar || !in_subset[other - 1]) continue;
                int other_value = level_slots[assignment[other - 1]].first;
                int fa, fb;
                auto [a, bb] = bar_stack->bars[h - 1];
                if (a == pillar) {
                    fa = value;
                    fb = other_value;
                } else {
                    fa = other_value;
                    fb = value;
                }
                bool below = fa < h && fb < h;
                bool above = fa >= h && fb >= h;
                if (!below && !above) {
                    feasible = false;
                    break;
                }
                if (ordered && below && !(fa < fb)) {
                    feasible = false;
                    break;
                }
                if (ordered && above && !(fa > fb)) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;
            assignment[pillar - 1] = static_cast<int>(li);
            in_subset[pillar - 1] = true;
            ++level_use[li];
            dfs(pillar + 1, count + 1);
            --level_use[li];
            in_subset[pillar - 1] = false;
            assignment[pillar - 1] = -1;
            if (timed_out) return;
        }
        dfs(pillar + 1, count);
    }
};

}  // namespace

SideCompatResult max_side_compatible(const BarStack& b, const WireSequence& w,
                                     bool ordered, double timeout_seconds) {
    validate_barstack(b);
    SideCompatSearch s;
    s.bar_stack = &b;
    s.wires = &w;
    s.ordered = ordered;
    s.n = b.pillars;
    std::map<int, std::vector<int>> by_level;
    for (std::size_t i = 0; i < w.levels.size(); ++i)
        by_level[w.levels[i]].push_back(static_cast<int>(i));
    for (auto& [lvl, slots] : by_level) s.level_slots.push_back({lvl, slots});
    s.level_use.assign(s.level_slots.size(), 0);
    s.assignment.assign(s.n, -1);
    s.in_subset.assign(s.n, false);
    s.bars_at.assign(s.n, {});
    for (int h = 1; h <= b.height_count(); ++h) {
        auto [a, bb] = b.bars[h - 1];
        s.bars_at[a - 1].push_back({bb, h});
        s.bars_at[bb - 1].push_back({a, h});
    }
    s.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(timeout_seconds));
    s.best = -1;
    s.dfs(1, 0);

    SideCompatResult out;
    out.size = std::max(0, s.best);
    out.complete = !s.timed_out;
    out.upper_bound = out.complete
                          ? out.size
                          : std::min<int>(s.n, w.levels.size());
    out.marbling.slot_of.assign(s.n, -1);
    if (s.best >= 0) {
        std::vector<int> used(s.level_slots.size(), 0);
        for (int p = 0; p < s.n; ++p) {
            int li = s.best_assignment[p];
            if (li < 0) continue;
            out.marbling.slot_of[p] = s.level_slots[li].second[used[li]++];
        }
    }
    return out;
}

FullMarbling full_marbling_wires(const BarStack& b) {
    validate_barstack(b);
    const int n = b.pillars;
    if (b.height_count() != n && !(n == 1 && b.height_count() == 0))
        throw std::invalid_argument("full_marbling_wires needs n bars, n pillars");

    std::vector<std::vector<int>> endpoints(n);  // pillar-1 -> bar heights
    for (int h = 1; h <= b.height_count(); ++h) {
        auto [a, bb] = b.bars[h - 1];
        endpoints[a - 1].push_back(h);
        endpoints[bb - 1].push_back(h);
    }

    for (int ref = 0; ref <= n; ++ref) {
        // Allowed wire values for pillar x: the gap of its endpoint heights
        // containing the reference wire position ref + 0.5.
        std::vector<std::pair<int, int>> range(n);
        for (int x = 0; x < n; ++x) {
            int lo = 0, hi = n + 1;
            for (int h : endpoints[x]) {
                if (h <= ref) lo = std::max(lo, h);
                else hi = std::min(hi, h);
            }
            range[x] = {lo, hi - 1};
        }
        // Distinct-representative matching over interval ranges: greedy by
        // upper endpoint.
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int u, int v) {
            if (range[u].second != range[v].second)
                return range[u].second < range[v].second;
            return range[u].first < range[v].first;
        });
        std::vector<int> value(n, -1);
        std::vector<bool> taken(n + 2, false);
        bool ok = true;
        for (int x : order) {
            int v = range[x].first;
            while (v <= range[x].second && taken[v]) ++v;
            if (v > range[x].second) {
                ok = false;
                break;
            }
            taken[v] = true;
            value[x] = v;
        }
        if (!ok) continue;

        FullMarbling out;
        out.reference_level = ref;
        std::vector<int> sorted_values(value);
        std::sort(sorted_values.begin(), sorted_values.end());
        out.wires.levels = sorted_values;
        out.marbling.slot_of.assign(n, -1);
        for (int x = 0; x < n; ++x) {
            auto it = std::lower_bound(sorted_values.begin(),
                                       sorted_values.end(), value[x]);
            out.marbling.slot_of[x] =
                static_cast<int>(it - sorted_values.begin());
        }
        SideCompatCheck check =
            validate_side_compatible(b, out.wires, out.marbling, false);
        if (!check.ok) continue;
        return out;
    }

    std::ostringstream oss;
    oss << "full_marbling_wires: no reference level worked (lemma violation?) "
           "n="
        << n << " bars=";
    for (auto [a, bb] : b.bars) oss << "[" << a << "," << bb << "]";
    throw std::logic_error(oss.str());
}

OrderedHalfResult ordered_half_subset(const BarStack& b) {
    validate_barstack(b);
    const int n = b.pillars;
    if (b.height_count() > n)
        throw std::invalid_argument("ordered_half_subset needs at most n bars");
    const int low = n / 2;

    // Directed graph: white vertices 0..n-1 (pillars), black vertices n..n+low-1
    // (low bars). Bar at height i <= low: a -> b and b -> h_i.
    const int total = n + low;
    std::vector<std::vector<int>> succ(total);
    for (int h = 1; h <= std::min(low, b.height_count()); ++h) {
        auto [a, bb] = b.bars[h - 1];
        succ[a - 1].push_back(bb - 1);
        succ[bb - 1].push_back(n + h - 1);
    }

    // r-value: number of white vertices reachable from each white vertex
    // (including itself). White-white edges go from smaller to larger pillar,
    // so a reverse index sweep computes reachability sets.
    std::vector<std::set<int>> reach(n);
    for (int v = n - 1; v >= 0; --v) {
        reach[v].insert(v);
        for (int u : succ[v])
            if (u < n) reach[v].insert(reach[u].begin(), reach[u].end());
    }
    std::vector<int> rvalue(n);
    for (int v = 0; v < n; ++v) rvalue[v] = static_cast<int>(reach[v].size());

    // Weakly connected components over whites and blacks.
    std::vector<std::vector<int>> und(total);
    for (int v = 0; v < total; ++v)
        for (int u : succ[v]) {
            und[v].push_back(u);
            und[u].push_back(v);
        }
    std::vector<int> comp(total, -1);
    int comp_count = 0;
    for (int v = 0; v < total; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack{v};
        comp[v] = comp_count;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int t : und[u])
                if (comp[t] < 0) {
                    comp[t] = comp_count;
                    stack.push_back(t);
                }
        }
        ++comp_count;
    }
    std::vector<int> hvalue(comp_count, 0), csize(comp_count, 0);
    std::vector<std::vector<int>> whites_in(comp_count);
    for (int v = 0; v < total; ++v) {
        ++csize[comp[v]];
        if (v >= n) hvalue[comp[v]] = std::max(hvalue[comp[v]], v - n + 1);
        else whites_in[comp[v]].push_back(v);
    }
    for (int c = 0; c < comp_count; ++c)
        if (csize[c] <= 1) hvalue[c] = 0;

    std::vector<int> comp_order(comp_count);
    std::iota(comp_order.begin(), comp_order.end(), 0);
    std::sort(comp_order.begin(), comp_order.end(), [&](int c1, int c2) {
        if (hvalue[c1] != hvalue[c2]) return hvalue[c1] > hvalue[c2];
        return whites_in[c1] < whites_in[c2];
    });

    std::vector<int> f(n, 0);  // pillar-1 -> assigned wire value in [1..n]
    int next = n;
    for (int c : comp_order) {
        std::vector<int> ws = whites_in[c];
        std::sort(ws.begin(), ws.end(), [&](int u, int v) {
            if (rvalue[u] != rvalue[v]) return rvalue[u] > rvalue[v];
            return u < v;
        });
        for (int w : ws) f[w] = next--;
    }

    // Prune high bars that violate the ordered conditions.
    std::vector<bool> in_c(n, true);
    for (int h = low + 1; h <= b.height_count(); ++h) {
        auto [a, bb] = b.bars[h - 1];
        if (!in_c[a - 1] || !in_c[bb - 1]) continue;
        int fa = f[a - 1], fb = f[bb - 1];
        bool ok = (fa > fb && fb >= h) || (fa < fb && fb < h);
        if (!ok) in_c[bb - 1] = false;
    }

    OrderedHalfResult out;
    for (int p = 0; p < n; ++p)
        if (in_c[p]) out.pillars.push_back(p + 1);
    std::vector<int> values;
    for (int p : out.pillars) values.push_back(f[p - 1]);
    std::sort(values.begin(), values.end());
    out.wires.levels = values;
    out.marbling.slot_of.assign(n, -1);
    for (int p : out.pillars) {
        auto it = std::lower_bound(values.begin(), values.end(), f[p - 1]);
        out.marbling.slot_of[p - 1] = static_cast<int>(it - values.begin());
    }
    SideCompatCheck check =
        validate_side_compatible(b, out.wires, out.marbling, true);
    if (!check.ok)
        throw std::logic_error("ordered_half_subset: construction failed at bar " +
                               std::to_string(check.violating_height));
    if (static_cast<int>(out.pillars.size()) < n / 2)
        throw std::logic_error("ordered_half_subset: subset smaller than n/2");
    return out;
}

namespace {

Line rotate_line(const Line& l, const Rat& c, const Rat& s) {
    Point p0, p1;
    if (l.vertical) {
        p0 = Point(l.b, 0);
        p1 = Point(l.b, 1);
    } else {
        p0 = Point(0, l.b);
        p1 = Point(1, l.a + l.b);
    }
    return Line::through(rotate_point(p0, c, s), rotate_point(p1, c, s),
                         l.color);
}

}  // namespace

BarStack bar_representation(const std::vector<Line>& lines) {
    const int n = static_cast<int>(lines.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool par = lines[i].vertical
                           ? lines[j].vertical
                           : (!lines[j].vertical && lines[i].a == lines[j].a);
            if (par) throw std::invalid_argument("parallel lines in input");
        }

    std::vector<Line> cur = lines;
    for (int attempt = 0; attempt <= 64; ++attempt) {
        bool vertical_free = true;
        for (const Line& l : cur)
            if (l.vertical) vertical_free = false;
        if (vertical_free) {
            std::vector<std::pair<Rat, std::pair<int, int>>> xs;
            bool distinct = true;
            for (int i = 0; i < n && distinct; ++i)
                for (int j = i + 1; j < n; ++j) {
                    Point p = intersection_point(cur[i], cur[j]);
                    xs.push_back({p.y, {i + 1, j + 1}});
                }
            std::sort(xs.begin(), xs.end(),
                      [](const auto& u, const auto& v) { return u.first < v.first; });
            for (std::size_t k = 0; k + 1 < xs.size(); ++k)
                if (xs[k].first == xs[k + 1].first) distinct = false;
            if (distinct) {
                BarStack b;
                b.pillars = n;
                for (const auto& [y, iv] : xs) b.bars.push_back(iv);
                validate_barstack(b);
                return b;
            }
        }
        if (attempt == 64) break;
        Rat t(1, 611 + 8 * attempt);
        Rat c, s;
        rotation_from_half_angle(t, c, s);
        cur.clear();
        for (const Line& l : lines) cur.push_back(rotate_line(l, c, s));
    }
    throw std::runtime_error(
        "bar_representation: equal intersection heights persist after rotations");
}

namespace {

struct GeomEdge {
    Point a, b;
};

bool segments_cross_or_overlap(const Point& p, const Point& q, const Point& r,
                               const Point& s) {
    int o1 = orientation(p, q, r);
    int o2 = orientation(p, q, s);
    int o3 = orientation(r, s, p);
    int o4 = orientation(r, s, q);
    if (o1 != o2 && o3 != o4 && o1 && o2 && o3 && o4) return true;
    auto on_segment = [](const Point& u, const Point& v, const Point& w) {
        if (orientation(u, v, w) != 0) return false;
        return std::min(u.x, v.x) <= w.x && w.x <= std::max(u.x, v.x) &&
               std::min(u.y, v.y) <= w.y && w.y <= std::max(u.y, v.y);
    };
    if (o1 == 0 && on_segment(p, q, r)) return true;
    if (o2 == 0 && on_segment(p, q, s)) return true;
    if (o3 == 0 && on_segment(r, s, p)) return true;
    if (o4 == 0 && on_segment(r, s, q)) return true;
    return false;
}

}  // namespace

bool barstack_graph_has_simple_cycle(const BarStack& b) {
    validate_barstack(b);
    // Vertices: bar endpoints. Edges: the bars, plus vertical connections
    // between consecutive endpoints on a pillar.
    std::vector<Point> verts;
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, int> vid;  // (x, height) -> vertex
    auto get = [&](int x, int h) {
        auto it = vid.find({x, h});
        if (it != vid.end()) return it->second;
        int id = static_cast<int>(verts.size());
        verts.emplace_back(Rat(x), Rat(h));
        vid[{x, h}] = id;
        return id;
    };
    std::vector<std::vector<int>> on_pillar(b.pillars + 1);
    for (int h = 1; h <= b.height_count(); ++h) {
        auto [a, bb] = b.bars[h - 1];
        int u = get(a, h), v = get(bb, h);
        edges.push_back({u, v});
        on_pillar[a].push_back(u);
        on_pillar[bb].push_back(v);
    }
    for (int x = 1; x <= b.pillars; ++x) {
        auto& vs = on_pillar[x];
        std::sort(vs.begin(), vs.end(), [&](int u, int v) {
            return verts[u].y < verts[v].y;
        });
        for (std::size_t k = 0; k + 1 < vs.size(); ++k)
            edges.push_back({vs[k], vs[k + 1]});
    }

    const int nv = static_cast<int>(verts.size());
    std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (to, edge id)
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].first].push_back({edges[e].second, static_cast<int>(e)});
        adj[edges[e].second].push_back({edges[e].first, static_cast<int>(e)});
    }

    // Enumerate simple graph cycles (bounded) and test each for geometric
    // self-intersection.
    long budget = 200000;
    std::vector<int> path;
    std::vector<bool> on_path(nv, false);

    auto cycle_is_geometric = [&](const std::vector<int>& cyc) {
        const int m = static_cast<int>(cyc.size());
        for (int i = 0; i < m; ++i) {
            const Point& p = verts[cyc[i]];
            const Point& q = verts[cyc[(i + 1) % m]];
            for (int j = i + 1; j < m; ++j) {
                bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
                if (adjacent) continue;
                const Point& r = verts[cyc[j]];
                const Point& s = verts[cyc[(j + 1) % m]];
                if (segments_cross_or_overlap(p, q, r, s)) return false;
            }
        }
        return true;
    };

    std::function<bool(int, int, int)> dfs = [&](int start, int v,
                                                 int used_edge) -> bool {
        if (--budget <= 0) return false;
        for (auto [u, e] : adj[v]) {
            if (e == used_edge) continue;
            if (u == start && path.size() >= 3) {
                if (cycle_is_geometric(path)) return true;
                continue;
            }
            if (on_path[u] || u < start) continue;
            on_path[u] = true;
            path.push_back(u);
            if (dfs(start, u, e)) return true;
            path.pop_back();
            on_path[u] = false;
        }
        return false;
    };

    for (int v = 0; v < nv; ++v) {
        path = {v};
        std::fill(on_path.begin(), on_path.end(), false);
        on_path[v] = true;
        if (dfs(v, v, -1)) return true;
    }
    return false;
}

KnBarStack build_kn_barstack(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("build_kn_barstack needs even n >= 2");
    KnBarStack out;
    out.stack.pillars = n;
    // Zig-zag Hamiltonian path i: i, i+1, i-1, i+2, i-2, ... (mod n).
    for (int i = 0; i < n / 2; ++i) {
        std::vector<int> path;
        path.reserve(n);
        for (int j = 0; j < n; ++j) {
            int v = (j % 2 == 1) ? (i + (j + 1) / 2) : (i - j / 2);
            v %= n;
            if (v < 0) v += n;
            path.push_back(v + 1);
        }
        for (int k = 0; k + 1 < n; ++k) {
            int a = path[k], b = path[k + 1];
            out.stack.bars.push_back({std::min(a, b), std::max(a, b)});
        }
    }
    validate_barstack(out.stack);
    const int l = out.stack.height_count();
    // n-1 wires below the first block, between consecutive blocks, and above
    // the last: levels g*(n-1) for g = 0..n/2, each n-1 times.
    for (int g = 0; g <= n / 2; ++g)
        for (int k = 0; k < n - 1; ++k)
            out.wires.levels.push_back(g * (n - 1));
    (void)l;
    return out;
}

}  // namespace crossfam
