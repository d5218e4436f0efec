#include "crossfam/tables.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace crossfam {

PermTable build_table_from_lines(const std::vector<Line>& blues,
                                 const std::vector<Line>& reds) {
    const int n_b = static_cast<int>(blues.size());
    const int n_r = static_cast<int>(reds.size());
    if (n_b == 0 || n_r == 0)
        throw std::invalid_argument("table needs lines of both colors");
    for (const Line& l : blues)
        if (l.vertical) throw std::invalid_argument("vertical blue line");
    for (const Line& l : reds)
        if (l.vertical) throw std::invalid_argument("vertical red line");
    for (const Line& bl : blues)
        for (const Line& rl : reds)
            if (bl.a == rl.a)
                throw std::invalid_argument("blue parallel to red");

    // Order blues by intersection position along each red; all reds must agree.
    auto blue_order_along = [&](const Line& red) {
        std::vector<int> order(n_b);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int i, int j) {
            return intersection_x(red, blues[i]) < intersection_x(red, blues[j]);
        });
        return order;
    };
    std::vector<int> blue_order = blue_order_along(reds[0]);
    for (int r = 1; r < n_r; ++r)
        if (blue_order_along(reds[r]) != blue_order)
            throw std::invalid_argument(
                "reds do not see the blues in a common order");

    // Red labels: order met along the first blue.
    std::vector<int> red_order(n_r);
    std::iota(red_order.begin(), red_order.end(), 0);
    const Line& b1 = blues[blue_order[0]];
    std::sort(red_order.begin(), red_order.end(), [&](int i, int j) {
        return intersection_x(b1, reds[i]) < intersection_x(b1, reds[j]);
    });
    std::vector<int> label_of_red(n_r);  // red index -> label-1
    for (int k = 0; k < n_r; ++k) label_of_red[red_order[k]] = k;

    PermTable t;
    t.row_sources = blue_order;
    t.label_sources = red_order;
    t.rows.reserve(n_b);
    for (int i : blue_order) {
        std::vector<int> order(n_r);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int u, int v) {
            return intersection_x(blues[i], reds[u]) <
                   intersection_x(blues[i], reds[v]);
        });
        std::vector<int> row;
        row.reserve(n_r);
        for (int r : order) row.push_back(label_of_red[r] + 1);
        t.rows.push_back(std::move(row));
    }
    return t;
}

PermTable build_table(const ColoredPointSet& ps, const Partition2& partition) {
    if (!is_one_avoiding(ps, partition))
        throw std::invalid_argument("build_table requires a 1-avoiding input");
    ColoredPointSet rotated =
        rotate_vertical_separation(ps, partition.set_a, partition.set_b);
    std::vector<Line> blues, reds;
    blues.reserve(partition.set_a.size());
    reds.reserve(partition.set_b.size());
    for (int i : partition.set_a)
        blues.push_back(point_to_dual_line(rotated[i]));
    for (int i : partition.set_b) reds.push_back(point_to_dual_line(rotated[i]));
    PermTable t = build_table_from_lines(blues, reds);
    for (int& r : t.row_sources) r = partition.set_a[r];
    for (int& l : t.label_sources) l = partition.set_b[l];
    return t;
}

namespace {

bool diagonal_rows_backtrack(const PermTable& table,
                             const std::vector<int>& elems, int k, int from_row,
                             std::vector<int>& rows, std::vector<int>& diag) {
    const int pos = static_cast<int>(rows.size());
    if (pos == k) return true;
    const int n_rows = static_cast<int>(table.rows.size());
    for (int r = from_row; r <= n_rows - (k - pos); ++r) {
        // Restrict row r to the chosen elements and check the prefix rule:
        // the first pos entries must be exactly the current diagonal set.
        int seen = 0;
        int candidate = -1;
        bool ok = true;
        for (int value : table.rows[r]) {
            if (!std::binary_search(elems.begin(), elems.end(), value)) continue;
            if (seen < pos) {
                if (std::find(diag.begin(), diag.end(), value) == diag.end()) {
                    ok = false;
                    break;
                }
            } else {
                candidate = value;
                break;
            }
            ++seen;
        }
        if (!ok || candidate < 0) continue;
        rows.push_back(r);
        diag.push_back(candidate);
        if (diagonal_rows_backtrack(table, elems, k, r + 1, rows, diag))
            return true;
        rows.pop_back();
        diag.pop_back();
    }
    return false;
}

}  // namespace

std::optional<DiagonalResult> find_distinct_diagonal(const PermTable& table,
                                                     int k) {
    if (table.rows.empty()) return std::nullopt;
    const int n_rows = static_cast<int>(table.rows.size());
    const int n_elems = static_cast<int>(table.rows[0].size());
    if (k < 1 || k > n_rows || k > n_elems) return std::nullopt;
    if (k == 1) {
        DiagonalResult res;
        res.row_positions = {0};
        res.elements = {table.rows[0][0]};
        res.diagonal = {table.rows[0][0]};
        return res;
    }
    std::vector<int> labels(n_elems);
    std::iota(labels.begin(), labels.end(), 1);
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        std::vector<int> elems;
        elems.reserve(k);
        for (int c : comb) elems.push_back(labels[c]);
        std::vector<int> rows, diag;
        if (diagonal_rows_backtrack(table, elems, k, 0, rows, diag)) {
            DiagonalResult res;
            res.row_positions = rows;
            res.elements = elems;
            res.diagonal = diag;
            return res;
        }
        int i = k - 1;
        while (i >= 0 && comb[i] == n_elems - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    return std::nullopt;
}

AllowableSequence allowable_sequence_of(const ColoredPointSet& ps) {
    const int n = static_cast<int>(ps.size());
    if (n < 2) throw std::invalid_argument("allowable sequence needs >= 2 points");
    GeneralPositionReport gp = is_general_position(ps);
    if (!gp.ok)
        throw std::invalid_argument("allowable sequence requires general position");

    // Rotate until no two points share an x-coordinate, so the dual sweep
    // covers every swap.
    ColoredPointSet cur = ps;
    for (long k = 0; k <= 256; ++k) {
        bool distinct = true;
        for (int i = 0; i < n && distinct; ++i)
            for (int j = i + 1; j < n && distinct; ++j)
                if (cur[i].x == cur[j].x) distinct = false;
        if (distinct) break;
        if (k == 256)
            throw std::runtime_error("allowable sequence: rotation search failed");
        Rat t(1, 997 + 4 * k);
        Rat c, s;
        rotation_from_half_angle(t, c, s);
        cur = rotate_set(ps, c, s);
    }

    // Dual line of point i: y = x_i * t - y_i over sweep position t. Initial
    // order at t -> -inf: ascending y means descending slope.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return cur[i].x > cur[j].x;
    });

    // Events: pairs grouped by the slope of their connecting line.
    std::map<Rat, std::vector<std::pair<int, int>>> events;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat slope = (cur[j].y - cur[i].y) / (cur[j].x - cur[i].x);
            events[slope].push_back({i, j});
        }

    AllowableSequence seq;
    seq.element_to_point.resize(n);
    std::vector<int> pos(n);  // point index -> current position (0-based)
    std::vector<int> label(n);
    for (int r = 0; r < n; ++r) {
        pos[order[r]] = r;
        label[order[r]] = r + 1;
        seq.element_to_point[r] = order[r];
    }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[pos[i]] = label[i];
    seq.perms.push_back(perm);
    seq.simple = true;

    for (auto& [slope, pairs] : events) {
        std::vector<std::pair<int, int>> spans;
        for (auto [i, j] : pairs) {
            int pi = pos[i], pj = pos[j];
            if (pi > pj) std::swap(pi, pj);
            if (pj != pi + 1)
                throw std::logic_error(
                    "allowable sequence: swap of non-adjacent duals");
            std::swap(perm[pi], perm[pj]);
            std::swap(pos[i], pos[j]);
            spans.push_back({pi, 2});
        }
        if (pairs.size() > 1) seq.simple = false;
        std::sort(spans.begin(), spans.end());
        seq.move_log.push_back(spans);
        seq.perms.push_back(perm);
    }
    return seq;
}

std::optional<std::vector<std::pair<int, int>>> decompose_move(
    const std::vector<int>& prev, const std::vector<int>& next) {
    const int n = static_cast<int>(prev.size());
    if (static_cast<int>(next.size()) != n) return std::nullopt;
    std::vector<std::pair<int, int>> spans;
    int i = 0;
    while (i < n) {
        if (prev[i] == next[i]) {
            ++i;
            continue;
        }
        // A reversed block starting at i ends where prev holds next[i].
        int r = -1;
        for (int u = i + 1; u < n; ++u)
            if (prev[u] == next[i]) {
                r = u;
                break;
            }
        if (r < 0) return std::nullopt;
        for (int u = i; u <= r; ++u) {
            if (next[u] != prev[r - (u - i)]) return std::nullopt;
            if (u > i && prev[u] <= prev[u - 1]) return std::nullopt;
        }
        spans.push_back({i, r - i + 1});
        i = r + 1;
    }
    if (spans.empty()) return std::nullopt;  // a move must change something
    return spans;
}

AllowableValidation validate_allowable(const AllowableSequence& seq) {
    AllowableValidation v;
    const auto& perms = seq.perms;
    if (perms.empty()) {
        v.ok = false;
        v.violation = "empty sequence";
        return v;
    }
    const int n = static_cast<int>(perms[0].size());
    for (int i = 0; i < n; ++i)
        if (perms[0][i] != i + 1) {
            v.ok = false;
            v.violation = "first permutation is not the identity";
            return v;
        }
    std::vector<int> rev(perms[0].rbegin(), perms[0].rend());
    if (perms.back() != rev) {
        v.ok = false;
        v.violation = "last permutation is not the reverse of the first";
        return v;
    }
    std::vector<std::vector<bool>> flipped(n + 1, std::vector<bool>(n + 1, false));
    v.simple = true;
    for (std::size_t s = 0; s + 1 < perms.size(); ++s) {
        auto spans = decompose_move(perms[s], perms[s + 1]);
        if (!spans) {
            v.ok = false;
            v.violation =
                "step " + std::to_string(s + 1) + " is not a reversal move";
            return v;
        }
        int flips_here = 0;
        for (auto [start, len] : *spans) {
            flips_here += len * (len - 1) / 2;
            for (int u = start; u < start + len; ++u)
                for (int w = u + 1; w < start + len; ++w) {
                    int a = perms[s][u], b = perms[s][w];
                    if (flipped[a][b]) {
                        v.ok = false;
                        v.violation = "pair (" + std::to_string(a) + "," +
                                      std::to_string(b) + ") reverses twice";
                        return v;
                    }
                    flipped[a][b] = flipped[b][a] = true;
                }
        }
        if (flips_here != 1) v.simple = false;
    }
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (!flipped[a][b]) {
                v.ok = false;
                v.violation = "pair (" + std::to_string(a) + "," +
                              std::to_string(b) + ") never reverses";
                return v;
            }
    return v;
}

SimpleDiagonal diagonal_from_simple_allowable(const AllowableSequence& seq) {
    AllowableValidation val = validate_allowable(seq);
    if (!val.ok || !val.simple)
        throw std::invalid_argument(
            "diagonal_from_simple_allowable requires a valid simple sequence");
    const int n = static_cast<int>(seq.perms[0].size());
    SimpleDiagonal out;
    for (std::size_t s = 0; s + 1 < seq.perms.size(); ++s) {
        const auto& p = seq.perms[s];
        const auto& q = seq.perms[s + 1];
        for (int i = 0; i + 1 < n; ++i) {
            if (p[i] != q[i] && p[i] == 1 && q[i] == p[i + 1]) {
                out.row_steps.push_back(static_cast<int>(s) + 1);
                out.diagonal.push_back(p[i + 1]);
                std::vector<int> row;
                row.reserve(n - 1);
                for (int v : p)
                    if (v != 1) row.push_back(v);
                out.table_rows.push_back(std::move(row));
                break;
            }
        }
    }
    std::vector<int> d = out.diagonal;
    std::sort(d.begin(), d.end());
    out.distinct = std::adjacent_find(d.begin(), d.end()) == d.end();
    return out;
}

std::vector<std::vector<int>> build_theta_n2_sequence(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument(
            "theta-n2 sequence is defined for even n >= 4");
    const long l = static_cast<long>(n / 2) * (n / 2) + n - 1;
    std::vector<std::vector<int>> perms;
    perms.reserve(l);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    perms.push_back(perm);

    auto swap_values = [&](int a, int b) {
        auto ia = std::find(perm.begin(), perm.end(), a);
        auto ib = std::find(perm.begin(), perm.end(), b);
        std::iter_swap(ia, ib);
    };

    const long rule1_count = (n - 1 + 3) / 4;  // ceil((n-1)/4)
    const long rule2_count = n / 4;
    for (long i = 1; i < l; ++i) {
        for (long k = 0; k < rule1_count; ++k)
            if (i == (n + 1) / 2 + k * (n + 1))
                swap_values(n / 2 - static_cast<int>(k),
                            n / 2 + 1 + static_cast<int>(k));
        for (long k = 0; k < rule2_count; ++k)
            if (i == n + k * (n + 1))
                swap_values(1 + static_cast<int>(k), n - static_cast<int>(k));
        perms.push_back(perm);
    }
    return perms;
}

PermTable table_from_rows(std::vector<std::vector<int>> rows) {
    PermTable t;
    t.rows = std::move(rows);
    t.row_sources.resize(t.rows.size());
    std::iota(t.row_sources.begin(), t.row_sources.end(), 0);
    if (!t.rows.empty()) {
        t.label_sources.resize(t.rows[0].size());
        std::iota(t.label_sources.begin(), t.label_sources.end(), 0);
    }
    return t;
}

}  // namespace crossfam
