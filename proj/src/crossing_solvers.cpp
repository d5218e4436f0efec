#include "crossfam/crossing_solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace crossfam {

std::string family_relation_name(FamilyRelation r) {
    switch (r) {
        case FamilyRelation::Crossing: return "crossing";
        case FamilyRelation::Parallel: return "parallel";
        default: return "stab-or-cross";
    }
}

bool pair_satisfies(PairRelation rel, FamilyRelation wanted) {
    switch (wanted) {
        case FamilyRelation::Crossing:
            return rel == PairRelation::Crossing;
        case FamilyRelation::Parallel:
            return rel == PairRelation::Parallel;
        default:
            return rel == PairRelation::Crossing ||
                   rel == PairRelation::FirstStabsSecond ||
                   rel == PairRelation::SecondStabsFirst;
    }
}

FamilyCheck verify_family(const Family& f, const ColoredPointSet& ps) {
    for (std::size_t i = 0; i < f.segments.size(); ++i)
        for (std::size_t j = i + 1; j < f.segments.size(); ++j) {
            const Segment& s1 = f.segments[i];
            const Segment& s2 = f.segments[j];
            if (s1.shares_endpoint(s2) ||
                !pair_satisfies(classify_pair(s1, s2, ps), f.relation))
                return {false, std::make_pair(s1, s2)};
        }
    return {};
}

namespace {

class Bits {
  public:
    explicit Bits(int n = 0) : n_(n), w_((n + 63) / 64, 0) {}
    void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const {
        return (w_[i >> 6] >> (i & 63)) & 1;
    }
    bool empty() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    int first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k * 64 + __builtin_ctzll(w_[k]));
        return -1;
    }
    void intersect(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    }
    void subtract(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    }
    int count() const {
        int c = 0;
        for (auto x : w_) c += __builtin_popcountll(x);
        return c;
    }

  private:
    int n_;
    std::vector<std::uint64_t> w_;
};

struct CliqueSearch {
    int n = 0;
    std::vector<Bits> adj;
    std::vector<int> best;
    std::vector<int> stack;
    int target = -1;  // stop early once reached
    std::chrono::steady_clock::time_point deadline;
    bool timed_out = false;
    long node_budget_check = 0;

    bool out_of_time() {
        if (timed_out) return true;
        if (++node_budget_check % 1024 != 0) return false;
        if (std::chrono::steady_clock::now() >= deadline) timed_out = true;
        return timed_out;
    }

    // Greedy coloring of P; emits vertices in nondecreasing color order.
    void color_sort(const Bits& p, std::vector<std::pair<int, int>>& out) {
        out.clear();
        Bits un = p;
        int color = 0;
        while (!un.empty()) {
            ++color;
            Bits avail = un;
            while (!avail.empty()) {
                int v = avail.first();
                out.push_back({v, color});
                avail.reset(v);
                avail.subtract(adj[v]);
                un.reset(v);
            }
        }
    }

    void expand(Bits p) {
        if (out_of_time()) return;
        std::vector<std::pair<int, int>> order;
        color_sort(p, order);
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            auto [v, c] = order[idx];
            if (static_cast<int>(stack.size()) + c <=
                static_cast<int>(best.size()))
                return;
            if (target >= 0 && static_cast<int>(best.size()) >= target) return;
            stack.push_back(v);
            Bits p2 = p;
            p2.intersect(adj[v]);
            if (p2.empty()) {
                if (stack.size() > best.size()) best = stack;
            } else {
                expand(p2);
            }
            stack.pop_back();
            p.reset(v);
            if (timed_out) return;
        }
    }
};

}  // namespace

CliqueResult max_clique(const std::vector<std::vector<bool>>& adj_matrix,
                        int upper_hint, double timeout_seconds) {
    const int n = static_cast<int>(adj_matrix.size());
    CliqueResult res;
    if (n == 0) return res;

    // Vertices sorted by degree descending (stable on index) for the search
    // order; all indices reported in the original numbering.
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && adj_matrix[i][j]) ++deg[i];
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return deg[a] > deg[b]; });
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;

    CliqueSearch cs;
    cs.n = n;
    cs.adj.assign(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && adj_matrix[perm[i]][perm[j]]) cs.adj[i].set(j);
    cs.target = upper_hint;
    cs.deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(timeout_seconds));

    Bits all(n);
    for (int i = 0; i < n; ++i) all.set(i);
    std::vector<std::pair<int, int>> root_order;
    cs.color_sort(all, root_order);
    int root_bound = root_order.empty() ? 0 : root_order.back().second;
    if (upper_hint >= 0) root_bound = std::min(root_bound, upper_hint);

    cs.expand(all);

    res.complete = !cs.timed_out;
    res.upper_bound =
        res.complete ? static_cast<int>(cs.best.size()) : root_bound;
    res.members.reserve(cs.best.size());
    for (int v : cs.best) res.members.push_back(perm[v]);
    std::sort(res.members.begin(), res.members.end());
    return res;
}

SolveResult max_pairwise_family(const ColoredPointSet& ps, FamilyRelation rel,
                                SegmentFilter filter, int upper_hint,
                                double timeout_seconds) {
    const int n = static_cast<int>(ps.size());
    std::vector<Segment> cands;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (filter == SegmentFilter::BicoloredOnly) {
                Color ci = ps[i].color, cj = ps[j].color;
                bool bicolored = (ci == Color::Red && cj == Color::Blue) ||
                                 (ci == Color::Blue && cj == Color::Red);
                if (!bicolored) continue;
            }
            cands.emplace_back(i, j);
        }

    const int m = static_cast<int>(cands.size());
    std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) {
            if (cands[u].shares_endpoint(cands[v])) continue;
            if (pair_satisfies(classify_pair(cands[u], cands[v], ps), rel))
                adj[u][v] = adj[v][u] = true;
        }

    CliqueResult cq = max_clique(adj, upper_hint, timeout_seconds);
    SolveResult out;
    out.family.relation = rel;
    for (int v : cq.members) out.family.segments.push_back(cands[v]);
    std::sort(out.family.segments.begin(), out.family.segments.end());
    out.complete = cq.complete;
    out.upper_bound = cq.upper_bound;
    return out;
}

std::optional<Family> can_be_crossed(const ColoredPointSet& ps,
                                     const std::vector<int>& a,
                                     const std::vector<int>& b) {
    std::optional<RankLabeling> lab = rank_condition(ps, a, b, false);
    if (!lab) return std::nullopt;
    Family f;
    f.relation = FamilyRelation::Crossing;
    for (std::size_t i = 0; i < lab->a_order.size(); ++i)
        f.segments.emplace_back(lab->a_order[i], lab->b_order[i]);
    FamilyCheck check = verify_family(f, ps);
    if (!check.ok)
        throw std::logic_error(
            "can_be_crossed: rank labeling did not yield a crossing family");
    return f;
}

Family sqrt_family_one_avoiding(const ColoredPointSet& ps,
                                const Partition2& partition) {
    if (partition.set_a.size() != partition.set_b.size())
        throw std::invalid_argument("sqrt family requires equal side sizes");
    PermTable table = build_table(ps, partition);  // checks 1-avoidance
    const int n = static_cast<int>(table.rows.size());
    const int mid = (n + 1) / 2;  // 1-based middle row
    const std::vector<int>& row = table.rows[mid - 1];

    // Longest strictly monotone subsequences, leftmost-index tie break.
    auto longest_monotone = [&](bool increasing) {
        std::vector<int> len(n, 1), prev(n, -1);
        int best = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < i; ++j) {
                bool ok = increasing ? row[j] < row[i] : row[j] > row[i];
                if (ok && len[j] + 1 > len[i]) {
                    len[i] = len[j] + 1;
                    prev[i] = j;
                }
            }
            if (len[i] > len[best]) best = i;
        }
        std::vector<int> out;
        for (int i = best; i >= 0; i = prev[i]) out.push_back(row[i]);
        std::reverse(out.begin(), out.end());
        return out;
    };
    std::vector<int> inc = longest_monotone(true);
    std::vector<int> dec = longest_monotone(false);

    const int inc_rows = mid;          // rows 1..mid keep inc order
    const int dec_rows = n - mid + 1;  // rows mid..n keep dec order
    int inc_size = std::min<int>(inc.size(), inc_rows);
    int dec_size = std::min<int>(dec.size(), dec_rows);

    bool use_inc = inc_size >= dec_size;
    int l = use_inc ? inc_size : dec_size;
    std::vector<int> elems(use_inc ? inc.begin() : dec.begin(),
                           (use_inc ? inc.begin() : dec.begin()) + l);
    std::vector<int> rows(l);
    for (int i = 0; i < l; ++i) rows[i] = use_inc ? i : (mid - 1 + i);

    // The chosen rows hold the elements in one common order; the diagonal is
    // that order read off position by position.
    std::vector<int> sorted_elems = elems;
    std::sort(sorted_elems.begin(), sorted_elems.end());
    for (int r : rows) {
        std::vector<int> restr;
        for (int v : table.rows[r])
            if (std::binary_search(sorted_elems.begin(), sorted_elems.end(), v))
                restr.push_back(v);
        if (restr != elems)
            throw std::logic_error("sqrt family: monotone block not preserved");
    }

    Family f;
    f.relation = FamilyRelation::Crossing;
    for (int i = 0; i < l; ++i)
        f.segments.emplace_back(table.row_sources[rows[i]],
                                table.label_sources[elems[i] - 1]);
    std::sort(f.segments.begin(), f.segments.end());
    FamilyCheck check = verify_family(f, ps);
    if (!check.ok)
        throw std::logic_error("sqrt family: extracted family fails to cross");
    return f;
}

}  // namespace crossfam
