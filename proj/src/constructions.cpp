#include "crossfam/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "crossfam/arrangements.hpp"
#include "crossfam/crossing_solvers.hpp"
#include "crossfam/duality.hpp"
#include "crossfam/tables.hpp"

namespace crossfam {

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
}

Rat Rng::rat_in_unit(long denom) {
    return Rat(uniform(-denom, denom), denom);
}

namespace {

// Distance from p to the line through c with direction d stays within w:
// ((p-c) x d)^2 <= w^2 * |d|^2, exactly.
bool within_strip(const Point& p, const Point& c, const Rat& dx, const Rat& dy,
                  const Rat& w) {
    Rat cr = (p.x - c.x) * dy - (p.y - c.y) * dx;
    return cr * cr <= w * w * (dx * dx + dy * dy);
}

bool inside_disk(const Point& p, const Point& c, const Rat& r) {
    Rat dx = p.x - c.x, dy = p.y - c.y;
    return dx * dx + dy * dy < r * r;
}

// count points spread along direction d around c, inside radius r, within a
// strip of half-width r/(2*10^6) around the axis.
std::vector<Point> near_collinear_points(const Point& c, const Rat& dx,
                                         const Rat& dy, const Rat& r, int count,
                                         Rng& rng) {
    std::vector<Point> out;
    Rat len_bound = 1 + rat_abs(dx) + rat_abs(dy);
    Rat px = -dy, py = dx;
    for (int j = 0; j < count; ++j) {
        // Axis offsets in (-r/2, r/2) scaled by the direction bound.
        Rat alpha = Rat(2 * j - count + 1, 2 * count) +
                    rng.rat_in_unit() / (8 * count);
        Rat t = alpha * r / (2 * len_bound);
        Rat beta = rng.rat_in_unit();
        Rat u = beta * r / (Rat(4000000) * len_bound);
        out.emplace_back(c.x + t * dx + u * px, c.y + t * dy + u * py);
    }
    return out;
}

std::vector<Point> scattered_points(const Point& c, const Rat& r, int count,
                                    Rng& rng) {
    std::vector<Point> out;
    for (int j = 0; j < count; ++j)
        out.emplace_back(c.x + rng.rat_in_unit() * r / 2,
                         c.y + rng.rat_in_unit() * r / 2);
    return out;
}

bool all_distinct(const ColoredPointSet& ps) {
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            if (ps[i] == ps[j]) return false;
    return true;
}

}  // namespace

DiskConstruction build_nover4(int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("build_nover4 needs k >= 1");
    // Pinwheel of three near-collinear discs plus the core disc at the
    // origin; each disc axis separates the next disc from the rest.
    std::vector<Point> centers = {
        Point(rat(-433, 100), rat(-5, 2)),
        Point(rat(433, 100), rat(-5, 2)),
        Point(rat(0, 1), rat(5, 1)),
        Point(rat(0, 1), rat(0, 1)),
    };
    std::vector<std::pair<Rat, Rat>> axes = {
        {rat(1), rat(268, 1000)},   // 15 degrees
        {rat(1), rat(-1)},          // 135 degrees
        {rat(1), rat(3732, 1000)},  // 255 degrees
    };

    Rat r(1, 8);
    for (int attempt = 0; attempt < 40; ++attempt, r /= 4) {
        Rng rng(seed + attempt);
        DiskConstruction out;
        out.centers = centers;
        out.disks.assign(4, {});
        for (int d = 0; d < 4; ++d) {
            std::vector<Point> pts =
                d < 3 ? near_collinear_points(centers[d], axes[d].first,
                                              axes[d].second, r, k, rng)
                      : scattered_points(centers[d], r, k, rng);
            for (const Point& p : pts) {
                out.disks[d].push_back(static_cast<int>(out.points.size()));
                out.points.points.push_back(p);
            }
        }
        ConstructionCertificate cert;
        cert.add("distinct-points", all_distinct(out.points));
        cert.add("general-position", is_general_position(out.points).ok);
        bool radii = true, strips = true;
        for (int d = 0; d < 4; ++d)
            for (int i : out.disks[d])
                radii = radii && inside_disk(out.points[i], centers[d], r);
        for (int d = 0; d < 3; ++d)
            for (int i : out.disks[d])
                strips = strips && within_strip(out.points[i], centers[d],
                                                axes[d].first, axes[d].second,
                                                r / 1000000);
        cert.add("points-inside-disks", radii);
        cert.add("near-collinear-strips", strips);
        for (int i = 0; i < 3; ++i) {
            std::vector<int> rest = out.disks[(i + 2) % 3];
            rest.insert(rest.end(), out.disks[3].begin(), out.disks[3].end());
            bool ok = separates(out.points, out.disks[i],
                                out.disks[(i + 1) % 3], rest);
            cert.add("separates-D" + std::to_string(i + 1), ok);
        }
        out.certificate = cert;
        if (cert.all_passed()) return out;
    }
    throw std::runtime_error("build_nover4: certificate never passed");
}

DiskConstruction build_24_config(int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("build_24_config needs k >= 1");
    // Wing 1 centers; wings 2 and 3 are near-exact 120-degree rotations.
    const Point d1(rat(0), rat(5));
    const Point a1(rat(-1, 5), rat(1, 3));
    const Point b1(rat(-33, 200), rat(5, 6));
    const Point c1(rat(1, 30), rat(29, 30));
    // cos 120 = -1/2 exactly; sin 120 rationalized to 17 digits.
    const Rat rc = rat(-1, 2);
    const Rat rs = parse_rat("86602540378443865/100000000000000000");
    auto rot = [&](const Point& p) {
        return Point(rc * p.x - rs * p.y, rs * p.x + rc * p.y);
    };

    std::vector<Point> centers(12);
    centers[0] = d1;
    centers[3] = a1;
    centers[6] = b1;
    centers[9] = c1;
    for (int g = 0; g < 4; ++g)
        for (int i = 1; i < 3; ++i)
            centers[3 * g + i] = rot(centers[3 * g + i - 1]);

    // D-cluster axes: the wing direction, pinwheel-tilted like the 4k
    // template so the cluster lines separate the other two D-discs.
    std::vector<std::pair<Rat, Rat>> daxis(3);
    daxis[0] = {rat(1), rat(37320508, 10000000)};
    for (int i = 1; i < 3; ++i) {
        daxis[i] = {rc * daxis[i - 1].first - rs * daxis[i - 1].second,
                    rs * daxis[i - 1].first + rc * daxis[i - 1].second};
    }
    // S axes: the B->C direction per wing.
    std::vector<std::pair<Rat, Rat>> saxis(3);
    for (int i = 0; i < 3; ++i)
        saxis[i] = {centers[9 + i].x - centers[6 + i].x,
                    centers[9 + i].y - centers[6 + i].y};

    Rat rd(1, 10), ri(1, 200);
    for (int attempt = 0; attempt < 40; ++attempt, rd /= 4, ri /= 4) {
        Rng rng(seed + 1000 + attempt);
        DiskConstruction out;
        out.centers = centers;
        out.disks.assign(12, {});
        auto place = [&](int disk, const std::vector<Point>& pts) {
            for (const Point& p : pts) {
                out.disks[disk].push_back(static_cast<int>(out.points.size()));
                out.points.points.push_back(p);
            }
        };
        for (int i = 0; i < 3; ++i)
            place(i, near_collinear_points(centers[i], daxis[i].first,
                                           daxis[i].second, rd, 5 * k, rng));
        for (int i = 0; i < 3; ++i)
            place(3 + i, scattered_points(centers[3 + i], ri, k, rng));
        for (int i = 0; i < 3; ++i)
            place(6 + i, near_collinear_points(centers[6 + i], saxis[i].first,
                                               saxis[i].second, ri, k, rng));
        for (int i = 0; i < 3; ++i)
            place(9 + i, near_collinear_points(centers[9 + i], saxis[i].first,
                                               saxis[i].second, ri, k, rng));

        ConstructionCertificate cert;
        cert.add("distinct-points", all_distinct(out.points));
        cert.add("general-position", is_general_position(out.points).ok);

        bool radii = true;
        for (int d = 0; d < 12; ++d)
            for (int i : out.disks[d])
                radii = radii && inside_disk(out.points[i], centers[d],
                                             d < 3 ? rd : ri);
        cert.add("points-inside-disks", radii);

        // S_i points (B_i plus C_i) near-collinear along the S axis.
        bool strips = true;
        for (int i = 0; i < 3; ++i) {
            Rat sr = ri * 8 + rat_abs(centers[9 + i].x - centers[6 + i].x) +
                     rat_abs(centers[9 + i].y - centers[6 + i].y);
            for (int g : {6 + i, 9 + i})
                for (int p : out.disks[g])
                    strips = strips &&
                             within_strip(out.points[p], centers[6 + i],
                                          saxis[i].first, saxis[i].second,
                                          sr / 1000000);
        }
        cert.add("s-near-collinear", strips);

        // Full separating property of the D-discs.
        for (int i = 0; i < 3; ++i)
            cert.add("d-separates-" + std::to_string(i + 1),
                     separates(out.points, out.disks[i],
                               out.disks[(i + 1) % 3], out.disks[(i + 2) % 3]));

        // Core containment: every inner point lies, for every D-cluster pair
        // line, on the same side as the intersections of the other two
        // clusters' pair lines.
        bool core = true;
        {
            std::vector<std::vector<Line>> cluster_lines(3);
            for (int i = 0; i < 3; ++i)
                for (std::size_t u = 0; u < out.disks[i].size(); ++u)
                    for (std::size_t v = u + 1; v < out.disks[i].size(); ++v)
                        cluster_lines[i].push_back(
                            Line::through(out.points[out.disks[i][u]],
                                          out.points[out.disks[i][v]]));
            std::vector<int> inner;
            for (int d = 3; d < 12; ++d)
                inner.insert(inner.end(), out.disks[d].begin(),
                             out.disks[d].end());
            for (int i = 0; i < 3 && core; ++i) {
                const auto& lj = cluster_lines[(i + 1) % 3];
                const auto& lk = cluster_lines[(i + 2) % 3];
                for (const Line& l : cluster_lines[i]) {
                    int side = 0;
                    for (const Line& g1 : lj) {
                        for (const Line& g2 : lk) {
                            bool par = g1.vertical ? g2.vertical
                                                   : (!g2.vertical &&
                                                      g1.a == g2.a);
                            if (par) continue;
                            int s = l.side_of(intersection_point(g1, g2));
                            if (s == 0 || (side != 0 && s != side)) {
                                core = false;
                                break;
                            }
                            side = s;
                        }
                        if (!core) break;
                    }
                    if (!core) break;
                    for (int p : inner)
                        if (l.side_of(out.points[p]) != side) {
                            core = false;
                            break;
                        }
                    if (!core) break;
                }
            }
        }
        cert.add("inner-points-in-core", core);

        // Orientation bullets on the disk centers, every wing.
        auto cD = [&](int i) { return centers[(i % 3 + 3) % 3]; };
        auto cA = [&](int i) { return centers[3 + (i % 3 + 3) % 3]; };
        auto cB = [&](int i) { return centers[6 + (i % 3 + 3) % 3]; };
        auto cC = [&](int i) { return centers[9 + (i % 3 + 3) % 3]; };
        for (int i = 0; i < 3; ++i) {
            std::string t = std::to_string(i + 1);
            cert.add("orient-DA+1B-" + t,
                     orientation(cD(i), cA(i + 1), cB(i)) == -1);
            cert.add("orient-DA+1C-" + t,
                     orientation(cD(i), cA(i + 1), cC(i)) == +1);
            cert.add("orient-BA+1A-" + t,
                     orientation(cB(i), cA(i + 1), cA(i)) == -1);
            cert.add("orient-CA+1A+2-" + t,
                     orientation(cC(i), cA(i + 1), cA(i + 2)) == +1);
            cert.add("orient-DAB-" + t,
                     orientation(cD(i), cA(i), cB(i)) == +1);
            cert.add("orient-DA+2C-" + t,
                     orientation(cD(i), cA(i + 2), cC(i)) == -1);
            cert.add("orient-CB+1A-" + t,
                     orientation(cC(i), cB(i + 1), cA(i)) == +1);
        }

        // Center-level crossing-family bullets.
        {
            ColoredPointSet da;
            for (int i = 0; i < 3; ++i) da.points.push_back(cD(i));
            for (int i = 0; i < 3; ++i) da.points.push_back(cA(i));
            bool spokes_cross = true;
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    Segment s1(i, 3 + (i + 1) % 3);
                    Segment s2(j, 3 + (j + 1) % 3);
                    if (classify_pair(s1, s2, da) != PairRelation::Crossing)
                        spokes_cross = false;
                }
            cert.add("DA-spokes-cross", spokes_cross);

            auto six_max = [&](int base) {
                ColoredPointSet six;
                for (int i = 0; i < 3; ++i) six.points.push_back(cD(i));
                for (int i = 0; i < 3; ++i)
                    six.points.push_back(centers[base + i]);
                SolveResult r = max_pairwise_family(
                    six, FamilyRelation::Crossing, SegmentFilter::All);
                return static_cast<int>(r.family.size());
            };
            cert.add("DB-max-crf-2", six_max(6) == 2);
            cert.add("DC-max-crf-2", six_max(9) == 2);
        }

        // Every S_i pair line separates D_i from the rest.
        bool s_sep = true;
        for (int i = 0; i < 3 && s_sep; ++i) {
            std::vector<int> s_pts = out.disks[6 + i];
            s_pts.insert(s_pts.end(), out.disks[9 + i].begin(),
                         out.disks[9 + i].end());
            std::vector<int> rest;
            for (int d = 0; d < 12; ++d) {
                if (d == i || d == 6 + i || d == 9 + i) continue;
                rest.insert(rest.end(), out.disks[d].begin(),
                            out.disks[d].end());
            }
            for (std::size_t u = 0; u < s_pts.size() && s_sep; ++u)
                for (std::size_t v = u + 1; v < s_pts.size() && s_sep; ++v) {
                    const Point& p = out.points[s_pts[u]];
                    const Point& q = out.points[s_pts[v]];
                    int side_d = 0, side_rest = 0;
                    for (int t : out.disks[i]) {
                        int s = orientation(p, q, out.points[t]);
                        if (s == 0 || (side_d != 0 && s != side_d)) s_sep = false;
                        side_d = s;
                    }
                    for (int t : rest) {
                        int s = orientation(p, q, out.points[t]);
                        if (s == 0 || (side_rest != 0 && s != side_rest))
                            s_sep = false;
                        side_rest = s;
                    }
                    if (side_d == side_rest) s_sep = false;
                }
        }
        cert.add("s-lines-separate-D", s_sep);

        // Disks inherit the orientation of their centers on all triples from
        // three distinct disks.
        bool inherit = true;
        for (int x = 0; x < 12 && inherit; ++x)
            for (int y = x + 1; y < 12 && inherit; ++y)
                for (int z = y + 1; z < 12 && inherit; ++z) {
                    int want = orientation(centers[x], centers[y], centers[z]);
                    for (int px : out.disks[x]) {
                        for (int py : out.disks[y]) {
                            for (int pz : out.disks[z])
                                if (orientation(out.points[px], out.points[py],
                                                out.points[pz]) != want) {
                                    inherit = false;
                                    break;
                                }
                            if (!inherit) break;
                        }
                        if (!inherit) break;
                    }
                }
        cert.add("triples-inherit-center-orientation", inherit);

        // Combinatorial three-fold symmetry of the centers.
        bool sym = true;
        auto center_of = [&](int g, int i) {
            return centers[3 * g + ((i % 3) + 3) % 3];
        };
        for (int g1 = 0; g1 < 4 && sym; ++g1)
            for (int g2 = 0; g2 < 4 && sym; ++g2)
                for (int g3 = 0; g3 < 4 && sym; ++g3)
                    for (int i1 = 0; i1 < 3 && sym; ++i1)
                        for (int i2 = 0; i2 < 3 && sym; ++i2)
                            for (int i3 = 0; i3 < 3 && sym; ++i3) {
                                if (g1 == g2 && i1 == i2) continue;
                                if (g1 == g3 && i1 == i3) continue;
                                if (g2 == g3 && i2 == i3) continue;
                                int o1 = orientation(center_of(g1, i1),
                                                     center_of(g2, i2),
                                                     center_of(g3, i3));
                                int o2 = orientation(center_of(g1, i1 + 1),
                                                     center_of(g2, i2 + 1),
                                                     center_of(g3, i3 + 1));
                                if (o1 != o2) sym = false;
                            }
        cert.add("threefold-symmetry", sym);

        out.certificate = cert;
        if (cert.all_passed()) return out;
        // Center-level constraints cannot improve by shrinking; fail fast.
        for (const auto& [name, ok] : cert.checks)
            if (!ok && (name.rfind("orient-", 0) == 0 ||
                        name.rfind("D", 0) == 0 || name == "DA-spokes-cross" ||
                        name == "threefold-symmetry"))
                throw std::runtime_error("build_24_config: constraint failed: " +
                                         name);
    }
    throw std::runtime_error("build_24_config: certificate never passed");
}

BlowUpResult blow_up(const ColoredPointSet& ps, int n, std::uint64_t seed,
                     std::optional<Rat> epsilon) {
    const int m = static_cast<int>(ps.size());
    if (m == 0 || n < m)
        throw std::invalid_argument("blow_up needs n >= |P| >= 1");

    Rat eps;
    if (epsilon) {
        eps = *epsilon;
    } else {
        bool first = true;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                Rat d = std::max(rat_abs(ps[i].x - ps[j].x),
                                 rat_abs(ps[i].y - ps[j].y));
                if (first || d < eps) eps = d;
                first = false;
            }
        eps /= 4;
        if (m == 1) eps = 1;
    }

    const int base = n / m, extra = n % m;
    for (int attempt = 0; attempt < 40; ++attempt, eps /= 4) {
        Rng rng(seed + attempt);
        BlowUpResult out;
        // Copies spread near-collinearly along one global direction. Copies
        // of segments that share a base endpoint then cross near the shared
        // cluster only in one consistent order, which keeps the maximum
        // family within the contraction bound.
        Rat dx(1), dy(7 + 2 * attempt, 49);
        for (int i = 0; i < m; ++i) {
            int copies = base + (i < extra ? 1 : 0);
            for (int t = 0; t < copies; ++t) {
                Point p = ps[i];
                if (!(epsilon && *epsilon == 0)) {
                    Rat step = eps * Rat(2 * t - copies + 1, 2 * copies);
                    Rat jit = rng.rat_in_unit() * eps / 1000000;
                    p.x += step * dx - jit * dy;
                    p.y += step * dy + jit * dx;
                }
                out.origin.push_back(i);
                out.points.points.push_back(p);
            }
        }
        if (epsilon && *epsilon == 0) return out;  // degenerate by request

        ConstructionCertificate cert;
        cert.add("distinct-points", all_distinct(out.points));
        cert.add("general-position", is_general_position(out.points).ok);
        bool inherit = true;
        const int total = static_cast<int>(out.points.size());
        for (int a = 0; a < total && inherit; ++a)
            for (int b = a + 1; b < total && inherit; ++b) {
                if (out.origin[a] == out.origin[b]) continue;
                for (int c = b + 1; c < total; ++c) {
                    if (out.origin[c] == out.origin[a] ||
                        out.origin[c] == out.origin[b])
                        continue;
                    if (orientation(out.points[a], out.points[b],
                                    out.points[c]) !=
                        orientation(ps[out.origin[a]], ps[out.origin[b]],
                                    ps[out.origin[c]])) {
                        inherit = false;
                        break;
                    }
                }
            }
        cert.add("cross-cluster-orientations", inherit);
        out.certificate = cert;
        if (cert.all_passed()) return out;
    }
    throw std::runtime_error("blow_up: certificate never passed");
}

ParallelUpperResult build_parallel_upper(int n) {
    if (n < 8 || n % 4 != 0)
        throw std::invalid_argument("build_parallel_upper needs n >= 8, 4 | n");
    const int m = n / 2;
    const Rat L(100), gamma(1, 1000000), eta(1, 100000);
    Rng rng(12345);

    for (int attempt = 0; attempt < 40; ++attempt) {
        ParallelUpperResult out;
        // Blues on a flat parabolic arc opening east.
        for (int j = 0; j < m; ++j) {
            Rat y(2 * j - m + 1);
            Rat x = L + gamma * y * y + rng.rat_in_unit() / 1000000000;
            out.partition.set_a.push_back(static_cast<int>(out.points.size()));
            out.points.points.emplace_back(x, y, Color::Blue);
        }
        // Reds on a flat parabolic arc west; their pair lines stay within the
        // blue median gap at x = L.
        for (int i = 0; i < m; ++i) {
            Rat u(2 * i - m + 1);
            Rat x = Rat(-100) + u;
            Rat y = eta * u * u + rng.rat_in_unit() / 1000000000;
            out.partition.set_b.push_back(static_cast<int>(out.points.size()));
            out.points.points.emplace_back(x, y, Color::Red);
        }

        ConstructionCertificate cert;
        cert.add("general-position", is_general_position(out.points).ok);
        cert.add("one-avoiding", is_one_avoiding(out.points, out.partition));
        bool halving = true;
        for (std::size_t u = 0; u < out.partition.set_b.size() && halving; ++u)
            for (std::size_t v = u + 1; v < out.partition.set_b.size(); ++v) {
                const Point& p = out.points[out.partition.set_b[u]];
                const Point& q = out.points[out.partition.set_b[v]];
                int above = 0, below = 0;
                for (int b : out.partition.set_a) {
                    int s = orientation(p, q, out.points[b]);
                    if (s > 0) ++above;
                    else if (s < 0) ++below;
                    else halving = false;
                }
                if (above != m / 2 || below != m / 2) halving = false;
                if (!halving) break;
            }
        cert.add("red-pair-lines-halve-blues", halving);
        out.certificate = cert;
        if (cert.all_passed()) return out;
    }
    throw std::runtime_error("build_parallel_upper: certificate never passed");
}

FocalConstantResult build_focal_constant(int n) {
    if (n < 3) throw std::invalid_argument("build_focal_constant needs n >= 3");
    FocalConstantResult out;

    // Exact recurrence for the red heights.
    out.red_heights = {Rat(1), Rat(2)};
    for (int i = 2; i < n; ++i) {
        Rat yi = out.red_heights.back();
        Rat xi = 1 + (yi - 1) * (n - 1);  // d_i through (1,1) and (2,y_i) at b_n
        out.red_heights.push_back(xi + rat(1, 2));
    }

    // Perturbed pre-rotation lines: blues x = i tilted by i*tau (as x = i +
    // tau*i*y), reds y = y_j tilted by j*tau'. The tilt shrinks with the
    // squared height bound so grid-line slopes stay within the half-unit
    // margin of the recurrence.
    Rat height_bound = out.red_heights.back() + 2;
    const Rat tau = Rat(1, 1000000000) / (height_bound * height_bound);
    std::vector<Line> pre;  // reds then blues, colors attached
    for (int j = 0; j < n; ++j)
        pre.push_back(Line::slope_intercept(Rat((j + 1) * (j + 1) + j) * tau,
                                            out.red_heights[j], Color::Red));
    // A near-vertical line x = i + s*y maps to y = (x - i)/s; slope 1/s.
    // Quadratic tilts keep the family non-concurrent (affine tilts would
    // meet at a common point and collapse the duals onto a line).
    std::vector<std::pair<Rat, Rat>> blue_sx;  // (i, s)
    for (int i = 1; i <= n; ++i)
        blue_sx.push_back({Rat(i), Rat(i * i + i + 1) * tau});

    ConstructionCertificate cert;

    // Grid-line property per level: every line through two grid points of
    // L_i that is not in L_i meets every blue strictly below r_{i+1}.
    bool grid_ok = true;
    {
        std::vector<std::vector<Point>> grid(n);  // grid[j][i]: r_j x b_i
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                // x = i+1 + s*y and y = a*x + c meet where
                // y = a*(i+1) + a*s*y + c.
                const Rat& a = pre[j].a;
                const Rat& c = pre[j].b;
                Rat s = blue_sx[i].second;
                Rat y = (a * blue_sx[i].first + c) / (1 - a * s);
                grid[j].push_back(Point(blue_sx[i].first + s * y, y));
            }
        for (int lvl = 2; lvl < n && grid_ok; ++lvl) {
            // Lines through grid points of L_lvl = {r_1..r_lvl} x blues,
            // skipping pairs on a common line of L_lvl.
            std::vector<std::pair<Point, std::pair<int, int>>> pts;
            for (int j = 0; j < lvl; ++j)
                for (int i = 0; i < n; ++i) pts.push_back({grid[j][i], {j, i}});
            Rat next_height = out.red_heights[lvl];
            for (std::size_t u = 0; u < pts.size() && grid_ok; ++u)
                for (std::size_t v = u + 1; v < pts.size(); ++v) {
                    if (pts[u].second.first == pts[v].second.first) continue;
                    if (pts[u].second.second == pts[v].second.second) continue;
                    const Point& pu = pts[u].first;
                    const Point& pv = pts[v].first;
                    Rat slope = (pv.y - pu.y) / (pv.x - pu.x);
                    bool ok = true;
                    for (int i = 0; i < n; ++i) {
                        Rat x(i + 1);
                        Rat h = pu.y + slope * (x - pu.x);
                        if (!(h < next_height)) ok = false;
                    }
                    if (!ok) {
                        grid_ok = false;
                        break;
                    }
                }
        }
    }
    cert.add("grid-line-property", grid_ok);

    // Rotate 36.87 degrees clockwise: (c, s) = (4/5, -3/5); blues end with
    // positive dual x, reds negative.
    const Rat rc = rat(4, 5), rsn = rat(-3, 5);
    auto rotate_line = [&](const Point& p0, const Point& p1, Color col) {
        return Line::through(rotate_point(p0, rc, rsn),
                             rotate_point(p1, rc, rsn), col);
    };
    for (int j = 0; j < n; ++j) {
        Point p0(Rat(0), pre[j].b);
        Point p1(Rat(1), pre[j].a + pre[j].b);
        out.lines.push_back(rotate_line(p0, p1, Color::Red));
    }
    for (int i = 0; i < n; ++i) {
        Point p0(blue_sx[i].first, Rat(0));
        Point p1(blue_sx[i].first + blue_sx[i].second, Rat(1));
        out.lines.push_back(rotate_line(p0, p1, Color::Blue));
    }

    for (const Line& l : out.lines) {
        out.dual_points.points.push_back(line_to_dual_point(l));
        if (l.color == Color::Blue)
            out.partition.set_a.push_back(
                static_cast<int>(out.dual_points.size()) - 1);
        else
            out.partition.set_b.push_back(
                static_cast<int>(out.dual_points.size()) - 1);
    }

    cert.add("dual-general-position",
             is_general_position(out.dual_points).ok);
    cert.add("duals-straddle-y-axis", [&] {
        for (int i : out.partition.set_a)
            if (sign(out.dual_points[i].x) <= 0) return false;
        for (int i : out.partition.set_b)
            if (sign(out.dual_points[i].x) >= 0) return false;
        return true;
    }());
    cert.add("duals-mutually-avoiding",
             mutually_avoiding(out.dual_points, out.partition.set_a,
                               out.partition.set_b));
    out.certificate = cert;
    if (!cert.all_passed())
        throw std::runtime_error("build_focal_constant: failed: " +
                                 cert.first_failure());
    return out;
}

namespace {

// Frozen reconstruction parameters for the 11+11 arrangement; developed with
// the exhaustive search as the oracle. Each entry: slope and intercept of a
// red line in thousandths.
struct Fig9Params {
    long blue_slope_base = 40000;
    long blue_slope_step = 125;
    std::vector<std::pair<long, long>> reds;  // (slope*1000, intercept*1000)
};

std::vector<Line> fig9_lines(const Fig9Params& p) {
    std::vector<Line> lines;
    for (int i = 1; i <= 11; ++i) {
        Rat slope(p.blue_slope_base + i * p.blue_slope_step, 1000);
        // Blue b_i passes through (i, 0).
        lines.push_back(
            Line::slope_intercept(slope, -slope * Rat(i), Color::Blue));
    }
    for (auto [sm, sc] : p.reds)
        lines.push_back(
            Line::slope_intercept(Rat(sm, 1000), Rat(sc, 1000), Color::Red));
    return lines;
}

}  // namespace

NoSemiResult build_no_semialternating() {
    Fig9Params params;
    params.reds = {
        {11000, -66000}, {10000, -60000}, {9000, -54000}, {8000, -48000},
        {700, 10000},    {600, 20000},    {500, 30000},   {400, 40000},
        {300, 50000},    {200, 60000},    {100, 70000},
    };
    NoSemiResult out;
    out.lines = fig9_lines(params);

    ConstructionCertificate cert;
    cert.add("eleven-plus-eleven", out.lines.size() == 22);
    bool slopes_ok = true;
    for (const Line& b : out.lines)
        if (b.color == Color::Blue)
            for (const Line& r : out.lines)
                if (r.color == Color::Red && !(b.a > r.a)) slopes_ok = false;
    cert.add("blue-slopes-exceed-red", slopes_ok);

    // 1-avoiding: the dual point set splits by color with the blue side
    // avoiding the red side.
    {
        ColoredPointSet duals;
        Partition2 part;
        for (const Line& l : out.lines) {
            duals.points.push_back(line_to_dual_point(l));
            (l.color == Color::Blue ? part.set_a : part.set_b)
                .push_back(static_cast<int>(duals.size()) - 1);
        }
        cert.add("dual-one-avoiding", is_one_avoiding(duals, part));
    }

    SemiSearchResult sr = find_semialternating(
        out.lines, SemiMode::Semialternating, false, -1, 1800.0);
    cert.add("search-complete", sr.complete);
    cert.add("no-semialternating-pseudoline", !sr.witness.has_value());
    out.certificate = cert;
    return out;
}

ColoredPointSet random_point_set(int count, std::uint64_t seed,
                                 long coord_range) {
    Rng rng(seed);
    ColoredPointSet out;
    for (int i = 0; i < count; ++i) {
        for (int attempt = 0; attempt < 10000; ++attempt) {
            Point cand(Rat(rng.uniform(-coord_range, coord_range)),
                       Rat(rng.uniform(-coord_range, coord_range)));
            bool ok = true;
            for (std::size_t a = 0; a < out.size() && ok; ++a) {
                if (out[a] == cand) ok = false;
                for (std::size_t b = a + 1; b < out.size() && ok; ++b)
                    if (orientation(out[a], out[b], cand) == 0) ok = false;
            }
            if (ok) {
                out.points.push_back(cand);
                break;
            }
            if (attempt == 9999)
                throw std::runtime_error("random_point_set: sampling failed");
        }
    }
    return out;
}

OneAvoidingInstance random_one_avoiding(int per_side, std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        OneAvoidingInstance inst;
        // Reds scattered on the left.
        for (int i = 0; i < per_side; ++i) {
            inst.partition.set_b.push_back(
                static_cast<int>(inst.points.size()));
            inst.points.points.emplace_back(
                Rat(rng.uniform(-150, -50)) + rng.rat_in_unit() / 1000,
                Rat(rng.uniform(-2 * per_side, 2 * per_side)) +
                    rng.rat_in_unit() / 1000,
                Color::Red);
        }
        // Blues in a tall near-vertical sliver far right; their pair lines
        // stay near x = 1000 and miss the red hull.
        for (int i = 0; i < per_side; ++i) {
            inst.partition.set_a.push_back(
                static_cast<int>(inst.points.size()));
            inst.points.points.emplace_back(
                Rat(1000) + rng.rat_in_unit() / 1000,
                Rat(4 * i) + Rat(rng.uniform(0, 2)) + rng.rat_in_unit() / 8,
                Color::Blue);
        }
        if (!is_general_position(inst.points).ok) continue;
        if (!is_one_avoiding(inst.points, inst.partition)) continue;
        return inst;
    }
    throw std::runtime_error("random_one_avoiding: generation failed");
}

OneAvoidingInstance random_separable_pair(int per_side, std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        OneAvoidingInstance inst;
        for (int i = 0; i < per_side; ++i) {
            inst.partition.set_a.push_back(
                static_cast<int>(inst.points.size()));
            inst.points.points.emplace_back(
                Rat(rng.uniform(-200, -10)) + rng.rat_in_unit() / 100,
                Rat(rng.uniform(-100, 100)) + rng.rat_in_unit() / 100,
                Color::Blue);
        }
        for (int i = 0; i < per_side; ++i) {
            inst.partition.set_b.push_back(
                static_cast<int>(inst.points.size()));
            inst.points.points.emplace_back(
                Rat(rng.uniform(10, 200)) + rng.rat_in_unit() / 100,
                Rat(rng.uniform(-100, 100)) + rng.rat_in_unit() / 100,
                Color::Red);
        }
        if (!is_general_position(inst.points).ok) continue;
        return inst;
    }
    throw std::runtime_error("random_separable_pair: generation failed");
}

BarStack random_barstack_nn(int n, std::uint64_t seed) {
    if (n < 3 && n != 1)
        throw std::invalid_argument("random_barstack_nn needs n >= 3");
    Rng rng(seed);
    BarStack b;
    b.pillars = n;
    if (n == 1) return b;
    std::set<std::pair<int, int>> used;
    while (static_cast<int>(b.bars.size()) < n) {
        int a = static_cast<int>(rng.uniform(1, n));
        int c = static_cast<int>(rng.uniform(1, n));
        if (a == c) continue;
        if (a > c) std::swap(a, c);
        if (!used.insert({a, c}).second) continue;
        b.bars.push_back({a, c});
    }
    validate_barstack(b);
    return b;
}

}  // namespace crossfam
