#include "freecurve/grid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "freecurve/syzygy.hpp"

namespace freecurve {

namespace {

// Collinearity in the plane i + j + k = n reduces to a 2D cross product.
bool collinear(const GridPoint& p, const GridPoint& q, const GridPoint& r) {
    long long ax = q.i - p.i, ay = q.j - p.j;
    long long bx = r.i - p.i, by = r.j - p.j;
    return ax * by - ay * bx == 0;
}

struct LineKey {
    long long a, b, c;  // a*i + b*j + c = 0, primitive, canonical sign
    auto operator<=>(const LineKey&) const = default;
};

LineKey line_key(const GridPoint& p, const GridPoint& q) {
    long long a = q.j - p.j;
    long long b = -(q.i - p.i);
    long long c = -(a * p.i + b * p.j);
    long long g = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
    if (g > 1) { a /= g; b /= g; c /= g; }
    if (a < 0 || (a == 0 && b < 0)) { a = -a; b = -b; c = -c; }
    return {a, b, c};
}

MaximalSegment make_segment(int n, std::vector<GridPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const GridPoint& a, const GridPoint& b) {
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    MaximalSegment s;
    s.n = n;
    s.points = std::move(pts);
    s.extreme_p = s.points.front();
    s.extreme_q = s.points.back();
    int di = s.extreme_q.i - s.extreme_p.i;
    int dj = s.extreme_q.j - s.extreme_p.j;
    int dk = s.extreme_q.k - s.extreme_p.k;
    int g = std::gcd(std::gcd(std::abs(di), std::abs(dj)), std::abs(dk));
    s.d = g;
    s.direction = {di / g, dj / g, dk / g};
    if (s.direction[0] < 0 ||
        (s.direction[0] == 0 && (s.direction[1] < 0 ||
                                 (s.direction[1] == 0 && s.direction[2] < 0)))) {
        for (auto& v : s.direction) v = -v;
    }
    return s;
}

bool same_point_set(const std::vector<GridPoint>& a, const std::vector<GridPoint>& b) {
    return a == b;  // both sorted identically
}

}  // namespace

bool MaximalSegment::contains(const GridPoint& p) const {
    return std::find(points.begin(), points.end(), p) != points.end();
}

bool MaximalSegment::aligned_with(const GridPoint& vertex) const {
    return collinear(extreme_p, extreme_q, vertex);
}

bool operator<(const MaximalSegment& a, const MaximalSegment& b) {
    auto key = [](const MaximalSegment& s) {
        return std::tuple(s.direction, s.extreme_p.i, s.extreme_p.j, s.extreme_p.k);
    };
    return key(a) < key(b);
}

Grids build_grids(int n) {
    if (n < 3) throw std::invalid_argument("build_grids requires n >= 3");
    Grids g;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n - i; ++j) {
            GridPoint p{i, j, n - i - j};
            g.full.push_back(p);
            if (!is_vertex(p, n)) g.punctured.push_back(p);
        }
    return g;
}

std::vector<MaximalSegment> enumerate_maximal_segments(int n) {
    if (n < 3) throw std::invalid_argument("enumerate_maximal_segments requires n >= 3");
    auto pts = build_grids(n).punctured;
    std::map<LineKey, std::vector<GridPoint>> lines;
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            lines[line_key(pts[a], pts[b])];  // key only; members gathered below
    std::vector<MaximalSegment> out;
    out.reserve(lines.size());
    for (auto& [key, members] : lines) {
        for (const auto& p : pts)
            if (key.a * p.i + key.b * p.j + key.c == 0) members.push_back(p);
        out.push_back(make_segment(n, std::move(members)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

MaximalSegment segment_through(int n, const GridPoint& p, const GridPoint& q) {
    if (p == q) throw std::invalid_argument("segment_through requires distinct points");
    auto grids = build_grids(n);
    auto in_punctured = [&](const GridPoint& r) {
        return r.degree() == n && r.i >= 0 && r.j >= 0 && r.k >= 0 && !is_vertex(r, n);
    };
    if (!in_punctured(p) || !in_punctured(q))
        throw std::invalid_argument("segment_through requires points of T'");
    std::vector<GridPoint> members;
    for (const auto& r : grids.punctured)
        if (collinear(p, q, r)) members.push_back(r);
    return make_segment(n, std::move(members));
}

DistinguishedSets distinguished_sets(int n) {
    if (n < 4) throw std::invalid_argument("distinguished_sets requires n >= 4");
    DistinguishedSets s;
    s.gamma[0] = {{n - 1, 1, 0}, {n - 1, 0, 1}, {n - 2, 1, 1}};
    s.gamma[1] = {{0, n - 1, 1}, {1, n - 1, 0}, {1, n - 2, 1}};
    s.gamma[2] = {{0, 1, n - 1}, {1, 0, n - 1}, {1, 1, n - 2}};
    auto pts = build_grids(n).punctured;
    for (const auto& p : pts) {
        if (p.i <= 1) s.delta[0].push_back(p);
        if (p.j <= 1) s.delta[1].push_back(p);
        if (p.k <= 1) s.delta[2].push_back(p);
    }
    s.L[0] = segment_through(n, {1, n - 1, 0}, {1, 0, n - 1});
    s.L[1] = segment_through(n, {n - 1, 1, 0}, {0, 1, n - 1});
    s.L[2] = segment_through(n, {n - 1, 0, 1}, {0, n - 1, 1});
    for (int j = 1; j < n; ++j) {
        s.edge[0].push_back({0, j, n - j});
        s.edge[1].push_back({j, 0, n - j});
        s.edge[2].push_back({j, n - j, 0});
    }
    return s;
}

std::vector<MaximalSegment> hred_filter(const std::vector<MaximalSegment>& segments, int n) {
    auto ds = distinguished_sets(n);
    std::array<std::vector<GridPoint>, 3> edges;
    for (int l = 0; l < 3; ++l) {
        edges[static_cast<std::size_t>(l)] = ds.edge[static_cast<std::size_t>(l)];
        std::sort(edges[static_cast<std::size_t>(l)].begin(), edges[static_cast<std::size_t>(l)].end(),
                  [](const GridPoint& a, const GridPoint& b) {
                      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
                  });
    }
    auto meets = [](const MaximalSegment& s, const std::vector<GridPoint>& set) {
        for (const auto& p : set)
            if (s.contains(p)) return true;
        return false;
    };
    std::vector<MaximalSegment> out;
    for (const auto& s : segments) {
        bool is_edge = false;
        for (const auto& e : edges)
            if (same_point_set(s.points, e)) is_edge = true;
        if (is_edge) continue;
        for (int l = 0; l < 3; ++l) {
            if (meets(s, ds.gamma[static_cast<std::size_t>(l)]) &&
                meets(s, ds.delta[static_cast<std::size_t>(l)])) {
                out.push_back(s);
                break;
            }
        }
    }
    return out;
}

std::vector<ComponentDescriptor> enumerate_components(int n) {
    if (n < 3) throw std::invalid_argument("enumerate_components requires n >= 3");
    std::vector<ComponentDescriptor> out;

    ComponentDescriptor trivial;
    trivial.kind = ComponentKind::Trivial;
    for (const auto& name : coefficient_universe(n)) trivial.tied.push_back(name.str());
    out.push_back(std::move(trivial));

    for (const auto& p : build_grids(n).punctured) {
        ComponentDescriptor c;
        c.kind = ComponentKind::Singleton;
        c.point = p;
        for (const auto& name : tied_set(std::vector<GridPoint>{p}, n)) c.tied.push_back(name.str());
        c.linear_forms.push_back({p.i, p.j, p.k});
        out.push_back(std::move(c));
    }

    GridPoint vertex{n, 0, 0};
    for (const auto& s : enumerate_maximal_segments(n)) {
        if (s.aligned_with(vertex)) continue;
        ComponentDescriptor c;
        c.kind = ComponentKind::Segment;
        c.segment = s;
        for (const auto& name : tied_set(s.points, n)) c.tied.push_back(name.str());
        for (const auto& p : s.points) c.linear_forms.push_back({p.i, p.j, p.k});
        out.push_back(std::move(c));
    }
    return out;
}

long long euler_totient(int m) {
    long long result = m;
    int x = m;
    for (int p = 2; static_cast<long long>(p) * p <= x; ++p) {
        if (x % p == 0) {
            while (x % p == 0) x /= p;
            result -= result / p;
        }
    }
    if (x > 1) result -= result / x;
    return result;
}

namespace {
long long choose2(long long i) { return i > 0 ? i * (i - 1) / 2 : 0; }
}  // namespace

long long lines_through_grid(int m) {
    long long total = 0;
    for (int j = 1; j < m; ++j)
        total += euler_totient(j) * (choose2(m - j + 1) - choose2(m - 2 * j + 1));
    return 3 * total;
}

long long count_components(int n) {
    if (n < 3) throw std::invalid_argument("count_components requires n >= 3");
    long long p1 = static_cast<long long>(n - 1) * (n + 4) / 2;
    long long p2 = 0;
    for (int i = 2; i <= n; ++i) p2 += euler_totient(i);
    long long p3 = 0;
    for (int i = n / 2 + 1; i <= n; ++i) p3 += euler_totient(i);
    return p1 + lines_through_grid(n + 1) - p2 - 2 * p3 - 1;
}

HredCount count_hred(int n) {
    if (n < 4) throw std::invalid_argument("count_hred requires n >= 4");
    return {6LL * n - 11, 6LL * (3 * n - 8)};
}

std::vector<PartitionSegment> partition_segments(int n) {
    std::vector<PartitionSegment> out;
    for (int j = 0; j <= n - 1; ++j) {
        PartitionSegment s{true, j, {}};
        for (int t = 0; 2 * t <= j; ++t) s.points.emplace_back(t, j - 2 * t);
        out.push_back(std::move(s));
    }
    for (int j = 0; j <= n; ++j) {
        PartitionSegment s{false, j, {}};
        for (int t = 0; 2 * t <= j; ++t) s.points.emplace_back(n - j + t, j - 2 * t);
        out.push_back(std::move(s));
    }
    return out;
}

namespace oracle {

long long count_components_bruteforce(int n) {
    return static_cast<long long>(enumerate_components(n).size());
}

long long count_hred_bruteforce(int n) {
    return static_cast<long long>(hred_filter(enumerate_maximal_segments(n), n).size());
}

long long count_hred_per_l_bruteforce(int n, int l) {
    auto ds = distinguished_sets(n);
    auto segs = enumerate_maximal_segments(n);
    std::array<std::vector<GridPoint>, 3> edges = ds.edge;
    for (auto& e : edges)
        std::sort(e.begin(), e.end(), [](const GridPoint& a, const GridPoint& b) {
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        });
    long long count = 0;
    for (const auto& s : segs) {
        bool is_edge = false;
        for (const auto& e : edges)
            if (same_point_set(s.points, e)) is_edge = true;
        if (is_edge) continue;
        bool g = false, d = false;
        for (const auto& p : ds.gamma[static_cast<std::size_t>(l)])
            if (s.contains(p)) g = true;
        for (const auto& p : ds.delta[static_cast<std::size_t>(l)])
            if (s.contains(p)) d = true;
        if (g && d) ++count;
    }
    return count;
}

}  // namespace oracle

}  // namespace freecurve
