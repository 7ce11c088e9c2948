#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "freecurve/grid.hpp"

using namespace freecurve;

TEST_CASE("grid sizes") {
    auto g4 = build_grids(4);
    CHECK(g4.full.size() == 15);
    CHECK(g4.punctured.size() == 12);
    auto g3 = build_grids(3);
    CHECK(g3.full.size() == 10);
    CHECK(g3.punctured.size() == 7);
    CHECK_THROWS_AS(build_grids(2), std::invalid_argument);
    auto g9 = build_grids(9);
    for (GridPoint p : {GridPoint{0, 2, 7}, GridPoint{1, 3, 5}, GridPoint{2, 4, 3}, GridPoint{3, 5, 1}})
        CHECK(std::find(g9.punctured.begin(), g9.punctured.end(), p) != g9.punctured.end());
}

TEST_CASE("maximal segments at n = 4") {
    auto segs = enumerate_maximal_segments(4);
    MaximalSegment h1 = segment_through(4, {3, 0, 1}, {0, 3, 1});
    CHECK(h1.points == std::vector<GridPoint>{{0, 3, 1}, {1, 2, 1}, {2, 1, 1}, {3, 0, 1}});
    CHECK(h1.d == 3);
    MaximalSegment h2 = segment_through(4, {3, 1, 0}, {0, 2, 2});
    CHECK(h2.points == std::vector<GridPoint>{{0, 2, 2}, {3, 1, 0}});
    CHECK(std::find(segs.begin(), segs.end(), h1) != segs.end());
    CHECK(std::find(segs.begin(), segs.end(), h2) != segs.end());
    CHECK_THROWS_AS(segment_through(4, {1, 2, 1}, {1, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(segment_through(4, {4, 0, 0}, {0, 3, 1}), std::invalid_argument);
}

TEST_CASE("segment enumeration is exhaustive and canonical") {
    for (int n : {3, 4, 5, 6}) {
        auto segs = enumerate_maximal_segments(n);
        CHECK(std::set<MaximalSegment>(segs.begin(), segs.end()).size() == segs.size());
        // every pair of punctured points lies on exactly one listed segment
        auto pts = build_grids(n).punctured;
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                int hits = 0;
                for (const auto& s : segs)
                    if (s.contains(pts[a]) && s.contains(pts[b])) ++hits;
                CHECK(hits == 1);
            }
        // reconstruction from any two points gives the segment back
        for (const auto& s : segs)
            for (std::size_t a = 0; a < s.points.size(); ++a)
                for (std::size_t b = a + 1; b < s.points.size(); ++b)
                    CHECK(segment_through(n, s.points[a], s.points[b]) == s);
    }
}

TEST_CASE("distinguished sets at n = 4") {
    auto ds = distinguished_sets(4);
    CHECK(ds.gamma[0] == std::vector<GridPoint>{{3, 1, 0}, {3, 0, 1}, {2, 1, 1}});
    CHECK(ds.L[1].points == std::vector<GridPoint>{{0, 1, 3}, {1, 1, 2}, {2, 1, 1}, {3, 1, 0}});
    for (int l = 0; l < 3; ++l) {
        CHECK(ds.gamma[static_cast<std::size_t>(l)].size() == 3);
        CHECK(ds.edge[static_cast<std::size_t>(l)].size() == 3);  // n - 1 points
    }
    // (n-1, 1, 0) has j = 1, so it sits in the Delta_2 strip
    auto& d2 = ds.delta[1];
    CHECK(std::find(d2.begin(), d2.end(), GridPoint{3, 1, 0}) != d2.end());
    CHECK_THROWS_AS(distinguished_sets(3), std::invalid_argument);
}

TEST_CASE("reduced segment family counts") {
    CHECK(hred_filter(enumerate_maximal_segments(4), 4).size() == 24);
    CHECK(hred_filter(enumerate_maximal_segments(5), 5).size() == 42);
    MaximalSegment h1 = segment_through(4, {3, 0, 1}, {0, 3, 1});
    auto hred = hred_filter(enumerate_maximal_segments(4), 4);
    CHECK(std::find(hred.begin(), hred.end(), h1) != hred.end());
    CHECK(count_hred(4).per_l == 13);
    CHECK(count_hred(4).total == 24);
    CHECK(count_hred(10).per_l == 49);
    CHECK(count_hred(10).total == 132);
    CHECK_THROWS_AS(count_hred(3), std::invalid_argument);
    for (int n = 4; n <= 14; ++n) {
        CHECK(oracle::count_hred_bruteforce(n) == count_hred(n).total);
        for (int l = 0; l < 3; ++l)
            CHECK(oracle::count_hred_per_l_bruteforce(n, l) == count_hred(n).per_l);
    }
}

TEST_CASE("a Gamma point and a Delta point are always the extremes of their segment") {
    for (int n = 4; n <= 10; ++n) {
        auto ds = distinguished_sets(n);
        for (int l = 0; l < 3; ++l) {
            for (const auto& p : ds.gamma[static_cast<std::size_t>(l)])
                for (const auto& q : ds.delta[static_cast<std::size_t>(l)]) {
                    if (p == q) continue;
                    MaximalSegment h = segment_through(n, p, q);
                    bool is_L = false;
                    for (int i = 0; i < 3; ++i)
                        if (h == ds.L[static_cast<std::size_t>(i)]) is_L = true;
                    if (is_L) continue;
                    bool match = (h.extreme_p == p && h.extreme_q == q) ||
                                 (h.extreme_p == q && h.extreme_q == p);
                    CHECK(match);
                }
        }
    }
}

TEST_CASE("component enumeration and closed count") {
    CHECK(lines_through_grid(2) == 3);
    for (int n = 3; n <= 14; ++n)
        CHECK(count_components(n) == oracle::count_components_bruteforce(n));
    auto comps = enumerate_components(4);
    int trivial = 0, singleton = 0, segment = 0;
    for (const auto& c : comps) {
        switch (c.kind) {
            case ComponentKind::Trivial:
                ++trivial;
                CHECK(c.linear_forms.empty());
                CHECK(c.tied.size() == 15);  // every coefficient name at n = 4
                break;
            case ComponentKind::Singleton: ++singleton; break;
            case ComponentKind::Segment:
                ++segment;
                CHECK_FALSE(c.segment->aligned_with({4, 0, 0}));
                break;
        }
    }
    CHECK(trivial == 1);
    CHECK(singleton == 12);
    for (const auto& c : comps)
        if (c.kind == ComponentKind::Singleton && *c.point == GridPoint{1, 1, 2})
            CHECK(c.linear_forms == std::vector<std::array<int, 3>>{{1, 1, 2}});
}

TEST_CASE("partition segments cover the grid exactly once") {
    for (int n = 3; n <= 20; ++n) {
        std::set<std::pair<int, int>> seen;
        std::size_t total = 0;
        for (const auto& seg : partition_segments(n))
            for (const auto& p : seg.points) {
                CHECK(p.first >= 0);
                CHECK(p.second >= 0);
                CHECK(p.first + p.second <= n);
                seen.insert(p);
                ++total;
            }
        CHECK(total == seen.size());
        CHECK(total == static_cast<std::size_t>((n + 1) * (n + 2) / 2));
    }
}
