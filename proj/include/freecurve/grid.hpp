#ifndef FREECURVE_GRID_HPP
#define FREECURVE_GRID_HPP

#include <array>
#include <optional>
#include <vector>

#include "freecurve/poly.hpp"

namespace freecurve {

// A point of the n-triangle grid is an exponent triple with i + j + k = n.
using GridPoint = Exponents;

inline bool is_vertex(const GridPoint& p, int n) {
    return p == GridPoint{n, 0, 0} || p == GridPoint{0, n, 0} || p == GridPoint{0, 0, n};
}

/// Maximal collinear subset of the punctured grid T' with at least two
/// points. Canonical form: points sorted by first coordinate (ties by
/// second), primitive direction with lexicographically positive sign.
struct MaximalSegment {
    int n = 0;
    std::vector<GridPoint> points;
    GridPoint extreme_p, extreme_q;      // first and last point
    std::array<int, 3> direction{};      // primitive, lex-positive sign
    int d = 0;                           // gcd of the entries of Q - P

    bool contains(const GridPoint& p) const;
    // True when the supporting line passes through the given grid vertex.
    bool aligned_with(const GridPoint& vertex) const;

    friend bool operator==(const MaximalSegment& a, const MaximalSegment& b) {
        return a.n == b.n && a.points == b.points;
    }
    friend bool operator<(const MaximalSegment& a, const MaximalSegment& b);
};

struct Grids {
    std::vector<GridPoint> full;      // T_n
    std::vector<GridPoint> punctured; // T'
};

Grids build_grids(int n);

std::vector<MaximalSegment> enumerate_maximal_segments(int n);

MaximalSegment segment_through(int n, const GridPoint& p, const GridPoint& q);

struct DistinguishedSets {
    std::array<std::vector<GridPoint>, 3> gamma;  // |Gamma_l| = 3
    std::array<std::vector<GridPoint>, 3> delta;  // strips i/j/k in {0,1}
    std::array<MaximalSegment, 3> L;              // segments parallel to the edges
    std::array<std::vector<GridPoint>, 3> edge;   // H_1, H_2, H_3
};

DistinguishedSets distinguished_sets(int n);

// H_red: segments of H_2 (all maximal segments except the three edge sets)
// meeting some Gamma_l and the matching Delta_l.
std::vector<MaximalSegment> hred_filter(const std::vector<MaximalSegment>& segments, int n);

enum class ComponentKind { Trivial, Singleton, Segment };

struct ComponentDescriptor {
    ComponentKind kind = ComponentKind::Trivial;
    std::optional<GridPoint> point;
    std::optional<MaximalSegment> segment;
    std::vector<std::string> tied;                 // m(H), coefficient names
    std::vector<std::array<int, 3>> linear_forms;  // r(H)
};

std::vector<ComponentDescriptor> enumerate_components(int n);

// Closed component-count formula (totient based). Matches
// |enumerate_components(n)| exactly.
long long count_components(int n);

struct HredCount {
    long long per_l;  // 6n - 11
    long long total;  // 6(3n - 8)
};
HredCount count_hred(int n);

long long euler_totient(int m);

// Number of lines through at least two points of a triangular grid with m
// points per side.
long long lines_through_grid(int m);

// Partition segments A_j / B_j of T_n used by the Ploski coefficient solve.
// Returned in (i, j) coordinates with k = n - i - j implied.
struct PartitionSegment {
    bool is_a = true;
    int index = 0;
    std::vector<std::pair<int, int>> points;
};
std::vector<PartitionSegment> partition_segments(int n);

namespace oracle {
// Exhaustive counts used as independent cross-checks of the closed formulas.
long long count_components_bruteforce(int n);
long long count_hred_bruteforce(int n);
long long count_hred_per_l_bruteforce(int n, int l);
}  // namespace oracle

}  // namespace freecurve

#endif
