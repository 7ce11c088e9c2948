#ifndef FREECURVE_SYZYGY_HPP
#define FREECURVE_SYZYGY_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freecurve/grid.hpp"
#include "freecurve/poly.hpp"
#include "freecurve/rng.hpp"

namespace freecurve {

/// Name of one free coefficient of D, E or F: family 'd', 'e' or 'f' plus
/// the exponent triple (summing to n-2). D only carries d_{0jk} names.
struct CoeffName {
    char family = 'f';
    Exponents e;

    std::string str() const;

    friend bool operator==(const CoeffName&, const CoeffName&) = default;
    friend bool operator<(const CoeffName& a, const CoeffName& b) {
        if (a.family != b.family) return a.family < b.family;
        return std::tie(a.e.i, a.e.j, a.e.k) < std::tie(b.e.i, b.e.j, b.e.k);
    }
};

// All coefficient names of degree n-2 forms D (y,z only), E, F.
std::vector<CoeffName> coefficient_universe(int n);

// m(H): the names not reached by any phi map on the given point set.
std::vector<CoeffName> tied_set(const std::vector<GridPoint>& points, int n);

struct ScaledName {
    CoeffName name;
    Rat factor;  // the stored coefficient enters multiplied by this
};

struct PhiImage {
    std::optional<CoeffName> D, E, F;
    std::optional<ScaledName> Estar;
};

// The four coefficient maps at one point of T'. Throws if pt is a vertex or
// outside the grid.
PhiImage phi_maps(const GridPoint& pt, int n);

using SyzygyColumn = std::array<HomPoly, 3>;

/// The 3x2 matrix of first syzygies: a linear column and a degree-(n-2)
/// column. Its 2x2 minors generate the Jacobian ideal up to the Euler
/// relation.
struct HilbertBurchMatrix {
    SyzygyColumn linear;  // degree 1
    SyzygyColumn high;    // degree n-2
    int n = 0;
};

// Signed 2x2 minors (G1, G2, G3) = (BF-CE, CD-AF, AE-BD), degree n-1.
SyzygyColumn minors(const HilbertBurchMatrix& m);

// (K1, K2, K3) = (dx G2 - dy G1, dx G3 - dz G1, dy G3 - dz G2). Vanishes
// exactly when G is a gradient.
SyzygyColumn curl(const SyzygyColumn& g);

// g = (1/n) det of the 3x3 matrix with first column (x, y, z) and the two
// columns of m.
HomPoly g_from_matrix(const HilbertBurchMatrix& m);

/// Concrete rational values for the surviving free coefficients of one
/// component, plus the linear syzygy coefficients (a, b, c). Names absent
/// from the map are implicitly zero.
struct CoefficientAssignment {
    std::array<Rat, 3> abc{Rat(1), Rat(0), Rat(0)};
    std::map<CoeffName, Rat> values;

    Rat value(const CoeffName& name) const {
        auto it = values.find(name);
        return it == values.end() ? Rat(0) : it->second;
    }
};

/// One bilinear constraint: a sum of terms, each a constant times an
/// optional linear form in (a,b,c) times a named coefficient. The split
/// structure (form, name) is kept symbolic; expansion happens only in
/// evaluate.
struct ConstraintTerm {
    Rat factor;
    std::optional<std::array<int, 3>> abc_form;  // i*a + j*b + k*c
    CoeffName coeff;
};

struct Constraint {
    std::vector<ConstraintTerm> terms;
    Rat evaluate(const CoefficientAssignment& assignment) const;
};

// The six equation families indexed by T_{n-2}: the full coefficient-wise
// expansion of K1 = K2 = K3 = 0.
std::vector<Constraint> six_family_system(int n);

// The four reduced families indexed by T' (valid under a != 0): three
// decoupled (i a + j b + k c) * coefficient families plus the e/f coupling
// j e_{i-1 j k-1} + k f_{i-1 j-1 k} = 0.
std::vector<Constraint> four_family_system(int n);

// Primitive integer normal of the supporting line of H in the plane
// i + j + k = n: the unique solution of {i a + j b + k c = 0 : (i,j,k) in H}
// up to sign, first nonzero entry positive.
std::array<Int, 3> line_normal(const MaximalSegment& h);

// line_normal with the component-validity guard: throws when H is collinear
// with (n,0,0), which would force a = 0.
std::array<Int, 3> solve_abc(const MaximalSegment& h);

// The reduced forms (D_H, E*_H, F_H) of degree n-2 supported on H. With
// star = false the plain E_H (independent e values, no eqA4 substitution) is
// built instead; only the starred variant solves all four families. Throws
// if every surviving coefficient evaluates to zero.
std::array<HomPoly, 3> build_DEF(const MaximalSegment& h,
                                 const CoefficientAssignment& assignment,
                                 bool star = true);

HilbertBurchMatrix assemble_matrix(const std::array<Rat, 3>& abc,
                                   const std::array<HomPoly, 3>& def, int n);

// Direct support-side formula: n g = sum over H of
// ((c-b) phi_D + (a-c) phi_E* + (b-a) phi_F) x^i y^j z^k. Independent of the
// determinant route.
HomPoly g_H_formula(const MaximalSegment& h, const CoefficientAssignment& assignment);

// Single-monomial g** of an interior point, with (a,b,c) taken from the
// assignment (assumed to satisfy i a + j b + k c = 0). Throws on boundary
// points.
HomPoly gHstar_singleton(const GridPoint& pt, const CoefficientAssignment& assignment);

// Seeded random assignment solving both equation systems on the component
// of H: tied names absent, d/f and boundary e names random nonzero, interior
// e names set to -(k/j) times the matching f.
CoefficientAssignment satisfying_assignment(const MaximalSegment& h, Rng& rng);

}  // namespace freecurve

#endif
