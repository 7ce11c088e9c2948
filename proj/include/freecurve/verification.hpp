#ifndef FREECURVE_VERIFICATION_HPP
#define FREECURVE_VERIFICATION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "freecurve/linalg.hpp"
#include "freecurve/syzygy.hpp"

namespace freecurve {

/// Matrix of the map (a, b, c) -> a dx g + b dy g + c dz g restricted to
/// degree-k triples: rows are degree-(k+n-1) monomials, columns are
/// (variable slot, degree-k monomial) pairs. Everything downstream (syzygy
/// spaces, Hilbert functions, Tjurina numbers) is a rank or kernel of this.
QMatrix macaulay_matrix(const HomPoly& g, int k);

struct QhPoint {
    std::array<Rat, 3> point;
    int rank = 0;
    bool quasi_homogeneous = false;
};

struct FreenessVerdict {
    bool is_free = false;
    std::optional<std::pair<int, int>> exponents;
    long long tjurina = -1;  // -1 until tjurina_number fills it
    std::vector<std::array<long long, 3>> profile;  // (k, observed, predicted)
    std::vector<QhPoint> qh_points;
};

// Exact kernel basis of the Macaulay matrix at degree k; every element is
// re-expanded against grad g before being returned.
std::vector<SyzygyColumn> syzygy_space(const HomPoly& g, int k);

// dim R_d = (d+1)(d+2)/2 for d >= 0, else 0.
long long monomial_count(int d);

// Observed dim Syz(J_g)_k for k = 0..kmax against the free-with-exponents
// (1, n-2) prediction dim R_{k-1} + dim R_{k-n+2}. is_free is set when the
// whole profile matches (callers pass kmax >= n+1). Throws when the three
// partials are linearly dependent (concurrent lines) or g is not reduced.
FreenessVerdict freeness_profile(const HomPoly& g, int kmax);

// tau = dim (R / J_g)_k at the plateau; evaluated at k = 3(n-2) and
// 3(n-2)+1 and required to agree.
long long tjurina_number(const HomPoly& g);

// Rank of the 3x2 syzygy matrix evaluated at p; rank >= 1 certifies a
// quasi-homogeneous singularity. Throws when p is not a singular point of
// the curve of the matrix.
QhPoint qh_rank_at_point(const HilbertBurchMatrix& m, const std::array<Rat, 3>& p);

// The mixed-partials syzygy of the Buchweitz-Conca matrix: checks that
// ((1/c-1/b) g_yz, (1/a-1/c) g_xz, (1/b-1/a) g_xy)/(n+2) annihilates grad g
// and that it spans Syz(J_g)_{n-2} together with the multiples of
// (ax, by, cz). Throws when abc has a zero entry or (ax, by, cz) is not a
// syzygy.
bool buchweitz_conca_check(const HomPoly& g, const std::array<Rat, 3>& abc);

}  // namespace freecurve

#endif
