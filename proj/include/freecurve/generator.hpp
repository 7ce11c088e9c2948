#ifndef FREECURVE_GENERATOR_HPP
#define FREECURVE_GENERATOR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freecurve/linalg.hpp"
#include "freecurve/syzygy.hpp"

namespace freecurve {

/// Parameters for one Table-1 construction: the row (1)..(6), the row
/// parameter i, and the binary form T of degree d, given either as d
/// factors (lambda_s, mu_s) or directly by its d+1 coefficients in the
/// basis Y^{d-t} W^t (for forms that do not split over the rationals).
struct FactorSpec {
    int case_id = 1;
    int i = 1;
    std::vector<std::pair<Rat, Rat>> factors;
    std::vector<Rat> t_coeffs;  // used instead of factors when nonempty
};

/// A generated curve with everything needed to verify it independently:
/// the polynomial, its linear syzygy, the segment it came from, and the
/// assembled 3x2 syzygy matrix.
struct CurveCertificate {
    int n = 0;
    HomPoly g;
    std::array<Int, 3> abc{};
    std::optional<MaximalSegment> segment;  // absent for Ploski curves
    HilbertBurchMatrix matrix;
    std::string family;
    std::string notice;  // set when an omitted sub-case was redirected
};

// One curve from a Table-1 row: g is the monomial prefix times the expanded
// product of the factors along H(P2, Q2); abc is the row's syzygy direction
// (normalized to content 1, first nonzero entry positive). Omitted sub-cases
// redirect to their parent row with a notice.
CurveCertificate table1_curve(const FactorSpec& spec, int n);

// Admissible (case_id, i) pairs at degree n, with redirected sub-cases
// excluded.
std::vector<std::pair<int, int>> table1_admissible(int n);

// Ploski curve of degree n: for even n = 2m, g = sum of lambda_l q^l
// z^{n-2l} with q = y^2 - 2xz; for odd n the same sum of degree n-1 times
// the common tangent z. Carries the syzygy (y, z, 0).
CurveCertificate ploski_curve(int n, const std::vector<Rat>& lambdas);

// Kernel of g -> y dx g + z dy g on degree-n forms, solved one partition
// segment at a time.
std::vector<HomPoly> ploski_coefficient_solve(int n);

// Kernel of g -> A dx g + B dy g + C dz g on degree-n forms (A, B, C
// linear), by exact elimination over the monomial basis.
std::vector<HomPoly> linear_syzygy_solution_space(const HomPoly& A, const HomPoly& B,
                                                  const HomPoly& C, int n);

// True iff N^{-1} H N (x y z)^t is a linear syzygy of g(N (x y z)^t).
// Throws on singular N.
bool conjugate_syzygy_check(const QMatrix& H, const QMatrix& N, const HomPoly& g);

}  // namespace freecurve

#endif
