#include "freecurve/verification.hpp"

#include <map>
#include <stdexcept>

#include "freecurve/poly.hpp"

namespace freecurve {

namespace {

std::vector<Exponents> monomials_of_degree(int d) {
    std::vector<Exponents> out;
    if (d < 0) return out;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d - i; ++j) out.push_back({i, j, d - i - j});
    return out;
}

}  // namespace

long long monomial_count(int d) {
    return d >= 0 ? static_cast<long long>(d + 1) * (d + 2) / 2 : 0;
}

QMatrix macaulay_matrix(const HomPoly& g, int k) {
    if (g.is_zero()) throw std::invalid_argument("macaulay_matrix requires g nonzero");
    int n = g.degree();
    std::array<HomPoly, 3> grad{g.partial(Var::X), g.partial(Var::Y), g.partial(Var::Z)};
    std::vector<Exponents> rows = monomials_of_degree(k + n - 1);
    std::vector<Exponents> cols = monomials_of_degree(k);
    std::map<Exponents, std::size_t, GradedLexDesc> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;

    QMatrix mat(rows.size(), 3 * cols.size());
    for (std::size_t slot = 0; slot < 3; ++slot)
        for (std::size_t c = 0; c < cols.size(); ++c) {
            HomPoly prod = HomPoly::monomial(cols[c], Rat(1)) * grad[slot];
            for (const auto& [e, v] : prod.terms())
                mat.at(row_index.at(e), slot * cols.size() + c) = v;
        }
    return mat;
}

std::vector<SyzygyColumn> syzygy_space(const HomPoly& g, int k) {
    if (g.is_zero() || g.degree() < 3)
        throw std::invalid_argument("syzygy_space requires g nonzero of degree >= 3");
    std::vector<Exponents> cols = monomials_of_degree(k);
    QMatrix mat = macaulay_matrix(g, k);
    std::array<HomPoly, 3> grad{g.partial(Var::X), g.partial(Var::Y), g.partial(Var::Z)};
    std::vector<SyzygyColumn> out;
    for (const auto& v : mat.kernel()) {
        SyzygyColumn s{HomPoly(k), HomPoly(k), HomPoly(k)};
        for (std::size_t slot = 0; slot < 3; ++slot)
            for (std::size_t c = 0; c < cols.size(); ++c)
                s[slot].add_term(cols[c], v[slot * cols.size() + c]);
        HomPoly residual = s[0] * grad[0] + s[1] * grad[1] + s[2] * grad[2];
        if (!residual.is_zero())
            throw std::logic_error("kernel element fails direct expansion");
        out.push_back(std::move(s));
    }
    return out;
}

FreenessVerdict freeness_profile(const HomPoly& g, int kmax) {
    int n = g.degree();
    if (g.is_zero() || n < 3) throw std::invalid_argument("freeness_profile requires degree >= 3");
    if (!squarefree_test(g)) throw std::invalid_argument("freeness_profile requires reduced g");
    // concurrent lines have linearly dependent partials
    {
        std::array<HomPoly, 3> grad{g.partial(Var::X), g.partial(Var::Y), g.partial(Var::Z)};
        std::vector<Exponents> rows = monomials_of_degree(n - 1);
        std::map<Exponents, std::size_t, GradedLexDesc> row_index;
        for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;
        QMatrix mat(rows.size(), 3);
        for (std::size_t slot = 0; slot < 3; ++slot)
            for (const auto& [e, v] : grad[slot].terms()) mat.at(row_index.at(e), slot) = v;
        if (mat.rank() < 3)
            throw std::invalid_argument("partials are dependent (concurrent lines)");
    }
    FreenessVerdict verdict;
    bool all_match = true;
    for (int k = 0; k <= kmax; ++k) {
        QMatrix mat = macaulay_matrix(g, k);
        long long observed =
            static_cast<long long>(mat.cols()) - static_cast<long long>(mat.rank());
        long long predicted = monomial_count(k - 1) + monomial_count(k - n + 2);
        verdict.profile.push_back({k, observed, predicted});
        if (observed != predicted) all_match = false;
    }
    verdict.is_free = all_match && kmax >= n + 1;
    if (verdict.is_free) verdict.exponents = std::pair<int, int>{1, n - 2};
    return verdict;
}

long long tjurina_number(const HomPoly& g) {
    int n = g.degree();
    if (g.is_zero() || n < 3) throw std::invalid_argument("tjurina_number requires degree >= 3");
    if (!squarefree_test(g)) throw std::invalid_argument("tjurina_number requires reduced g");
    std::array<HomPoly, 3> grad{g.partial(Var::X), g.partial(Var::Y), g.partial(Var::Z)};
    auto quotient_dim = [&](int k) {
        // dim (R / J_g)_k = dim R_k - rank of the multiplication matrix
        // R_{k-n+1}^3 -> R_k on the three partials
        std::vector<Exponents> rows = monomials_of_degree(k);
        std::vector<Exponents> cols = monomials_of_degree(k - n + 1);
        std::map<Exponents, std::size_t, GradedLexDesc> row_index;
        for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;
        QMatrix mat(rows.size(), 3 * cols.size());
        for (std::size_t slot = 0; slot < 3; ++slot)
            for (std::size_t c = 0; c < cols.size(); ++c) {
                HomPoly prod = HomPoly::monomial(cols[c], Rat(1)) * grad[slot];
                for (const auto& [e, v] : prod.terms())
                    mat.at(row_index.at(e), slot * cols.size() + c) = v;
            }
        return static_cast<long long>(rows.size()) - static_cast<long long>(mat.rank());
    };
    long long t0 = quotient_dim(3 * (n - 2));
    long long t1 = quotient_dim(3 * (n - 2) + 1);
    if (t0 != t1)
        throw std::runtime_error("Hilbert function has not stabilized at the expected degree");
    return t0;
}

QhPoint qh_rank_at_point(const HilbertBurchMatrix& m, const std::array<Rat, 3>& p) {
    if (sgn(p[0]) == 0 && sgn(p[1]) == 0 && sgn(p[2]) == 0)
        throw std::invalid_argument("point must be nonzero");
    HomPoly g = g_from_matrix(m);
    for (Var v : {Var::X, Var::Y, Var::Z})
        if (sgn(g.partial(v).evaluate(p[0], p[1], p[2])) != 0)
            throw std::invalid_argument("point is not singular on the curve");
    QMatrix eval(3, 2);
    for (std::size_t r = 0; r < 3; ++r) {
        eval.at(r, 0) = m.linear[r].evaluate(p[0], p[1], p[2]);
        eval.at(r, 1) = m.high[r].evaluate(p[0], p[1], p[2]);
    }
    QhPoint out;
    out.point = p;
    out.rank = static_cast<int>(eval.rank());
    out.quasi_homogeneous = out.rank >= 1;
    return out;
}

bool buchweitz_conca_check(const HomPoly& g, const std::array<Rat, 3>& abc) {
    const Rat& a = abc[0];
    const Rat& b = abc[1];
    const Rat& c = abc[2];
    if (sgn(a) == 0 || sgn(b) == 0 || sgn(c) == 0)
        throw std::invalid_argument("buchweitz_conca_check requires a, b, c all nonzero");
    int n = g.degree();
    std::array<HomPoly, 3> grad{g.partial(Var::X), g.partial(Var::Y), g.partial(Var::Z)};
    HomPoly linear_residual = grad[0].scaled(a) * HomPoly::variable(Var::X) +
                              grad[1].scaled(b) * HomPoly::variable(Var::Y) +
                              grad[2].scaled(c) * HomPoly::variable(Var::Z);
    if (!linear_residual.is_zero())
        throw std::invalid_argument("(ax, by, cz) is not a syzygy of g");

    Rat inv_n2 = rat(1, n + 2);
    SyzygyColumn rho{
        grad[1].partial(Var::Z).scaled((1 / c - 1 / b) * inv_n2),
        grad[0].partial(Var::Z).scaled((1 / a - 1 / c) * inv_n2),
        grad[0].partial(Var::Y).scaled((1 / b - 1 / a) * inv_n2),
    };
    HomPoly residual = rho[0] * grad[0] + rho[1] * grad[1] + rho[2] * grad[2];
    if (!residual.is_zero()) return false;

    // spanning check: multiples of the linear syzygy plus rho must fill
    // Syz(J_g)_{n-2}
    auto basis = syzygy_space(g, n - 2);
    std::vector<Exponents> mons = monomials_of_degree(n - 2);
    std::map<Exponents, std::size_t, GradedLexDesc> index;
    for (std::size_t s = 0; s < mons.size(); ++s) index[mons[s]] = s;
    auto flatten = [&](const SyzygyColumn& s) {
        std::vector<Rat> v(3 * mons.size(), Rat(0));
        for (std::size_t slot = 0; slot < 3; ++slot)
            for (const auto& [e, coeff] : s[slot].terms())
                v[slot * mons.size() + index.at(e)] = coeff;
        return v;
    };
    std::vector<std::vector<Rat>> candidate;
    for (const auto& m : monomials_of_degree(n - 3)) {
        HomPoly mono = HomPoly::monomial(m, Rat(1));
        SyzygyColumn mult{(mono * HomPoly::variable(Var::X)).scaled(a),
                          (mono * HomPoly::variable(Var::Y)).scaled(b),
                          (mono * HomPoly::variable(Var::Z)).scaled(c)};
        candidate.push_back(flatten(mult));
    }
    candidate.push_back(flatten(rho));
    std::vector<std::vector<Rat>> observed;
    for (const auto& s : basis) observed.push_back(flatten(s));
    return rref_canonical(std::move(candidate)) == rref_canonical(std::move(observed));
}

}  // namespace freecurve
