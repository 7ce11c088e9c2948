#include "freecurve/generator.hpp"

#include <numeric>
#include <stdexcept>

namespace freecurve {

namespace {

struct RowData {
    GridPoint p, q;
    std::array<long, 3> abc;
};

RowData table1_row(int case_id, int i, int n) {
    RowData r;
    switch (case_id) {
        case 1:
            r.p = {0, n - 1, 1};
            r.q = {i, 0, n - i};
            r.abc = {static_cast<long>(n - i) * (n - 1), i, static_cast<long>(-i) * (n - 1)};
            break;
        case 2:
            r.p = {0, n - 1, 1};
            r.q = {i, 1, n - i - 1};
            // second entry +i, not -i: only then does i*a + j*b + k*c vanish
            // on both support points
            r.abc = {static_cast<long>(n - i - 1) * (n - 1) - 1, i,
                     static_cast<long>(-i) * (n - 1)};
            break;
        case 3:
            r.p = {1, n - 1, 0};
            r.q = {i, 0, n - i};
            r.abc = {static_cast<long>(n - i) * (n - 1), -(n - i),
                     static_cast<long>(-i) * (n - 1)};
            break;
        case 4:
            r.p = {1, n - 1, 0};
            r.q = {i, 1, n - i - 1};
            r.abc = {static_cast<long>(n - i - 1) * (n - 1), -(n - i - 1),
                     1 - static_cast<long>(i) * (n - 1)};
            break;
        case 5:
            r.p = {1, n - 2, 1};
            r.q = {i, 0, n - i};
            r.abc = {static_cast<long>(n - i) * (n - 2), 2 * i - n,
                     static_cast<long>(-i) * (n - 2)};
            break;
        case 6:
            r.p = {1, n - 2, 1};
            r.q = {i, 1, n - i - 1};
            r.abc = {static_cast<long>(n - i - 1) * (n - 2) - 1, 2 * i + 1 - n,
                     1 - static_cast<long>(i) * (n - 2)};
            break;
        default:
            throw std::invalid_argument("table1 case_id must be 1..6");
    }
    return r;
}

void check_row_range(int case_id, int i, int n) {
    int lo = (case_id == 4 || case_id == 6) ? 0 : 1;
    int hi = (case_id == 4) ? n - 2 : n - 1;
    if (i < lo || i > hi) throw std::invalid_argument("table1 parameter i out of row range");
}

// Coefficients of prod (lambda_s Y + mu_s W) in the basis Y^{d-t} W^t.
std::vector<Rat> expand_factors(const std::vector<std::pair<Rat, Rat>>& factors) {
    std::vector<Rat> c{Rat(1)};
    for (const auto& [lambda, mu] : factors) {
        if (sgn(lambda) == 0 && sgn(mu) == 0)
            throw std::invalid_argument("factor (0, 0) is not allowed");
        std::vector<Rat> next(c.size() + 1, Rat(0));
        for (std::size_t t = 0; t < c.size(); ++t) {
            next[t] += lambda * c[t];
            next[t + 1] += mu * c[t];
        }
        c = std::move(next);
    }
    return c;
}

// Structural family label from the two end monomials of the pencil (with
// the common monomial prefix removed) and the factor count.
std::string family_label(const std::array<int, 3>& u, const std::array<int, 3>& w) {
    int delta = u[0] + u[1] + u[2];
    if (delta == 1) return "near-pencil";
    auto pure = [delta](const std::array<int, 3>& m) {
        return m[0] == delta || m[1] == delta || m[2] == delta;
    };
    if (pure(u) && pure(w)) return "near-pencil";
    if (delta == 2) return "bitangent-conics";
    int cusps = 0;
    for (int v = 0; v < 3; ++v) {
        int mult = std::min(delta - u[static_cast<std::size_t>(v)],
                            delta - w[static_cast<std::size_t>(v)]);
        if (mult >= 2) ++cusps;
    }
    return cusps >= 2 ? "bicuspidal-pencil" : "unicuspidal-pencil";
}

// Reconstructs the coefficient assignment whose g_H_formula value is
// exactly g, inverting the per-point weights of eq. n g_H.
CoefficientAssignment assignment_for(const MaximalSegment& h, const HomPoly& g,
                                     const std::array<Int, 3>& abc) {
    int n = h.n;
    CoefficientAssignment out;
    for (int s = 0; s < 3; ++s) out.abc[static_cast<std::size_t>(s)] = Rat(abc[static_cast<std::size_t>(s)]);
    const Rat& a = out.abc[0];
    const Rat& b = out.abc[1];
    const Rat& c = out.abc[2];
    for (const auto& p : h.points) {
        Rat t = g.coeff(p) * Rat(n);
        CoeffName name;
        Rat w;
        if (p.i == 0) {
            name = {'d', {0, p.j - 1, p.k - 1}};
            w = c - b;
        } else if (p.j == 0) {
            name = {'e', {p.i - 1, 0, p.k - 1}};
            w = a - c;
        } else if (p.k == 0) {
            name = {'f', {p.i - 1, p.j - 1, 0}};
            w = b - a;
        } else {
            name = {'f', {p.i - 1, p.j - 1, p.k}};
            w = (b - a) - rat(p.k, p.j) * (a - c);
        }
        if (sgn(w) == 0) {
            if (sgn(t) != 0)
                throw std::runtime_error("coefficient weight vanishes at " + name.str());
            continue;
        }
        if (sgn(t) != 0) out.values[name] = t / w;
    }
    return out;
}

}  // namespace

std::vector<std::pair<int, int>> table1_admissible(int n) {
    std::vector<std::pair<int, int>> out;
    for (int case_id = 1; case_id <= 6; ++case_id) {
        int lo = (case_id == 4 || case_id == 6) ? 0 : 1;
        int hi = (case_id == 4) ? n - 2 : n - 1;
        for (int i = lo; i <= hi; ++i) {
            if (case_id == 2 && i == n - 2) continue;
            if (case_id == 5 && i == n - 1) continue;
            if (case_id == 6 && i == n - 2) continue;
            if ((case_id == 4 || case_id == 5 || case_id == 6) && i == 1) continue;
            out.emplace_back(case_id, i);
        }
    }
    return out;
}

CurveCertificate table1_curve(const FactorSpec& spec, int n) {
    if (n < 4) throw std::invalid_argument("table1_curve requires n >= 4");
    check_row_range(spec.case_id, spec.i, n);

    int case_id = spec.case_id;
    int i = spec.i;
    std::string notice;
    if (case_id == 2 && i == n - 2) {
        case_id = 1;
        i = n - 1;
        notice = "sub-case of row (1), i = n-1";
    } else if (case_id == 5 && i == n - 1) {
        case_id = 1;
        i = n - 1;
        notice = "sub-case of row (1), i = n-1";
    } else if (case_id == 6 && i == n - 2) {
        case_id = 1;
        i = n - 1;
        notice = "sub-case of row (1), i = n-1";
    } else if ((case_id == 4 || case_id == 5 || case_id == 6) && i == 1) {
        case_id = 3;
        i = 1;
        notice = "sub-case of row (3), i = 1";
    }

    RowData row = table1_row(case_id, i, n);
    int di = row.q.i - row.p.i, dj = row.q.j - row.p.j, dk = row.q.k - row.p.k;
    int d = std::gcd(std::gcd(std::abs(di), std::abs(dj)), std::abs(dk));
    std::vector<Rat> coeffs;
    if (!spec.t_coeffs.empty()) {
        if (static_cast<int>(spec.t_coeffs.size()) != d + 1)
            throw std::invalid_argument("expected " + std::to_string(d + 1) +
                                        " coefficients, got " +
                                        std::to_string(spec.t_coeffs.size()));
        coeffs = spec.t_coeffs;
    } else {
        if (static_cast<int>(spec.factors.size()) != d)
            throw std::invalid_argument("expected " + std::to_string(d) + " factors, got " +
                                        std::to_string(spec.factors.size()));
        coeffs = expand_factors(spec.factors);
    }
    HomPoly g(n);
    for (int t = 0; t <= d; ++t) {
        GridPoint r{row.p.i + t * di / d, row.p.j + t * dj / d, row.p.k + t * dk / d};
        g.add_term(r, coeffs[static_cast<std::size_t>(t)]);
    }
    if (g.is_zero()) throw std::invalid_argument("all factor products vanish");

    CurveCertificate cert;
    cert.n = n;
    cert.g = g;
    cert.notice = notice;
    cert.segment = segment_through(n, row.p, row.q);
    cert.abc = solve_abc(*cert.segment);
    // sanity: the table's column vector is the same projective point
    {
        Int ra(row.abc[0]), rb(row.abc[1]), rc(row.abc[2]);
        if (ra * cert.abc[1] != rb * cert.abc[0] || rb * cert.abc[2] != rc * cert.abc[1])
            throw std::runtime_error("table row abc disagrees with the segment normal");
    }
    CoefficientAssignment assignment = assignment_for(*cert.segment, g, cert.abc);
    cert.matrix = assemble_matrix(assignment.abc, build_DEF(*cert.segment, assignment), n);

    std::array<int, 3> prefix{row.p.i, row.p.j, row.p.k};
    for (int s = 0; s < 3; ++s)
        prefix[static_cast<std::size_t>(s)] =
            std::min(prefix[static_cast<std::size_t>(s)], row.q[s]);
    std::array<int, 3> u{row.p.i - prefix[0], row.p.j - prefix[1], row.p.k - prefix[2]};
    std::array<int, 3> w{row.q.i - prefix[0], row.q.j - prefix[1], row.q.k - prefix[2]};
    for (auto& v : u) v /= d;
    for (auto& v : w) v /= d;
    cert.family = family_label(u, w);
    return cert;
}

CurveCertificate ploski_curve(int n, const std::vector<Rat>& lambdas) {
    if (n < 4) throw std::invalid_argument("ploski_curve requires n >= 4");
    int m = n / 2;  // number of conic factors; odd n adds the tangent line
    if (static_cast<int>(lambdas.size()) != m)
        throw std::invalid_argument("expected " + std::to_string(m) + " coefficients");
    bool all_zero = true;
    for (const auto& l : lambdas)
        if (sgn(l) != 0) all_zero = false;
    if (all_zero) throw std::invalid_argument("all coefficients are zero");

    HomPoly q(2);
    q.add_term({0, 2, 0}, Rat(1));
    q.add_term({1, 0, 1}, Rat(-2));
    int base = (n % 2 == 0) ? n : n - 1;
    HomPoly sum(base);
    HomPoly qpow = HomPoly::constant(Rat(1));
    for (int l = 1; l <= m; ++l) {
        qpow = qpow * q;
        if (sgn(lambdas[static_cast<std::size_t>(l - 1)]) == 0) continue;
        HomPoly term = qpow.scaled(lambdas[static_cast<std::size_t>(l - 1)]);
        for (int s = 0; s < base - 2 * l; ++s) term = term * HomPoly::variable(Var::Z);
        sum = sum + term;
    }
    HomPoly g = (n % 2 == 0) ? sum : sum * HomPoly::variable(Var::Z);

    CurveCertificate cert;
    cert.n = n;
    cert.g = g;
    cert.abc = {Int(0), Int(0), Int(0)};  // syzygy is (y, z, 0), not diagonal
    cert.family = (n % 2 == 0) ? "ploski-even" : "ploski-odd";

    // Hilbert-Burch data: linear column (y, z, 0); the high column is read
    // off from the gradient so that the minors are exactly grad g.
    HomPoly gx = g.partial(Var::X), gz = g.partial(Var::Z);
    HomPoly F = gx.divide_by_monomial(0, 0, 1);
    HomPoly zfree(gz.degree()), rest(gz.degree());
    for (const auto& [e, c] : gz.terms()) {
        if (e.k == 0)
            zfree.add_term(e, c);
        else
            rest.add_term(e, c);
    }
    HomPoly E = zfree.divide_by_monomial(0, 1, 0);
    HomPoly D = -rest.divide_by_monomial(0, 0, 1);
    cert.matrix.n = n;
    cert.matrix.linear = {HomPoly::variable(Var::Y), HomPoly::variable(Var::Z), HomPoly(1)};
    cert.matrix.high = {D, E, F};
    return cert;
}

std::vector<HomPoly> linear_syzygy_solution_space(const HomPoly& A, const HomPoly& B,
                                                  const HomPoly& C, int n) {
    if (A.is_zero() && B.is_zero() && C.is_zero())
        throw std::invalid_argument("syzygy triple must be nonzero");
    std::vector<Exponents> basis;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n - i; ++j) basis.push_back({i, j, n - i - j});
    std::map<Exponents, std::size_t, GradedLexDesc> row_index;
    for (std::size_t r = 0; r < basis.size(); ++r) row_index[basis[r]] = r;

    QMatrix mat(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        HomPoly mono = HomPoly::monomial(basis[col], Rat(1));
        HomPoly image = A * mono.partial(Var::X) + B * mono.partial(Var::Y) +
                        C * mono.partial(Var::Z);
        for (const auto& [e, c] : image.terms()) mat.at(row_index.at(e), col) = c;
    }
    std::vector<HomPoly> out;
    for (const auto& v : mat.kernel()) {
        HomPoly g(n);
        for (std::size_t col = 0; col < basis.size(); ++col) g.add_term(basis[col], v[col]);
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<HomPoly> ploski_coefficient_solve(int n) {
    if (n < 3) throw std::invalid_argument("ploski_coefficient_solve requires n >= 3");
    std::vector<HomPoly> out;
    for (const auto& seg : partition_segments(n)) {
        const auto& unknowns = seg.points;
        // Equations of v = y dx g + z dy g touching these unknowns. The
        // coefficient of x^i y^j z^k in v is (i+1) g_{i+1, j-1} (when j >= 1)
        // plus (j+1) g_{i, j+1} (when k >= 1); both referenced unknowns move
        // along the same direction (1, -2), so each segment closes a system.
        std::map<std::pair<int, int>, std::size_t> col;
        for (std::size_t s = 0; s < unknowns.size(); ++s) col[unknowns[s]] = s;
        std::vector<std::pair<int, int>> eq_points;
        for (const auto& [u, v] : unknowns) {
            if (u >= 1 && v + 1 <= n) eq_points.emplace_back(u - 1, v + 1);
            if (v >= 1 && n - u - (v - 1) >= 1) eq_points.emplace_back(u, v - 1);
        }
        std::sort(eq_points.begin(), eq_points.end());
        eq_points.erase(std::unique(eq_points.begin(), eq_points.end()), eq_points.end());

        QMatrix mat(eq_points.size(), unknowns.size());
        for (std::size_t r = 0; r < eq_points.size(); ++r) {
            auto [i, j] = eq_points[r];
            if (j >= 1) {
                auto it = col.find({i + 1, j - 1});
                if (it != col.end()) mat.at(r, it->second) += Rat(i + 1);
            }
            if (n - i - j >= 1) {
                auto it = col.find({i, j + 1});
                if (it != col.end()) mat.at(r, it->second) += Rat(j + 1);
            }
        }
        for (const auto& v : mat.kernel()) {
            HomPoly g(n);
            for (std::size_t s = 0; s < unknowns.size(); ++s)
                g.add_term({unknowns[s].first, unknowns[s].second,
                            n - unknowns[s].first - unknowns[s].second},
                           v[s]);
            out.push_back(std::move(g));
        }
    }
    return out;
}

bool conjugate_syzygy_check(const QMatrix& H, const QMatrix& N, const HomPoly& g) {
    if (H.rows() != 3 || H.cols() != 3 || N.rows() != 3 || N.cols() != 3)
        throw std::invalid_argument("conjugate_syzygy_check needs 3x3 matrices");
    auto row_form = [](const QMatrix& M, std::size_t r) {
        HomPoly f(1);
        f.add_term({1, 0, 0}, M.at(r, 0));
        f.add_term({0, 1, 0}, M.at(r, 1));
        f.add_term({0, 0, 1}, M.at(r, 2));
        return f;
    };
    auto is_syzygy = [&](const QMatrix& M, const HomPoly& p) {
        HomPoly s = row_form(M, 0) * p.partial(Var::X) + row_form(M, 1) * p.partial(Var::Y) +
                    row_form(M, 2) * p.partial(Var::Z);
        return s.is_zero();
    };
    QMatrix conj(3, 3);  // N^{-1} H N
    QMatrix Ninv = N.inverse();
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            Rat acc(0);
            for (std::size_t s = 0; s < 3; ++s)
                for (std::size_t t = 0; t < 3; ++t)
                    acc += Ninv.at(r, s) * H.at(s, t) * N.at(t, c);
            conj.at(r, c) = acc;
        }
    HomPoly gN = g.substitute(row_form(N, 0), row_form(N, 1), row_form(N, 2));
    return is_syzygy(conj, gN);
}

}  // namespace freecurve
