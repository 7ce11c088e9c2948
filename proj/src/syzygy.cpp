#include "freecurve/syzygy.hpp"

#include <numeric>
#include <stdexcept>

namespace freecurve {

std::string CoeffName::str() const {
    std::string out(1, family);
    if (e.i < 10 && e.j < 10 && e.k < 10) {
        out += '_';
        out += std::to_string(e.i) + std::to_string(e.j) + std::to_string(e.k);
    } else {
        out += '_' + std::to_string(e.i) + '_' + std::to_string(e.j) + '_' + std::to_string(e.k);
    }
    return out;
}

std::vector<CoeffName> coefficient_universe(int n) {
    if (n < 3) throw std::invalid_argument("coefficient_universe requires n >= 3");
    std::vector<CoeffName> out;
    for (int j = 0; j <= n - 2; ++j) out.push_back({'d', {0, j, n - 2 - j}});
    for (char fam : {'e', 'f'})
        for (int i = 0; i <= n - 2; ++i)
            for (int j = 0; j <= n - 2 - i; ++j) out.push_back({fam, {i, j, n - 2 - i - j}});
    std::sort(out.begin(), out.end());
    return out;
}

PhiImage phi_maps(const GridPoint& pt, int n) {
    if (pt.degree() != n || pt.i < 0 || pt.j < 0 || pt.k < 0 || is_vertex(pt, n))
        throw std::invalid_argument("phi_maps requires a point of T'");
    PhiImage out;
    if (pt.i == 0 && pt.j > 0 && pt.k > 0) out.D = CoeffName{'d', {0, pt.j - 1, pt.k - 1}};
    if (pt.i > 0 && pt.k > 0) out.E = CoeffName{'e', {pt.i - 1, pt.j, pt.k - 1}};
    if (pt.i > 0 && pt.j > 0) out.F = CoeffName{'f', {pt.i - 1, pt.j - 1, pt.k}};
    if (pt.i > 0 && pt.k > 0 && pt.j == 0)
        out.Estar = ScaledName{CoeffName{'e', {pt.i - 1, 0, pt.k - 1}}, Rat(1)};
    else if (pt.i > 0 && pt.j > 0 && pt.k > 0)
        out.Estar = ScaledName{CoeffName{'f', {pt.i - 1, pt.j - 1, pt.k}}, -rat(pt.k, pt.j)};
    return out;
}

std::vector<CoeffName> tied_set(const std::vector<GridPoint>& points, int n) {
    std::vector<CoeffName> hit;
    for (const auto& p : points) {
        PhiImage phi = phi_maps(p, n);
        if (phi.D) hit.push_back(*phi.D);
        if (phi.E) hit.push_back(*phi.E);
        if (phi.F) hit.push_back(*phi.F);
    }
    std::sort(hit.begin(), hit.end());
    std::vector<CoeffName> out;
    for (const auto& name : coefficient_universe(n))
        if (!std::binary_search(hit.begin(), hit.end(), name)) out.push_back(name);
    return out;
}

SyzygyColumn minors(const HilbertBurchMatrix& m) {
    const auto& [A, B, C] = m.linear;
    const auto& [D, E, F] = m.high;
    return {B * F - C * E, C * D - A * F, A * E - B * D};
}

SyzygyColumn curl(const SyzygyColumn& g) {
    return {g[1].partial(Var::X) - g[0].partial(Var::Y),
            g[2].partial(Var::X) - g[0].partial(Var::Z),
            g[2].partial(Var::Y) - g[1].partial(Var::Z)};
}

HomPoly g_from_matrix(const HilbertBurchMatrix& m) {
    SyzygyColumn g = minors(m);
    HomPoly det = HomPoly::variable(Var::X) * g[0] + HomPoly::variable(Var::Y) * g[1] +
                  HomPoly::variable(Var::Z) * g[2];
    return det.scaled(rat(1, m.n));
}

Rat Constraint::evaluate(const CoefficientAssignment& assignment) const {
    Rat total(0);
    for (const auto& t : terms) {
        Rat v = t.factor * assignment.value(t.coeff);
        if (sgn(v) == 0) continue;
        if (t.abc_form) {
            Rat form(0);
            for (int s = 0; s < 3; ++s)
                form += Rat((*t.abc_form)[static_cast<std::size_t>(s)]) *
                        assignment.abc[static_cast<std::size_t>(s)];
            v *= form;
        }
        total += v;
    }
    return total;
}

std::vector<Constraint> six_family_system(int n) {
    if (n < 3) throw std::invalid_argument("six_family_system requires n >= 3");
    std::vector<Constraint> out;
    for (int i = 0; i <= n - 2; ++i)
        for (int j = 0; j <= n - 2 - i; ++j) {
            int k = n - 2 - i - j;
            CoeffName fijk{'f', {i, j, k}};
            CoeffName eijk{'e', {i, j, k}};
            // K1 coefficient at (i,j,k)
            Constraint k1;
            k1.terms.push_back({Rat(1), std::array<int, 3>{i + 1, j + 1, 0}, fijk});
            if (k > 0)
                k1.terms.push_back({rat(-(j + 1)), std::array<int, 3>{0, 0, 1},
                                    CoeffName{'e', {i, j + 1, k - 1}}});
            out.push_back(std::move(k1));
            // K2 coefficient
            Constraint k2;
            k2.terms.push_back({Rat(1), std::array<int, 3>{i + 1, 0, k + 1}, eijk});
            if (j > 0)
                k2.terms.push_back({rat(-(k + 1)), std::array<int, 3>{0, 1, 0},
                                    CoeffName{'f', {i, j - 1, k + 1}}});
            out.push_back(std::move(k2));
            // K3 coefficient
            Constraint k3;
            if (i == 0) {
                k3.terms.push_back({Rat(1), std::array<int, 3>{0, j + 1, k + 1},
                                    CoeffName{'d', {0, j, k}}});
            } else {
                k3.terms.push_back({rat(j + 1), std::nullopt, CoeffName{'e', {i - 1, j + 1, k}}});
                k3.terms.push_back({rat(k + 1), std::nullopt, CoeffName{'f', {i - 1, j, k + 1}}});
            }
            out.push_back(std::move(k3));
        }
    return out;
}

std::vector<Constraint> four_family_system(int n) {
    if (n < 3) throw std::invalid_argument("four_family_system requires n >= 3");
    std::vector<Constraint> out;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n - i; ++j) {
            int k = n - i - j;
            std::array<int, 3> form{i, j, k};
            if (i > 0 && k > 0)
                out.push_back({{{Rat(1), form, CoeffName{'e', {i - 1, j, k - 1}}}}});
            if (i > 0 && j > 0)
                out.push_back({{{Rat(1), form, CoeffName{'f', {i - 1, j - 1, k}}}}});
            if (i == 0 && j > 0 && k > 0)
                out.push_back({{{Rat(1), form, CoeffName{'d', {0, j - 1, k - 1}}}}});
            if (i > 0 && j > 0 && k > 0)
                out.push_back({{{rat(j), std::nullopt, CoeffName{'e', {i - 1, j, k - 1}}},
                                {rat(k), std::nullopt, CoeffName{'f', {i - 1, j - 1, k}}}}});
        }
    return out;
}

std::array<Int, 3> line_normal(const MaximalSegment& h) {
    if (h.points.size() < 2) throw std::invalid_argument("line_normal requires >= 2 points");
    const GridPoint& p = h.extreme_p;
    const GridPoint& q = h.extreme_q;
    Int a = Int(p.j) * q.k - Int(p.k) * q.j;
    Int b = Int(p.k) * q.i - Int(p.i) * q.k;
    Int c = Int(p.i) * q.j - Int(p.j) * q.i;
    Int g = gcd(gcd(abs(a), abs(b)), abs(c));
    if (sgn(g) == 0) throw std::invalid_argument("degenerate segment");
    a /= g;
    b /= g;
    c /= g;
    if (sgn(a) < 0 || (sgn(a) == 0 && (sgn(b) < 0 || (sgn(b) == 0 && sgn(c) < 0)))) {
        a = -a;
        b = -b;
        c = -c;
    }
    return {a, b, c};
}

std::array<Int, 3> solve_abc(const MaximalSegment& h) {
    if (h.aligned_with({h.n, 0, 0}))
        throw std::invalid_argument("segment collinear with (n,0,0) forces a = 0");
    return line_normal(h);
}

std::array<HomPoly, 3> build_DEF(const MaximalSegment& h,
                                 const CoefficientAssignment& assignment, bool star) {
    int n = h.n;
    HomPoly D(n - 2), E(n - 2), F(n - 2);
    bool any = false;
    for (const auto& p : h.points) {
        PhiImage phi = phi_maps(p, n);
        if (phi.D) {
            Rat v = assignment.value(*phi.D);
            if (sgn(v) != 0) any = true;
            D.add_term({p.i, p.j - 1, p.k - 1}, v);
        }
        if (star) {
            if (phi.Estar) {
                Rat v = phi.Estar->factor * assignment.value(phi.Estar->name);
                if (sgn(v) != 0) any = true;
                E.add_term({p.i - 1, p.j, p.k - 1}, v);
            }
        } else if (phi.E) {
            Rat v = assignment.value(*phi.E);
            if (sgn(v) != 0) any = true;
            E.add_term({p.i - 1, p.j, p.k - 1}, v);
        }
        if (phi.F) {
            Rat v = assignment.value(*phi.F);
            if (sgn(v) != 0) any = true;
            F.add_term({p.i - 1, p.j - 1, p.k}, v);
        }
    }
    if (!any) throw std::invalid_argument("all surviving coefficients are zero");
    return {D, E, F};
}

HilbertBurchMatrix assemble_matrix(const std::array<Rat, 3>& abc,
                                   const std::array<HomPoly, 3>& def, int n) {
    HilbertBurchMatrix m;
    m.n = n;
    m.linear = {HomPoly::variable(Var::X).scaled(abc[0]),
                HomPoly::variable(Var::Y).scaled(abc[1]),
                HomPoly::variable(Var::Z).scaled(abc[2])};
    m.high = def;
    return m;
}

HomPoly g_H_formula(const MaximalSegment& h, const CoefficientAssignment& assignment) {
    int n = h.n;
    const Rat& a = assignment.abc[0];
    const Rat& b = assignment.abc[1];
    const Rat& c = assignment.abc[2];
    HomPoly ng(n);
    for (const auto& p : h.points) {
        PhiImage phi = phi_maps(p, n);
        Rat coeff(0);
        if (phi.D) coeff += (c - b) * assignment.value(*phi.D);
        if (phi.Estar) coeff += (a - c) * phi.Estar->factor * assignment.value(phi.Estar->name);
        if (phi.F) coeff += (b - a) * assignment.value(*phi.F);
        ng.add_term(p, coeff);
    }
    return ng.scaled(rat(1, n));
}

HomPoly gHstar_singleton(const GridPoint& pt, const CoefficientAssignment& assignment) {
    if (pt.i <= 0 || pt.j <= 0 || pt.k <= 0)
        throw std::invalid_argument("gHstar_singleton requires an interior point");
    int n = pt.degree();
    const Rat& a = assignment.abc[0];
    const Rat& b = assignment.abc[1];
    const Rat& c = assignment.abc[2];
    Rat f = assignment.value(CoeffName{'f', {pt.i - 1, pt.j - 1, pt.k}});
    Rat coeff = ((a - c) * rat(-pt.k, pt.j) + (b - a)) * f / Rat(n);
    HomPoly g(n);
    g.add_term(pt, coeff);
    return g;
}

CoefficientAssignment satisfying_assignment(const MaximalSegment& h, Rng& rng) {
    CoefficientAssignment out;
    // line_normal, not solve_abc: the identities hold on (n,0,0)-aligned
    // segments too, even though those never form valid components
    auto abc = line_normal(h);
    for (int s = 0; s < 3; ++s) out.abc[static_cast<std::size_t>(s)] = Rat(abc[static_cast<std::size_t>(s)]);
    for (const auto& p : h.points) {
        PhiImage phi = phi_maps(p, h.n);
        if (phi.D) out.values[*phi.D] = rng.rational();
        if (phi.F) out.values[*phi.F] = rng.rational();
        if (phi.E && p.j == 0) out.values[*phi.E] = rng.rational();
    }
    // eqA4 fixes the interior e values in terms of f
    for (const auto& p : h.points) {
        if (p.i > 0 && p.j > 0 && p.k > 0) {
            Rat f = out.value(CoeffName{'f', {p.i - 1, p.j - 1, p.k}});
            out.values[CoeffName{'e', {p.i - 1, p.j, p.k - 1}}] = -rat(p.k, p.j) * f;
        }
    }
    return out;
}

}  // namespace freecurve
