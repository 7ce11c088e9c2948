#include "freecurve/poly.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace freecurve {

HomPoly HomPoly::monomial(Exponents e, Rat c) {
    HomPoly p(e.degree());
    p.add_term(e, c);
    return p;
}

HomPoly HomPoly::variable(Var v) {
    Exponents e;
    switch (v) {
        case Var::X: e = {1, 0, 0}; break;
        case Var::Y: e = {0, 1, 0}; break;
        case Var::Z: e = {0, 0, 1}; break;
    }
    return monomial(e, rat(1));
}

HomPoly HomPoly::constant(const Rat& c) { return monomial({0, 0, 0}, c); }

Rat HomPoly::coeff(Exponents e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void HomPoly::add_term(Exponents e, const Rat& c) {
    if (e.degree() != degree_) throw std::invalid_argument("term degree mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (freecurve::is_zero(it->second)) terms_.erase(it);
    }
}

HomPoly HomPoly::operator+(const HomPoly& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch in add");
    HomPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

HomPoly HomPoly::operator-(const HomPoly& o) const { return *this + (-o); }

HomPoly HomPoly::operator-() const {
    HomPoly r(degree_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

HomPoly HomPoly::operator*(const HomPoly& o) const {
    HomPoly r(degree_ + o.degree_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term({ea.i + eb.i, ea.j + eb.j, ea.k + eb.k}, ca * cb);
    return r;
}

HomPoly HomPoly::scaled(const Rat& s) const {
    HomPoly r(degree_);
    if (freecurve::is_zero(s)) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

HomPoly HomPoly::partial(Var v) const {
    if (degree_ < 1) throw std::invalid_argument("partial of degree-0 form");
    HomPoly r(degree_ - 1);
    for (const auto& [e, c] : terms_) {
        switch (v) {
            case Var::X:
                if (e.i > 0) r.add_term({e.i - 1, e.j, e.k}, c * e.i);
                break;
            case Var::Y:
                if (e.j > 0) r.add_term({e.i, e.j - 1, e.k}, c * e.j);
                break;
            case Var::Z:
                if (e.k > 0) r.add_term({e.i, e.j, e.k - 1}, c * e.k);
                break;
        }
    }
    return r;
}

Rat HomPoly::evaluate(const Rat& x, const Rat& y, const Rat& z) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int s = 0; s < e.i; ++s) t *= x;
        for (int s = 0; s < e.j; ++s) t *= y;
        for (int s = 0; s < e.k; ++s) t *= z;
        acc += t;
    }
    return acc;
}

HomPoly HomPoly::divide_by_monomial(int a, int b, int c) const {
    int d = degree_ - a - b - c;
    if (d < 0) throw std::invalid_argument("monomial degree exceeds polynomial degree");
    HomPoly r(d);
    for (const auto& [e, co] : terms_) {
        if (e.i < a || e.j < b || e.k < c)
            throw std::invalid_argument("term not divisible by monomial");
        r.terms_.emplace(Exponents{e.i - a, e.j - b, e.k - c}, co);
    }
    return r;
}

HomPoly HomPoly::substitute(const HomPoly& L0, const HomPoly& L1, const HomPoly& L2) const {
    int d = L0.degree();
    if (L1.degree() != d || L2.degree() != d)
        throw std::invalid_argument("substitution forms of unequal degree");
    HomPoly acc(degree_ * d);
    for (const auto& [e, c] : terms_) {
        HomPoly t = HomPoly::constant(c);
        for (int s = 0; s < e.i; ++s) t = t * L0;
        for (int s = 0; s < e.j; ++s) t = t * L1;
        for (int s = 0; s < e.k; ++s) t = t * L2;
        acc = acc + t;
    }
    return acc;
}

namespace {

void append_power(std::ostringstream& os, bool& first_factor, char var, int exp) {
    if (exp == 0) return;
    if (!first_factor) os << "*";
    first_factor = false;
    os << var;
    if (exp != 1) os << "^" << exp;
}

}  // namespace

std::string HomPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        bool is_const = (e.degree() == 0);
        bool printed_coeff = false;
        if (a != 1 || is_const) {
            os << rat_to_string(a);
            printed_coeff = true;
        }
        bool first_factor = !printed_coeff;
        append_power(os, first_factor, 'x', e.i);
        append_power(os, first_factor, 'y', e.j);
        append_power(os, first_factor, 'z', e.k);
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return s[pos];
    }

    long parse_integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw std::invalid_argument("expected integer at position " + std::to_string(start));
        return std::stol(s.substr(start, pos - start));
    }

    // term := [rational] ('*'? var ('^' int)?)*
    void parse_term(int sign, std::optional<HomPoly>& out) {
        Rat coeff(sign);
        skip_ws();
        if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
            long num = parse_integer();
            long den = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                den = parse_integer();
            }
            coeff *= rat(num, den);
        }
        Exponents e;
        bool any_var = false;
        for (;;) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                skip_ws();
            }
            if (pos >= s.size()) break;
            char c = s[pos];
            if (c != 'x' && c != 'y' && c != 'z') break;
            ++pos;
            int exp = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                exp = static_cast<int>(parse_integer());
                if (exp < 0) throw std::invalid_argument("negative exponent");
            }
            if (c == 'x') e.i += exp;
            else if (c == 'y') e.j += exp;
            else e.k += exp;
            any_var = true;
        }
        (void)any_var;
        if (!out) out.emplace(e.degree());
        if (e.degree() != out->degree())
            throw std::invalid_argument("non-homogeneous input: mixed term degrees");
        out->add_term(e, coeff);
    }
};

}  // namespace

HomPoly HomPoly::parse(const std::string& text) {
    Parser p(text);
    if (p.eof()) throw std::invalid_argument("empty polynomial text");
    std::optional<HomPoly> acc;
    bool first = true;
    while (!p.eof()) {
        int sign = 1;
        char c = p.peek();
        if (c == '+' || c == '-') {
            sign = (c == '-') ? -1 : 1;
            ++p.pos;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
        p.parse_term(sign, acc);
        first = false;
    }
    return *acc;
}

void UniPoly::normalize() {
    while (!coeffs_.empty() && freecurve::is_zero(coeffs_.back())) coeffs_.pop_back();
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t m = 1; m < coeffs_.size(); ++m) d[m - 1] = coeffs_[m] * static_cast<long>(m);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    auto make_monic = [](UniPoly& p) {
        if (p.is_zero()) return;
        Rat lead = p.coeffs_.back();
        for (auto& c : p.coeffs_) c /= lead;
    };
    while (!b.is_zero()) {
        // a mod b
        UniPoly r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Rat q = r.coeffs_.back() / b.coeffs_.back();
            int shift = r.degree() - b.degree();
            for (int m = 0; m <= b.degree(); ++m)
                r.coeffs_[static_cast<std::size_t>(m + shift)] -= q * b.coeffs_[static_cast<std::size_t>(m)];
            r.normalize();
        }
        a = b;
        b = r;
    }
    make_monic(a);
    return a;
}

UniPoly restrict_to_line(const HomPoly& g, const std::array<Rat, 3>& p0,
                         const std::array<Rat, 3>& p1) {
    // Powers of (p0[v] + t * p1[v]) computed once per variable.
    int n = g.degree();
    std::array<std::vector<std::vector<Rat>>, 3> pw;  // pw[v][e] = coeffs of (p0+t p1)^e
    for (int v = 0; v < 3; ++v) {
        pw[v].resize(static_cast<std::size_t>(n) + 1);
        pw[v][0] = {Rat(1)};
        for (int e = 1; e <= n; ++e) {
            const auto& prev = pw[v][static_cast<std::size_t>(e - 1)];
            std::vector<Rat> cur(prev.size() + 1, Rat(0));
            for (std::size_t m = 0; m < prev.size(); ++m) {
                cur[m] += prev[m] * p0[static_cast<std::size_t>(v)];
                cur[m + 1] += prev[m] * p1[static_cast<std::size_t>(v)];
            }
            pw[v][static_cast<std::size_t>(e)] = std::move(cur);
        }
    }
    std::vector<Rat> out(static_cast<std::size_t>(n) + 1, Rat(0));
    for (const auto& [e, c] : g.terms()) {
        std::vector<Rat> t = {c};
        for (int v = 0; v < 3; ++v) {
            const auto& f = pw[static_cast<std::size_t>(v)][static_cast<std::size_t>(e[v])];
            std::vector<Rat> nt(t.size() + f.size() - 1, Rat(0));
            for (std::size_t a = 0; a < t.size(); ++a)
                for (std::size_t b = 0; b < f.size(); ++b) nt[a + b] += t[a] * f[b];
            t = std::move(nt);
        }
        for (std::size_t m = 0; m < t.size(); ++m) out[m] += t[m];
    }
    return UniPoly(std::move(out));
}

bool squarefree_test(const HomPoly& g, unsigned trials, Rng& rng) {
    if (g.is_zero()) throw std::invalid_argument("squarefree_test on zero polynomial");
    constexpr long kRange = 97;
    for (unsigned t = 0; t < trials; ++t) {
        std::array<Rat, 3> p0, p1;
        for (int v = 0; v < 3; ++v) {
            p0[static_cast<std::size_t>(v)] = rat(rng.uniform(-kRange, kRange));
            p1[static_cast<std::size_t>(v)] = rat(rng.uniform(-kRange, kRange));
        }
        UniPoly r = restrict_to_line(g, p0, p1);
        if (r.is_zero()) return false;  // line inside the curve: repeated pattern
        UniPoly d = r.derivative();
        if (d.is_zero()) continue;  // constant restriction carries no information
        if (UniPoly::gcd(r, d).degree() >= 1) return false;
    }
    return true;
}

bool squarefree_test(const HomPoly& g, unsigned trials) {
    Rng rng(0x5eedf00dULL);
    return squarefree_test(g, trials, rng);
}

}  // namespace freecurve
