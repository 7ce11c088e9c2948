#ifndef FREECURVE_POLY_HPP
#define FREECURVE_POLY_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "freecurve/rational.hpp"
#include "freecurve/rng.hpp"

namespace freecurve {

enum class Var { X = 0, Y = 1, Z = 2 };

struct Exponents {
    int i = 0, j = 0, k = 0;

    int degree() const { return i + j + k; }
    int operator[](int s) const { return s == 0 ? i : (s == 1 ? j : k); }
    friend bool operator==(const Exponents&, const Exponents&) = default;
};

// Graded lexicographic with x > y > z, descending, so that map iteration
// yields the canonical printing order.
struct GradedLexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    }
};

/// Sparse exact-rational homogeneous form in x, y, z. Immutable in spirit:
/// every operation returns a fresh value. The zero polynomial keeps a
/// declared degree so derivative chains and add/sub stay well-typed.
class HomPoly {
public:
    using TermMap = std::map<Exponents, Rat, GradedLexDesc>;

    explicit HomPoly(int degree = 0) : degree_(degree) {
        if (degree < 0) throw std::invalid_argument("negative degree");
    }

    static HomPoly monomial(Exponents e, Rat c);
    static HomPoly variable(Var v);
    static HomPoly constant(const Rat& c);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rat coeff(Exponents e) const;
    std::size_t term_count() const { return terms_.size(); }

    HomPoly operator+(const HomPoly& o) const;
    HomPoly operator-(const HomPoly& o) const;
    HomPoly operator-() const;
    HomPoly operator*(const HomPoly& o) const;
    HomPoly scaled(const Rat& s) const;

    HomPoly partial(Var v) const;
    Rat evaluate(const Rat& x, const Rat& y, const Rat& z) const;

    // Exact division by the monomial x^a y^b z^c; throws if any term is not
    // divisible.
    HomPoly divide_by_monomial(int a, int b, int c) const;

    // Substitute x -> L0, y -> L1, z -> L2 (arbitrary homogeneous forms of
    // equal degree); used by the projectivity check.
    HomPoly substitute(const HomPoly& L0, const HomPoly& L1, const HomPoly& L2) const;

    // Adds c * x^i y^j z^k in place (construction helper, drops zeros).
    void add_term(Exponents e, const Rat& c);

    std::string to_string() const;
    static HomPoly parse(const std::string& text);

    friend bool operator==(const HomPoly& a, const HomPoly& b) {
        return a.terms_ == b.terms_ && (a.terms_.empty() || a.degree_ == b.degree_);
    }

private:
    int degree_;
    TermMap terms_;
};

/// Dense univariate polynomial over the rationals, lowest degree first.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    UniPoly derivative() const;
    static UniPoly gcd(UniPoly a, UniPoly b);

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

// Restriction of g to the affine line (x,y,z) = p0 + t*p1, as a polynomial
// in t.
UniPoly restrict_to_line(const HomPoly& g, const std::array<Rat, 3>& p0,
                         const std::array<Rat, 3>& p1);

// Probabilistic squarefreeness test: restricts g to `trials` random rational
// lines and inspects gcd(restriction, restriction'). Returns false as soon
// as one restriction shows a repeated-root pattern.
bool squarefree_test(const HomPoly& g, unsigned trials, Rng& rng);
bool squarefree_test(const HomPoly& g, unsigned trials = 5);

}  // namespace freecurve

#endif
