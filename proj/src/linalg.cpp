#include "freecurve/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace freecurve {

namespace {

struct Echelon {
    std::vector<std::vector<Int>> m;   // fraction-free row echelon
    std::vector<std::size_t> pivot_col;  // one entry per pivot row
};

// Bareiss elimination with row pivoting; columns without a pivot are free.
Echelon bareiss(const QMatrix& a) {
    std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Int lcm = 1;
        for (std::size_t c = 0; c < cols; ++c) lcm = ::lcm(lcm, a.at(r, c).get_den());
        for (std::size_t c = 0; c < cols; ++c) {
            Rat v = a.at(r, c) * Rat(lcm);
            m[r][c] = v.get_num();
        }
    }
    Echelon e;
    Int prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        // smallest nonzero pivot keeps the growth down
        std::size_t best = rows;
        for (std::size_t r = row; r < rows; ++r) {
            if (sgn(m[r][col]) == 0) continue;
            if (best == rows || mpz_cmpabs(m[r][col].get_mpz_t(), m[best][col].get_mpz_t()) < 0)
                best = r;
        }
        if (best == rows) continue;
        std::swap(m[row], m[best]);
        const Int pivot = m[row][col];
        for (std::size_t r = row + 1; r < rows; ++r) {
            const Int factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                Int t = pivot * m[r][c] - factor * m[row][c];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[r][c] = std::move(t);
            }
        }
        prev = pivot;
        e.pivot_col.push_back(col);
        ++row;
    }
    m.resize(e.pivot_col.size());
    e.m = std::move(m);
    return e;
}

}  // namespace

std::size_t QMatrix::rank() const { return bareiss(*this).pivot_col.size(); }

std::vector<std::vector<Rat>> QMatrix::kernel() const {
    Echelon e = bareiss(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : e.pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> x(cols_, Rat(0));
        x[f] = 1;
        for (std::size_t r = e.pivot_col.size(); r-- > 0;) {
            std::size_t pc = e.pivot_col[r];
            Rat acc(0);
            for (std::size_t c = pc + 1; c < cols_; ++c)
                if (sgn(x[c]) != 0 && sgn(e.m[r][c]) != 0) acc += Rat(e.m[r][c]) * x[c];
            x[pc] = -acc / Rat(e.m[r][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

QMatrix QMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = rows_;
    std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(2 * n, Rat(0)));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r][c] = at(r, c);
        aug[r][n + r] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = col; r < n; ++r)
            if (sgn(aug[r][col]) != 0) { piv = r; break; }
        if (piv == n) throw std::invalid_argument("singular matrix");
        std::swap(aug[col], aug[piv]);
        Rat p = aug[col][col];
        for (auto& v : aug[col]) v /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(aug[r][col]) == 0) continue;
            Rat f = aug[r][col];
            for (std::size_t c = 0; c < 2 * n; ++c) aug[r][c] -= f * aug[col][c];
        }
    }
    QMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug[r][n + c];
    return inv;
}

std::vector<std::vector<Rat>> rref_canonical(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return rows;
    std::size_t cols = rows[0].size();
    std::size_t top = 0;
    for (std::size_t col = 0; col < cols && top < rows.size(); ++col) {
        std::size_t piv = rows.size();
        for (std::size_t r = top; r < rows.size(); ++r)
            if (sgn(rows[r][col]) != 0) { piv = r; break; }
        if (piv == rows.size()) continue;
        std::swap(rows[top], rows[piv]);
        Rat p = rows[top][col];
        for (auto& v : rows[top]) v /= p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == top || sgn(rows[r][col]) == 0) continue;
            Rat f = rows[r][col];
            for (std::size_t c = 0; c < cols; ++c) rows[r][c] -= f * rows[top][c];
        }
        ++top;
    }
    rows.resize(top);
    return rows;
}

}  // namespace freecurve
