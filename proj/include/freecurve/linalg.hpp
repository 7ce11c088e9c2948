#ifndef FREECURVE_LINALG_HPP
#define FREECURVE_LINALG_HPP

#include <cstddef>
#include <vector>

#include "freecurve/rational.hpp"

namespace freecurve {

/// Dense exact-rational matrix. Rank and kernel go through fraction-free
/// (Bareiss) elimination over the integers after clearing denominators
/// row-wise, so intermediate entries stay bounded by minors of the input.
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, std::vector<Rat>(cols, Rat(0))) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t r, std::size_t c) { return data_[r][c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r][c]; }

    std::size_t rank() const;

    // Basis of the right kernel {x : A x = 0}; one vector per free column.
    std::vector<std::vector<Rat>> kernel() const;

    // Inverse of a square matrix; throws on singular input.
    QMatrix inverse() const;

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<Rat>> data_;
};

// Canonical reduced row echelon form of a list of row vectors (zero rows
// dropped, pivots scaled to 1). Two spanning sets generate the same subspace
// iff their canonical forms are identical.
std::vector<std::vector<Rat>> rref_canonical(std::vector<std::vector<Rat>> rows);

}  // namespace freecurve

#endif
