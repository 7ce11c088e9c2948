#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freecurve/linalg.hpp"
#include "freecurve/rng.hpp"

using namespace freecurve;

namespace {

QMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.uniform(0, 2) != 0) m.at(r, c) = rng.rational();
    return m;
}

}  // namespace

TEST_CASE("rank of simple matrices") {
    QMatrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r) m.at(r, r) = Rat(1);
    CHECK(m.rank() == 3);
    QMatrix z(4, 2);
    CHECK(z.rank() == 0);
    QMatrix dup(2, 3);
    dup.at(0, 0) = rat(1, 2);
    dup.at(0, 1) = Rat(3);
    dup.at(1, 0) = Rat(2);
    dup.at(1, 1) = Rat(12);
    CHECK(dup.rank() == 1);
}

TEST_CASE("kernel vectors satisfy A x = 0 and span the right dimension") {
    Rng rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 6));
        std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 6));
        QMatrix m = random_matrix(rows, cols, rng);
        auto kernel = m.kernel();
        CHECK(kernel.size() == cols - m.rank());
        for (const auto& x : kernel)
            for (std::size_t r = 0; r < rows; ++r) {
                Rat acc(0);
                for (std::size_t c = 0; c < cols; ++c) acc += m.at(r, c) * x[c];
                CHECK(sgn(acc) == 0);
            }
    }
}

TEST_CASE("inverse") {
    Rng rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        QMatrix m = random_matrix(3, 3, rng);
        if (m.rank() < 3) {
            CHECK_THROWS_AS(m.inverse(), std::invalid_argument);
            continue;
        }
        QMatrix inv = m.inverse();
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) {
                Rat acc(0);
                for (std::size_t s = 0; s < 3; ++s) acc += m.at(r, s) * inv.at(s, c);
                CHECK(acc == (r == c ? Rat(1) : Rat(0)));
            }
    }
}

TEST_CASE("rref canonical form identifies equal row spaces") {
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::vector<Rat>> rows;
        for (int r = 0; r < 3; ++r) {
            std::vector<Rat> row;
            for (int c = 0; c < 5; ++c) row.push_back(rng.rational());
            rows.push_back(std::move(row));
        }
        // same space, shuffled and rescaled combinations
        std::vector<std::vector<Rat>> other;
        other.push_back(rows[1]);
        std::vector<Rat> combo(5);
        for (int c = 0; c < 5; ++c) combo[static_cast<std::size_t>(c)] =
            rows[0][static_cast<std::size_t>(c)] * Rat(3) + rows[2][static_cast<std::size_t>(c)];
        other.push_back(combo);
        other.push_back(rows[2]);
        other.push_back(rows[0]);
        CHECK(rref_canonical(rows) == rref_canonical(other));
    }
}
