#include <doctest.h>

#include <random>

#include "borelss/errors.hpp"
#include "borelss/f2_matrix.hpp"

using namespace borelss;

namespace {

F2Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    F2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, rng() & 1u);
    return m;
}

// Invertible matrix as a product of random elementary row additions.
F2Matrix random_invertible(std::mt19937& rng, std::size_t n) {
    F2Matrix m = F2Matrix::identity(n);
    if (n < 2)
        return m;
    for (int step = 0; step < 40; ++step) {
        const std::size_t i = rng() % n, j = rng() % n;
        if (i == j)
            continue;
        F2Matrix e = F2Matrix::identity(n);
        e.set(i, j, true);
        m = e * m;
    }
    return m;
}

}  // namespace

TEST_CASE("rank of small matrices") {
    CHECK(rank(F2Matrix(3, 3)) == 0);
    CHECK(rank(F2Matrix::identity(4)) == 4);
    CHECK(rank(F2Matrix::from_rows({"11", "11"})) == 1);
    CHECK(rank(F2Matrix::from_rows({"110", "011", "101"})) == 2);
    CHECK(rank(F2Matrix(0, 5)) == 0);
}

TEST_CASE("rank across word boundaries") {
    F2Matrix m(3, 130);
    m.set(0, 0, true);
    m.set(1, 64, true);
    m.set(2, 129, true);
    m.set(2, 0, true);
    CHECK(rank(m) == 3);
    CHECK(rank(m.transpose()) == 3);
}

TEST_CASE("from_rows rejects ragged or non-binary input") {
    CHECK_THROWS_AS(F2Matrix::from_rows({"10", "1"}), InvalidInput);
    CHECK_THROWS_AS(F2Matrix::from_rows({"12"}), InvalidInput);
}

TEST_CASE("homology_dim") {
    SUBCASE("no differentials") { CHECK(homology_dim(F2Matrix(3, 0), F2Matrix(0, 3)) == 3); }
    SUBCASE("injective outgoing map") { CHECK(homology_dim(F2Matrix(3, 0), F2Matrix::identity(3)) == 0); }
    SUBCASE("one boundary in a plane") {
        // d_in: F2 -> F2^2 hits (1,0); every vector of F2^2 is a cycle.
        CHECK(homology_dim(F2Matrix::from_rows({"1", "0"}), F2Matrix(0, 2)) == 1);
    }
    SUBCASE("shape mismatch") {
        CHECK_THROWS_AS(homology_dim(F2Matrix(2, 1), F2Matrix(1, 3)), PreconditionViolation);
    }
    SUBCASE("nonzero composite") {
        CHECK_THROWS_AS(homology_dim(F2Matrix::from_rows({"1"}), F2Matrix::from_rows({"1"})), PreconditionViolation);
    }
}

TEST_CASE("rank equals rank of the transpose") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = random_matrix(rng, 1 + rng() % 12, 1 + rng() % 90);
        CHECK(rank(m) == rank(m.transpose()));
        CHECK(rank(m) <= std::min(m.row_count(), m.col_count()));
    }
}

TEST_CASE("rank is invariant under invertible changes of basis") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        const auto m = random_matrix(rng, rows, cols);
        const auto p = random_invertible(rng, rows);
        const auto q = random_invertible(rng, cols);
        CHECK(rank(p * m * q) == rank(m));
    }
}

TEST_CASE("homology_dim is invariant under a change of basis of the middle space") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t in = 1 + rng() % 5, mid = 2 + rng() % 6;
        // d_in spans a random subspace, d_out kills exactly that subspace's span plus more.
        const auto d_in = random_matrix(rng, mid, in);
        // Rows of d_out: random vectors orthogonal to every column of d_in.
        F2Matrix d_out(0, mid);
        std::vector<std::string> rows;
        for (int tries = 0; tries < 20; ++tries) {
            std::string row;
            for (std::size_t c = 0; c < mid; ++c)
                row.push_back((rng() & 1u) ? '1' : '0');
            const auto candidate = F2Matrix::from_rows({row});
            if ((candidate * d_in).is_zero())
                rows.push_back(row);
        }
        if (!rows.empty())
            d_out = F2Matrix::from_rows(rows);
        const std::size_t h = homology_dim(d_in, d_out);
        CHECK(h == mid - rank(d_out) - rank(d_in));

        // Change basis in the middle space: d_in -> P d_in, d_out -> d_out P^{-1}.
        F2Matrix p = F2Matrix::identity(mid), p_inv = F2Matrix::identity(mid);
        for (int step = 0; step < 10; ++step) {
            const std::size_t i = rng() % mid, j = rng() % mid;
            if (i == j)
                continue;
            F2Matrix e = F2Matrix::identity(mid);
            e.set(i, j, true);  // elementary matrices over F2 are involutions
            p = e * p;
            p_inv = p_inv * e;
        }
        REQUIRE((p * p_inv) == F2Matrix::identity(mid));
        CHECK(homology_dim(p * d_in, d_out * p_inv) == h);
    }
}
