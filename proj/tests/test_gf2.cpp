#include "doctest.h"

#include "radial/classical.hpp"
#include "radial/gf2.hpp"
#include "radial/rng.hpp"

using namespace radial;

namespace {

BinaryMatrix from_strings(const std::vector<std::string>& rows) {
    BinaryMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] == '1') m.set(i, j, true);
    return m;
}

// Independent row-reduction oracle: rank by naive boolean elimination.
std::size_t rank_oracle(const BinaryMatrix& m) {
    std::vector<std::vector<int>> a(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.get(i, j);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !a[p][c]) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && a[i][c])
                for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] ^= a[r][j];
        ++r;
    }
    return r;
}

BinaryMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    BinaryMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng.next_bool());
    return m;
}

}  // namespace

TEST_CASE("rank on the small radial parity check matrices") {
    // A = [[0,0],[0,0]] over s=3: duplicated row blocks.
    BinaryMatrix eq4a = binary_pcm(AMatrix(2, 3, {{0, 0}, {0, 0}}));
    CHECK(rank_oracle(eq4a) == 3);
    CHECK(rank(eq4a) == 3);

    // A = [[0,0],[1,0]] over s=3: exactly r-1 = 1 dependency.
    BinaryMatrix eq4b = binary_pcm(AMatrix(2, 3, {{0, 0}, {1, 0}}));
    CHECK(rank(eq4b) == 5);
    CHECK(rank_oracle(eq4b) == 5);

    CHECK(rank(BinaryMatrix(4, 4)) == 0);
}

TEST_CASE("rref basics") {
    BinaryMatrix id3 = BinaryMatrix::identity(3);
    RrefResult rr = rref(id3);
    CHECK(rr.reduced == id3);
    CHECK(rr.pivot_cols == std::vector<uint32_t>{0, 1, 2});

    BinaryMatrix eq4a = binary_pcm(AMatrix(2, 3, {{0, 0}, {0, 0}}));
    CHECK(rref(eq4a).pivot_cols.size() == 3);

    BinaryMatrix ones = from_strings({"1111", "1111"});
    RrefResult rr2 = rref(ones);
    CHECK(rr2.pivot_cols.size() == 1);
    CHECK(rr2.reduced.row_weight(0) == 4);
    CHECK(rr2.reduced.row_weight(1) == 0);
}

TEST_CASE("rref transform identity: reduced = transform * input") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        BinaryMatrix m = random_matrix(7, 9, rng);
        RrefResult rr = rref(m);
        CHECK(matmul(rr.transform, m) == rr.reduced);
        // Idempotence: rref of the reduced matrix is itself.
        CHECK(rref(rr.reduced).reduced == rr.reduced);
    }
}

TEST_CASE("nullspace basis") {
    BinaryMatrix eq4b = binary_pcm(AMatrix(2, 3, {{0, 0}, {1, 0}}));
    auto basis = nullspace_basis(eq4b);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].weight() == 6);  // the all-ones vector of the 6-bit repetition code

    CHECK(nullspace_basis(BinaryMatrix::identity(4)).empty());
    CHECK(nullspace_basis(BinaryMatrix(2, 3)).size() == 3);
}

TEST_CASE("nullspace vectors are in the kernel and independent") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        BinaryMatrix m = random_matrix(6, 11, rng);
        auto basis = nullspace_basis(m);
        CHECK(basis.size() == m.cols() - rank(m));
        for (const auto& v : basis) CHECK(matvec(m, v).is_zero());
        if (!basis.empty()) {
            BinaryMatrix stacked = BinaryMatrix::from_rows(basis, m.cols());
            CHECK(rank(stacked) == basis.size());
        }
    }
}

TEST_CASE("matmul and matvec") {
    BinaryMatrix id = BinaryMatrix::identity(5);
    Rng rng(3);
    BinaryMatrix m = random_matrix(5, 5, rng);
    CHECK(matmul(id, m) == m);

    BinaryVector zero(5);
    CHECK(matvec(m, zero).is_zero());

    BinaryVector v(5);
    v.set(2, true);
    v.set(4, true);
    CHECK(matvec(id, v) == v);

    CHECK_THROWS_AS(matmul(BinaryMatrix(2, 3), BinaryMatrix(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(matvec(BinaryMatrix(2, 3), BinaryVector(2)), std::invalid_argument);
}

TEST_CASE("in_rowspace") {
    Rng rng(7);
    BinaryMatrix m = random_matrix(4, 8, rng);
    for (std::size_t i = 0; i < m.rows(); ++i) CHECK(in_rowspace(m, m.row(i)));
    CHECK(in_rowspace(m, BinaryVector(8)));

    BinaryVector sum = m.row(0) ^ m.row(2) ^ m.row(3);
    CHECK(in_rowspace(m, sum));
}

TEST_CASE("rank(M) == rank(M^T) on random matrices") {
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 1 + rng.next_below(12);
        std::size_t cols = 1 + rng.next_below(12);
        BinaryMatrix m = random_matrix(rows, cols, rng);
        CHECK(rank(m) == rank(m.transpose()));
        CHECK(m.transpose().transpose() == m);
    }
}

TEST_CASE("alist and json serialization round-trip bit-exactly") {
    Rng rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        BinaryMatrix m = random_matrix(5 + rng.next_below(8), 3 + rng.next_below(70), rng);
        CHECK(from_alist(to_alist(m)) == m);
        CHECK(matrix_from_json(to_json(m)) == m);
    }
    // Empty rows survive the text form.
    BinaryMatrix sparse(3, 4);
    sparse.set(0, 1, true);
    sparse.set(2, 3, true);
    CHECK(from_alist(to_alist(sparse)) == sparse);
}
