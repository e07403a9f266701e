#include <random>
#include <vector>

#include "doctest.h"
#include "syzygy/field.hpp"
#include "syzygy/matrix.hpp"

using namespace syzygy;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime_field(5);
const FieldSpec F7 = FieldSpec::prime_field(7);

Matrix random_matrix(std::mt19937_64& rng, const FieldSpec& f, int rows, int cols) {
    Matrix m(f, rows, cols);
    if (f.is_rationals()) {
        std::uniform_int_distribution<int> dist(-4, 4);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.set(i, j, Scalar::of_int(f, dist(rng)));
    } else {
        std::uniform_int_distribution<uint32_t> dist(0, f.p() - 1);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.set(i, j, Scalar::of_residue(f, dist(rng)));
    }
    return m;
}

// Independent oracle: textbook row-echelon elimination with plain %
// arithmetic, counting nonzero rows. Shares no code with the library path.
int naive_fp_rank(std::vector<std::vector<uint32_t>> a, uint32_t p) {
    int rows = static_cast<int>(a.size());
    int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[sel], a[r]);
        // inverse by exhaustive search, deliberately naive
        uint32_t inv = 0;
        for (uint32_t t = 1; t < p; ++t)
            if (a[r][c] * static_cast<uint64_t>(t) % p == 1) {
                inv = t;
                break;
            }
        for (int j = 0; j < cols; ++j)
            a[r][j] = static_cast<uint32_t>(a[r][j] * static_cast<uint64_t>(inv) % p);
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            uint32_t m = a[i][c];
            for (int j = 0; j < cols; ++j) {
                uint64_t sub = static_cast<uint64_t>(m) * a[r][j] % p;
                a[i][j] = static_cast<uint32_t>((a[i][j] + p - sub) % p);
            }
        }
        ++r;
    }
    return r;
}

// Independent oracle: determinant by Laplace expansion mod p.
uint32_t laplace_det(const std::vector<std::vector<uint32_t>>& a, uint32_t p) {
    int n = static_cast<int>(a.size());
    if (n == 0) return 1 % p;
    if (n == 1) return a[0][0] % p;
    uint64_t acc = 0;
    for (int j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        std::vector<std::vector<uint32_t>> minor(n - 1, std::vector<uint32_t>(n - 1));
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[i - 1][cc++] = a[i][c];
            }
        }
        uint64_t term = static_cast<uint64_t>(a[0][j]) * laplace_det(minor, p) % p;
        if (j % 2 == 1) term = (p - term) % p;
        acc = (acc + term) % p;
    }
    return static_cast<uint32_t>(acc);
}

// rank = size of the largest square submatrix with nonzero determinant
int minor_expansion_rank(const std::vector<std::vector<uint32_t>>& a, uint32_t p) {
    int rows = static_cast<int>(a.size());
    int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    for (int k = std::min(rows, cols); k >= 1; --k) {
        // enumerate k-subsets of rows and columns
        std::vector<int> ri(k), ci(k);
        std::vector<bool> rsel(rows, false), csel(cols, false);
        std::fill(rsel.begin(), rsel.begin() + k, true);
        do {
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.begin(), csel.begin() + k, true);
            do {
                std::vector<std::vector<uint32_t>> sub;
                for (int i = 0; i < rows; ++i) {
                    if (!rsel[i]) continue;
                    sub.emplace_back();
                    for (int j = 0; j < cols; ++j)
                        if (csel[j]) sub.back().push_back(a[i][j]);
                }
                if (laplace_det(sub, p) != 0) return k;
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
    }
    return 0;
}

std::vector<std::vector<uint32_t>> to_grid(const Matrix& m) {
    std::vector<std::vector<uint32_t>> g(m.rows(), std::vector<uint32_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) g[i][j] = m.at(i, j).residue();
    return g;
}

// RREF canonical-form invariants: pivot entries are 1, pivot columns are
// standard basis vectors, pivots strictly ascend, zero rows trail.
void check_rref_shape(const Matrix& m, const RrefResult& r) {
    CHECK(r.rank == static_cast<int>(r.pivot_columns.size()));
    for (std::size_t t = 1; t < r.pivot_columns.size(); ++t)
        CHECK(r.pivot_columns[t - 1] < r.pivot_columns[t]);
    Scalar one = Scalar::one(m.field());
    for (int t = 0; t < r.rank; ++t) {
        int c = r.pivot_columns[t];
        for (int i = 0; i < r.reduced.rows(); ++i) {
            if (i == t)
                CHECK(r.reduced.at(i, c) == one);
            else
                CHECK(r.reduced.at(i, c).is_zero());
        }
        // nothing to the left of a pivot in its row
        for (int j = 0; j < c; ++j) CHECK(r.reduced.at(t, j).is_zero());
    }
    for (int i = r.rank; i < r.reduced.rows(); ++i)
        for (int j = 0; j < r.reduced.cols(); ++j) CHECK(r.reduced.at(i, j).is_zero());
    CHECK(r.transform * m == r.reduced);
    CHECK(syzygy::rank(r.transform) == m.rows());  // transform invertible
}

}  // namespace

TEST_CASE("basic arithmetic: identities and shapes") {
    Matrix i2 = Matrix::identity(Q, 2);
    CHECK(i2 + Matrix::zeros(Q, 2, 2) == i2);
    Matrix a = Matrix::of(Q, {{"1/2", "0"}, {"0", "2"}});
    Matrix b = Matrix::of(Q, {{"2", "0"}, {"0", "1/2"}});
    CHECK(a * b == i2);
    CHECK((a - a).is_zero());
    CHECK(-a + a == Matrix::zeros(Q, 2, 2));
    CHECK(a.scaled(Scalar::of_int(Q, 2)) == Matrix::of(Q, {{"1", "0"}, {"0", "4"}}));
    CHECK_THROWS_AS(a + Matrix::zeros(Q, 3, 3), DimensionMismatch);
    CHECK_THROWS_AS(a * Matrix::zeros(Q, 3, 3), DimensionMismatch);
    CHECK_THROWS_AS(a + Matrix::zeros(F5, 2, 2), FieldMismatch);
    CHECK(Matrix::of(Q, {{"1", "2"}, {"3", "4"}}).transpose() ==
          Matrix::of(Q, {{"1", "3"}, {"2", "4"}}));
}

TEST_CASE("inverse over F5 matches exhaustive search") {
    // 2^{-1} mod 5: brute-force says 3 (2*3 = 6 = 1)
    uint32_t found = 0;
    for (uint32_t r = 1; r < 5; ++r)
        if (2 * r % 5 == 1) found = r;
    CHECK(found == 3);
    Matrix m = Matrix::of(F5, {{"2"}});
    CHECK(m.inverse() == Matrix::of(F5, {{"3"}}));

    Matrix a = Matrix::of(F5, {{"1", "2"}, {"3", "4"}});
    Matrix inv = a.inverse();
    CHECK(a * inv == Matrix::identity(F5, 2));
    CHECK(inv * a == Matrix::identity(F5, 2));

    CHECK_THROWS_AS(Matrix::of(F5, {{"1", "2"}, {"2", "4"}}).inverse(), SingularMatrix);
    CHECK_THROWS_AS(Matrix::zeros(F5, 2, 3).inverse(), SingularMatrix);
}

TEST_CASE("rref: pinned examples") {
    SUBCASE("zero matrix") {
        Matrix z = Matrix::zeros(Q, 2, 3);
        RrefResult r = rref(z);
        CHECK(r.rank == 0);
        CHECK(r.pivot_columns.empty());
        CHECK(r.reduced == z);
        check_rref_shape(z, r);
    }
    SUBCASE("single row over Q") {
        Matrix m = Matrix::of(Q, {{"2", "4"}});
        RrefResult r = rref(m);
        CHECK(r.reduced == Matrix::of(Q, {{"1", "2"}}));
        CHECK(r.rank == 1);
        CHECK(r.pivot_columns == std::vector<int>{0});
        CHECK(r.transform == Matrix::of(Q, {{"1/2"}}));
    }
    SUBCASE("fractions normalize exactly") {
        Matrix m = Matrix::of(Q, {{"1/2", "1/3"}, {"1/4", "1/6"}, {"0", "1"}});
        RrefResult r = rref(m);
        // row2 = row1/2, so rank 2 with pivots {0, 1}
        CHECK(r.rank == 2);
        CHECK(r.pivot_columns == std::vector<int>{0, 1});
        check_rref_shape(m, r);
    }
    SUBCASE("worked 3x4 over Q against hand elimination") {
        // [1 2 3 4; 2 4 6 8; 1 1 1 1]: row2 = 2*row1; eliminating gives
        // pivots in columns 0,1 and rref [[1 0 -1 -2],[0 1 2 3],[0 0 0 0]]
        Matrix m = Matrix::of(Q, {{"1", "2", "3", "4"}, {"2", "4", "6", "8"}, {"1", "1", "1", "1"}});
        RrefResult r = rref(m);
        CHECK(r.rank == 2);
        CHECK(r.reduced ==
              Matrix::of(Q, {{"1", "0", "-1", "-2"}, {"0", "1", "2", "3"}, {"0", "0", "0", "0"}}));
        check_rref_shape(m, r);
    }
}

TEST_CASE("rref: randomized invariants over Q and F7") {
    std::mt19937_64 rng(20260818u);
    for (const FieldSpec& f : {Q, F7}) {
        for (int trial = 0; trial < 30; ++trial) {
            int rows = static_cast<int>(rng() % 6);
            int cols = static_cast<int>(rng() % 6);
            Matrix m = random_matrix(rng, f, rows, cols);
            RrefResult r = rref(m);
            check_rref_shape(m, r);
            Matrix k = kernel_basis(m);
            CHECK(r.rank + k.cols() == cols);  // rank-nullity
            if (k.cols() > 0) CHECK((m * k).is_zero());
            CHECK(syzygy::rank(k) == k.cols());  // kernel basis is independent
            Matrix im = image_basis(m);
            CHECK(im.cols() == r.rank);
            CHECK(syzygy::rank(im) == r.rank);
        }
    }
}

TEST_CASE("rank agrees with a naive textbook elimination over F_p") {
    std::mt19937_64 rng(5150u);
    for (uint32_t p : {7u, 65521u}) {
        FieldSpec f = FieldSpec::prime_field(p);
        for (int trial = 0; trial < 25; ++trial) {
            int rows = 1 + static_cast<int>(rng() % 6);
            int cols = 1 + static_cast<int>(rng() % 6);
            Matrix m = random_matrix(rng, f, rows, cols);
            CHECK(rank(m) == naive_fp_rank(to_grid(m), p));
        }
    }
}

TEST_CASE("rank agrees with minor expansion over F7") {
    std::mt19937_64 rng(31337u);
    for (int trial = 0; trial < 15; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 4);
        int cols = 1 + static_cast<int>(rng() % 4);
        Matrix m = random_matrix(rng, F7, rows, cols);
        CHECK(rank(m) == minor_expansion_rank(to_grid(m), 7));
    }
    // plus low-rank matrices built as outer products, which random draws rarely hit
    for (int trial = 0; trial < 10; ++trial) {
        Matrix u = random_matrix(rng, F7, 4, 1);
        Matrix v = random_matrix(rng, F7, 1, 4);
        Matrix m = u * v;
        CHECK(rank(m) == minor_expansion_rank(to_grid(m), 7));
    }
}

TEST_CASE("kernel and solve: pinned examples") {
    Matrix m = Matrix::of(Q, {{"1", "2"}});
    Matrix k = kernel_basis(m);
    CHECK(k == Matrix::of(Q, {{"-2"}, {"1"}}));

    CHECK(kernel_basis(Matrix::identity(Q, 3)).cols() == 0);
    CHECK(kernel_basis(Matrix::zeros(Q, 2, 3)) == Matrix::identity(Q, 3));

    Matrix a = Matrix::of(Q, {{"1", "0"}, {"0", "0"}});
    CHECK_FALSE(solve(a, Matrix::of(Q, {{"5"}, {"7"}})).has_value());
    auto x = solve(a, Matrix::of(Q, {{"5"}, {"0"}}));
    REQUIRE(x.has_value());
    CHECK(a * *x == Matrix::of(Q, {{"5"}, {"0"}}));

    // multi-column right-hand side
    Matrix b = Matrix::of(Q, {{"1", "2"}, {"0", "0"}});
    auto xs = solve(a, b);
    REQUIRE(xs.has_value());
    CHECK(a * *xs == b);

    CHECK_THROWS_AS(solve(a, Matrix::zeros(Q, 3, 1)), DimensionMismatch);
    CHECK_THROWS_AS(solve(a, Matrix::zeros(F5, 2, 1)), FieldMismatch);
}

TEST_CASE("solve: randomized consistency in both directions") {
    std::mt19937_64 rng(424242u);
    for (const FieldSpec& f : {Q, F7}) {
        for (int trial = 0; trial < 20; ++trial) {
            int rows = 1 + static_cast<int>(rng() % 5);
            int cols = 1 + static_cast<int>(rng() % 5);
            Matrix a = random_matrix(rng, f, rows, cols);
            // b built from a known solution is always solvable
            Matrix x0 = random_matrix(rng, f, cols, 2);
            Matrix b = a * x0;
            auto x = solve(a, b);
            REQUIRE(x.has_value());
            CHECK(a * *x == b);
        }
    }
}

TEST_CASE("inverse over Q: Hilbert-style stress") {
    // H(i,j) = 1/(i+j+1), notoriously ill-conditioned in floating point;
    // exact arithmetic must invert it on the nose.
    int n = 5;
    Matrix h(Q, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h.set(i, j, Scalar::of_rational(Rational(1) / Rational(i + j + 1)));
    CHECK(rank(h) == n);
    Matrix inv = h.inverse();
    CHECK(h * inv == Matrix::identity(Q, n));
    CHECK(inv * h == Matrix::identity(Q, n));
}

TEST_CASE("block constructions") {
    Matrix a = Matrix::of(Q, {{"1", "2"}});
    Matrix b = Matrix::of(Q, {{"3"}, {"4"}});
    Matrix ds = direct_sum(a, b);
    CHECK(ds == Matrix::of(Q, {{"1", "2", "0"}, {"0", "0", "3"}, {"0", "0", "4"}}));
    CHECK(hstack(a, Matrix::of(Q, {{"9", "9"}})) == Matrix::of(Q, {{"1", "2", "9", "9"}}));
    CHECK(vstack(a, Matrix::of(Q, {{"7", "8"}})) == Matrix::of(Q, {{"1", "2"}, {"7", "8"}}));
    CHECK_THROWS_AS(hstack(a, b), DimensionMismatch);

    Matrix k1 = Matrix::of(Q, {{"1", "2"}, {"3", "4"}});
    Matrix k2 = Matrix::of(Q, {{"0", "1"}, {"1", "0"}});
    Matrix kr = kronecker(k1, k2);
    CHECK(kr == Matrix::of(Q, {{"0", "1", "0", "2"},
                               {"1", "0", "2", "0"},
                               {"0", "3", "0", "4"},
                               {"3", "0", "4", "0"}}));
    // mixed-product property on random input
    std::mt19937_64 rng(8u);
    Matrix p = random_matrix(rng, F7, 2, 3), q = random_matrix(rng, F7, 3, 2);
    Matrix r = random_matrix(rng, F7, 2, 2), s = random_matrix(rng, F7, 2, 3);
    CHECK(kronecker(p * q, r * s) == kronecker(p, r) * kronecker(q, s));
}

TEST_CASE("zero-dimensional matrices are first-class") {
    Matrix e03 = Matrix::zeros(Q, 0, 3);
    Matrix e30 = Matrix::zeros(Q, 3, 0);
    CHECK((e03 * Matrix::zeros(Q, 3, 2)).rows() == 0);
    CHECK((Matrix::zeros(Q, 2, 0) * Matrix::zeros(Q, 0, 3)) == Matrix::zeros(Q, 2, 3));
    CHECK(rank(e03) == 0);
    CHECK(rank(e30) == 0);
    CHECK(kernel_basis(e03) == Matrix::identity(Q, 3));
    CHECK(kernel_basis(e30).cols() == 0);
    CHECK(image_basis(e30).cols() == 0);
    RrefResult r = rref(e30);
    CHECK(r.transform == Matrix::identity(Q, 3));
    auto x = solve(e03, Matrix::zeros(Q, 0, 2));
    REQUIRE(x.has_value());
    CHECK(x->rows() == 3);
    CHECK(x->cols() == 2);
    CHECK(Matrix::identity(Q, 0).inverse() == Matrix::identity(Q, 0));
    CHECK(direct_sum(e03, e30) == Matrix::zeros(Q, 3, 3));
}

TEST_CASE("transform invertibility for rank-deficient input") {
    Matrix m = Matrix::of(Q, {{"1", "2"}, {"2", "4"}, {"3", "6"}});
    RrefResult r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.transform * m == r.reduced);
    Matrix tinv = r.transform.inverse();  // must not throw
    CHECK(tinv * r.reduced == m);
    CHECK(image_basis(m) == Matrix::of(Q, {{"1"}, {"2"}, {"3"}}));
}

TEST_CASE("selection and paste") {
    Matrix m = Matrix::of(Q, {{"1", "2", "3"}, {"4", "5", "6"}});
    CHECK(m.select_columns({2, 0}) == Matrix::of(Q, {{"3", "1"}, {"6", "4"}}));
    CHECK(m.select_rows({1}) == Matrix::of(Q, {{"4", "5", "6"}}));
    CHECK_THROWS_AS(m.select_columns({3}), InvalidParameter);
    Matrix z = Matrix::zeros(Q, 3, 3);
    z.paste(1, 1, Matrix::identity(Q, 2));
    CHECK(z.at(1, 1).is_one());
    CHECK(z.at(2, 2).is_one());
    CHECK(z.at(0, 0).is_zero());
    CHECK_THROWS_AS(z.paste(2, 2, Matrix::identity(Q, 2)), InvalidParameter);
}
