#include "k3calc/intmat.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace k3calc;
using namespace k3calc::testutil;

namespace {

IntMat random_matrix(Rng& rng, int rows, int cols, int bound = 20) {
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rand_int(rng, -bound, bound);
    return m;
}

}  // namespace

TEST_CASE("bareiss determinant matches cofactor expansion on random matrices") {
    Rng rng(12001);
    for (int trial = 0; trial < 200; ++trial) {
        int n = std::uniform_int_distribution<int>(0, 5)(rng);
        IntMat m = random_matrix(rng, n, n);
        CHECK(bareiss_determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("determinant basics") {
    CHECK(bareiss_determinant(IntMat::identity(4)) == 1);
    CHECK(bareiss_determinant(IntMat::from_rows({{4, 3}, {3, 0}})) == -9);
    CHECK(bareiss_determinant(IntMat::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(bareiss_determinant(IntMat::from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK_THROWS_AS(bareiss_determinant(IntMat(2, 3)), Error);
}

TEST_CASE("smith normal form: reconstruction, unimodularity, divisibility chain") {
    Rng rng(12002);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = std::uniform_int_distribution<int>(1, 4)(rng);
        int cols = std::uniform_int_distribution<int>(1, 4)(rng);
        IntMat m = random_matrix(rng, rows, cols, 12);
        SmithResult snf = smith_normal_form(m);

        CHECK(snf.u * m * snf.v == snf.s);
        CHECK(abs(cofactor_det(snf.u)) == 1);
        CHECK(abs(cofactor_det(snf.v)) == 1);

        // diagonal, nonnegative, each factor divides the next
        for (int i = 0; i < snf.s.rows(); ++i)
            for (int j = 0; j < snf.s.cols(); ++j)
                if (i != j) CHECK(snf.s.at(i, j) == 0);
        std::vector<Int> f = snf.invariant_factors();
        for (const Int& d : f) CHECK(d > 0);
        for (size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
    }
}

TEST_CASE("smith normal form: known values") {
    // diag(4, 6) -> (2, 12): gcd/lcm of the pair
    SmithResult snf = smith_normal_form(IntMat::from_rows({{4, 0}, {0, 6}}));
    CHECK(snf.invariant_factors() == std::vector<Int>{2, 12});

    // the 3x2 relation matrix that previously looped forever in clearing
    IntMat m = IntMat::from_rows({{1, 1}, {-1, 0}, {1, -1}});
    SmithResult snf2 = smith_normal_form(m);
    CHECK(snf2.u * m * snf2.v == snf2.s);
    CHECK(snf2.invariant_factors() == std::vector<Int>{1, 1});

    CHECK(smith_normal_form(IntMat::from_rows({{2, 4}, {4, 8}})).invariant_factors() ==
          std::vector<Int>{2});
}

TEST_CASE("unimodular inverse") {
    Rng rng(12003);
    int built = 0;
    while (built < 50) {
        // random products of elementary matrices are unimodular
        IntMat m = IntMat::identity(3);
        for (int k = 0; k < 6; ++k) {
            IntMat e = IntMat::identity(3);
            int i = std::uniform_int_distribution<int>(0, 2)(rng);
            int j = std::uniform_int_distribution<int>(0, 2)(rng);
            if (i == j) continue;
            e.at(i, j) = rand_int(rng, -3, 3);
            m = m * e;
        }
        IntMat inv = unimodular_inverse(m);
        CHECK(m * inv == IntMat::identity(3));
        CHECK(inv * m == IntMat::identity(3));
        ++built;
    }
    CHECK_THROWS_AS(unimodular_inverse(IntMat::from_rows({{2, 0}, {0, 1}})), Error);
}

TEST_CASE("integer kernel basis") {
    Rng rng(12004);
    for (int trial = 0; trial < 100; ++trial) {
        int rows = std::uniform_int_distribution<int>(1, 4)(rng);
        int cols = std::uniform_int_distribution<int>(1, 4)(rng);
        IntMat m = random_matrix(rng, rows, cols, 8);
        std::vector<std::vector<Int>> kernel = integer_kernel_basis(m);

        for (const auto& v : kernel) {
            bool nonzero = false;
            for (int i = 0; i < rows; ++i) {
                Int dot = 0;
                for (int j = 0; j < cols; ++j) dot += m.at(i, j) * v[j];
                CHECK(dot == 0);
            }
            for (const Int& x : v) nonzero |= (x != 0);
            CHECK(nonzero);
        }
        // rank-nullity over Q
        SmithResult snf = smith_normal_form(m);
        CHECK(static_cast<int>(kernel.size()) ==
              cols - static_cast<int>(snf.invariant_factors().size()));
    }
}

TEST_CASE("characteristic polynomial matches det(xI - M) at sample points") {
    Rng rng(12005);
    for (int trial = 0; trial < 60; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 4)(rng);
        IntMat m = random_matrix(rng, n, n, 6);
        std::vector<Int> coeffs = characteristic_polynomial(m);
        REQUIRE(static_cast<int>(coeffs.size()) == n + 1);
        for (int x : {-3, -1, 0, 1, 2, 5}) {
            IntMat shifted(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    shifted.at(i, j) = (i == j ? Int(x) - m.at(i, j) : -m.at(i, j));
            Int direct = cofactor_det(shifted);
            Int horner = 0;
            for (const Int& c : coeffs) horner = horner * x + c;
            CHECK(horner == direct);
        }
    }
}

TEST_CASE("matrix arithmetic and formatting") {
    IntMat a = IntMat::from_rows({{1, 2}, {3, 4}});
    IntMat b = IntMat::from_rows({{0, 1}, {1, 0}});
    CHECK((a * b) == IntMat::from_rows({{2, 1}, {4, 3}}));
    CHECK(a.transposed() == IntMat::from_rows({{1, 3}, {2, 4}}));
    CHECK(a.str() == "[[1, 2], [3, 4]]");
    CHECK(IntMat::from_rows({{1, 2}, {2, 4}}).is_symmetric());
    CHECK_FALSE(a.is_symmetric());
    std::vector<Int> v = {1, 1};
    CHECK(a * v == std::vector<Int>{3, 7});
}
