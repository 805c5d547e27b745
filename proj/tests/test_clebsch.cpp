#include <doctest.h>

#include <utility>
#include <vector>

#include "qsl2/clebsch.hpp"
#include "qsl2/errors.hpp"
#include "qsl2/rep.hpp"
#include "testutil.hpp"

using namespace qsl2;
using namespace qsl2::testing;

using AE = AlgebraElement;

static const HalfInt half = HalfInt::from_twice(1);
static RadicalScalar tpow(long n) { return RadicalScalar::t_power(n); }
// 1 / sqrt([n])
static RadicalScalar inv_sqrt_qint(long n) {
    return RadicalScalar::sqrt_of(RatFunc(qint(n))).inverse();
}

TEST_CASE("highest-weight coupling vectors for two spin 1/2 factors") {
    // Product basis order: (1/2,1/2), (1/2,-1/2), (-1/2,1/2), (-1/2,-1/2).
    auto top = cg_highest(half, half, HalfInt(1));
    REQUIRE(top.size() == 4);
    CHECK(top[0] == RadicalScalar(1));
    CHECK(top[1].is_zero());
    CHECK(top[2].is_zero());
    CHECK(top[3].is_zero());

    auto singlet = cg_highest(half, half, HalfInt(0));
    REQUIRE(singlet.size() == 4);
    CHECK(singlet[0].is_zero());
    CHECK(singlet[1] == tpow(-1) * inv_sqrt_qint(2));
    CHECK(singlet[2] == -(tpow(1) * inv_sqrt_qint(2)));
    CHECK(singlet[3].is_zero());
}

TEST_CASE("highest-weight vectors are killed by the raising action") {
    std::vector<std::pair<HalfInt, HalfInt>> pairs = {
        {half, half}, {HalfInt(1), half}, {HalfInt(1), HalfInt(1)},
        {HalfInt::from_twice(3), HalfInt(1)}};
    for (auto [k, l] : pairs) {
        ScalarMatrix E = tensor_rep_of_element(k, l, AE::e());
        CGTable table = cg_table(k, l);
        for (HalfInt j : table.target_spins()) {
            auto image = apply_mat(E, cg_highest(k, l, j));
            for (const auto& c : image) CHECK(c.is_zero());

            // Unit norm.
            RadicalScalar norm2;
            for (const auto& c : cg_highest(k, l, j)) norm2 += c * c;
            CHECK(norm2 == RadicalScalar(1));
        }
    }
}

TEST_CASE("target spins outside the decomposition are rejected") {
    CHECK_THROWS_AS(cg_highest(half, half, HalfInt(2)), RangeError);
    CHECK_THROWS_AS(cg_highest(half, half, half), RangeError);  // parity mismatch
    CHECK_THROWS_AS(cg_highest(HalfInt(1), half, HalfInt(0)), RangeError);
    CHECK_THROWS_AS(cg_table(half, half).column(HalfInt(2), HalfInt(0)), RangeError);
    CHECK_THROWS_AS(cg_table(half, half).column(HalfInt(1), HalfInt(2)), RangeError);

    auto spins = cg_table(HalfInt(1), half).target_spins();
    REQUIRE(spins.size() == 2);
    CHECK(spins[0] == half);
    CHECK(spins[1] == HalfInt::from_twice(3));
}

TEST_CASE("full table for two spin 1/2 factors") {
    CGTable table = cg_table(half, half);
    RadicalScalar is2 = inv_sqrt_qint(2);

    auto m1 = table.column(HalfInt(1), HalfInt(1));
    CHECK(m1[0] == RadicalScalar(1));

    auto m0 = table.column(HalfInt(1), HalfInt(0));
    CHECK(m0[0].is_zero());
    CHECK(m0[1] == tpow(1) * is2);
    CHECK(m0[2] == tpow(-1) * is2);
    CHECK(m0[3].is_zero());

    auto mm1 = table.column(HalfInt(1), HalfInt(-1));
    CHECK(mm1[3] == RadicalScalar(1));

    auto s = table.column(HalfInt(0), HalfInt(0));
    CHECK(s[1] == tpow(-1) * is2);
    CHECK(s[2] == -(tpow(1) * is2));

    // Element access applies the weight selection rule.
    CHECK(table.get(HalfInt(1), half, -half, HalfInt(0)) == tpow(1) * is2);
    CHECK(table.get(HalfInt(1), half, half, HalfInt(0)).is_zero());
    CHECK(table.get(HalfInt(1), HalfInt::from_twice(3), -half, HalfInt(1)).is_zero());

    // Lowering past the bottom weight annihilates each block.
    ScalarMatrix F = tensor_rep_of_element(half, half, AE::f());
    for (HalfInt j : table.target_spins()) {
        auto bottom = apply_mat(F, table.column(j, -j));
        for (const auto& c : bottom) CHECK(c.is_zero());
    }
}

TEST_CASE("coupling against a trivial factor is the identity") {
    CGTable table = cg_table(HalfInt(0), HalfInt(1));
    auto spins = table.target_spins();
    REQUIRE(spins.size() == 1);
    CHECK(spins[0] == HalfInt(1));
    for (int tw = -2; tw <= 2; tw += 2) {
        HalfInt m = HalfInt::from_twice(tw);
        auto col = table.column(HalfInt(1), m);
        for (size_t i = 0; i < col.size(); ++i) {
            if (int(i) == weight_index(HalfInt(1), m))
                CHECK(col[i] == RadicalScalar(1));
            else
                CHECK(col[i].is_zero());
        }
    }
}

TEST_CASE("columns are orthonormal and complete") {
    std::vector<std::pair<HalfInt, HalfInt>> pairs = {
        {half, half},
        {HalfInt(1), half},
        {HalfInt(1), HalfInt(1)},
        {HalfInt::from_twice(3), HalfInt(1)},
        {HalfInt::from_twice(3), HalfInt::from_twice(3)}};
    for (auto [k, l] : pairs) {
        CGTable table = cg_table(k, l);
        std::vector<std::vector<RadicalScalar>> cols;
        for (HalfInt j : table.target_spins())
            for (int tw = j.twice(); tw >= -j.twice(); tw -= 2)
                cols.push_back(table.column(j, HalfInt::from_twice(tw)));

        size_t dim = size_t(dim_of_spin(k)) * dim_of_spin(l);
        REQUIRE(cols.size() == dim);

        for (size_t a = 0; a < cols.size(); ++a)
            for (size_t b = a; b < cols.size(); ++b) {
                RadicalScalar dot;
                for (size_t i = 0; i < dim; ++i) dot += cols[a][i] * cols[b][i];
                CHECK(dot == (a == b ? RadicalScalar(1) : RadicalScalar()));
            }

        for (size_t i = 0; i < dim; ++i)
            for (size_t i2 = i; i2 < dim; ++i2) {
                RadicalScalar dot;
                for (const auto& col : cols) dot += col[i] * col[i2];
                CHECK(dot == (i == i2 ? RadicalScalar(1) : RadicalScalar()));
            }
    }
}

TEST_CASE("the embedding built from a coupling block intertwines the action") {
    std::vector<std::pair<HalfInt, HalfInt>> pairs = {
        {half, half}, {HalfInt(1), half}, {HalfInt(1), HalfInt(1)}};
    std::vector<AE> gens = {AE::e(), AE::f(), AE::k(), AE::k(-1)};
    for (auto [k, l] : pairs) {
        CGTable table = cg_table(k, l);
        size_t dim = size_t(dim_of_spin(k)) * dim_of_spin(l);
        for (HalfInt j : table.target_spins()) {
            ScalarMatrix embed(dim, dim_of_spin(j));
            for (int idx = 0; idx < dim_of_spin(j); ++idx) {
                auto col = table.column(j, weight_of_index(j, idx));
                for (size_t r = 0; r < dim; ++r) embed.at(r, idx) = col[r];
            }
            for (const AE& a : gens)
                CHECK(tensor_rep_of_element(k, l, a) * embed ==
                      embed * rep_of_element(j, a));
        }
    }
}

TEST_CASE("scalar-coupler closed forms") {
    // The t^{+2m} variant at specific indices.
    CHECK(cg_special_00(half, half, -half) == tpow(1) * inv_sqrt_qint(2));
    CHECK(cg_special_00(half, -half, half) == -(tpow(-1) * inv_sqrt_qint(2)));
    CHECK(cg_special_00(HalfInt(1), HalfInt(1), HalfInt(-1)) == tpow(2) * inv_sqrt_qint(3));
    CHECK(cg_special_00(HalfInt(1), HalfInt(0), HalfInt(0)) == -inv_sqrt_qint(3));
    CHECK(cg_special_00(HalfInt(1), HalfInt(-1), HalfInt(1)) == tpow(-2) * inv_sqrt_qint(3));
    CHECK(cg_special_00(HalfInt(1), HalfInt(1), HalfInt(0)).is_zero());
    CHECK(cg_special_00(HalfInt(1), HalfInt(2), HalfInt(-2)).is_zero());

    // The t^{-2m} variant is the column the recursive table actually produces.
    for (int twj : {1, 2, 3}) {
        HalfInt j = HalfInt::from_twice(twj);
        CGTable table = cg_table(j, j);
        for (int tw = twj; tw >= -twj; tw -= 2) {
            HalfInt m = HalfInt::from_twice(tw);
            CHECK(table.get(HalfInt(0), m, -m, HalfInt(0)) == cg_invariant_00(j, m, -m));
        }
    }

    // The two variants are index reflections of each other up to (-1)^{2j};
    // for half-integer spins they differ by more than a global sign, so the
    // t^{+2m} variant does not reproduce the table column.
    for (int twj : {1, 2, 3, 4}) {
        HalfInt j = HalfInt::from_twice(twj);
        int sign = twj % 2 == 0 ? 1 : -1;
        for (int tw = twj; tw >= -twj; tw -= 2) {
            HalfInt m = HalfInt::from_twice(tw);
            RadicalScalar mirrored = cg_invariant_00(j, -m, m);
            if (sign < 0) mirrored = -mirrored;
            CHECK(cg_special_00(j, m, -m) == mirrored);
        }
    }
    CGTable t2 = cg_table(half, half);
    CHECK(t2.get(HalfInt(0), half, -half, HalfInt(0)) != cg_special_00(half, half, -half));

    // Both variants have unit norm against the t^{4m} weight:
    // sum_m t^{4m} c(m)^2 relates to orthonormality of the 00 column.
    for (int twj : {1, 2, 3, 4}) {
        HalfInt j = HalfInt::from_twice(twj);
        RadicalScalar norm2;
        for (int tw = twj; tw >= -twj; tw -= 2) {
            HalfInt m = HalfInt::from_twice(tw);
            RadicalScalar c = cg_invariant_00(j, m, -m);
            norm2 += c * c;
        }
        CHECK(norm2 == RadicalScalar(1));
    }
}

TEST_CASE("sum of t^{4m} over a weight ladder is a q-dimension") {
    for (int twj : {1, 2, 3, 4}) {
        LaurentPoly sum;
        for (int tw = twj; tw >= -twj; tw -= 2) sum += LaurentPoly::t_power(2 * tw);
        CHECK(sum == qint(twj + 1));
    }
}

TEST_CASE("top-weight coupler closed form matches the recursive table") {
    for (long l = 1; l <= 2; ++l) {
        for (int twj : {2, 3, 4}) {
            HalfInt j = HalfInt::from_twice(twj);
            if (twj < l) continue;
            CGTable table = cg_table(HalfInt(int(l)), j);
            for (int twm = twj; twm >= -twj; twm -= 2) {
                for (int twn = twj; twn >= -twj; twn -= 2) {
                    HalfInt m = HalfInt::from_twice(twm), n = HalfInt::from_twice(twn);
                    CHECK(cg_special_ll(l, j, m, n) ==
                          table.get(j, HalfInt(int(l)), n, m));
                }
            }
        }
    }
    // Out-of-domain indices give zero.
    CHECK(cg_special_ll(2, half, HalfInt::from_twice(1), HalfInt::from_twice(-1)).is_zero());
    CHECK(cg_special_ll(1, HalfInt(1), HalfInt(1), HalfInt(1)).is_zero());
    CHECK(cg_special_ll(1, HalfInt(1), HalfInt(2), HalfInt(1)).is_zero());
}

TEST_CASE("classical limit matches the factorial formula") {
    Rat t0 = rat(1000001, 1000000);
    std::vector<std::pair<HalfInt, HalfInt>> pairs = {
        {half, half}, {HalfInt(1), half}, {half, HalfInt(1)}, {HalfInt(1), HalfInt(1)}};
    for (auto [k, l] : pairs) {
        CGTable table = cg_table(k, l);
        for (HalfInt j : table.target_spins())
            for (int twm = j.twice(); twm >= -j.twice(); twm -= 2)
                for (int twp = k.twice(); twp >= -k.twice(); twp -= 2)
                    for (int twn = l.twice(); twn >= -l.twice(); twn -= 2) {
                        HalfInt m = HalfInt::from_twice(twm);
                        HalfInt p = HalfInt::from_twice(twp);
                        HalfInt n = HalfInt::from_twice(twn);
                        double q = table.get(j, p, n, m).eval(t0);
                        double c = classical_cg(k, p, l, n, j, m);
                        CHECK(std::abs(q - c) <= 1e-4);
                    }
    }
}

TEST_CASE("columns evaluate to unit vectors numerically") {
    CGTable table = cg_table(HalfInt(1), half);
    for (HalfInt j : table.target_spins())
        for (int tw = j.twice(); tw >= -j.twice(); tw -= 2) {
            double norm2 = 0;
            for (const auto& c : table.column(j, HalfInt::from_twice(tw))) {
                double v = c.eval(Rat(2));
                norm2 += v * v;
            }
            CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-12));
        }
}
