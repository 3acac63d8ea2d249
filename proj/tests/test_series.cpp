#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ddt/qseries.hpp"
#include "test_util.hpp"

#include <vector>

using namespace ddt;

namespace {

const Scalar q = Scalar::q();
const Scalar x = Scalar::x();

Series t_power(int nvars, int var, int deg, int trunc) {
    DimVector d(static_cast<std::size_t>(nvars), 0);
    d[static_cast<std::size_t>(var)] = deg;
    return Series::monomial(Scalar(1), d, trunc);
}

// Independent oracle for Exp on integer-polynomial coefficients:
// Exp(sum c_{d,k} x^k t^d) = prod (1 - x^k t^d)^{-c_{d,k}}.
Series exp_product_form(const Series& a) {
    Series out = Series::one(a.nvars(), a.truncation());
    for (auto& [d, c] : a.terms()) {
        REQUIRE(c.is_polynomial());
        for (auto& [k, v] : c.num().terms()) {
            REQUIRE(is_integer(v));
            long m = v.get_num().get_si();
            // (1 - x^k t^d)^{-m}: binomial series in u = x^k t^d
            Series factor(a.nvars(), a.truncation());
            int step = total(d);
            for (long j = 0; step * j <= a.truncation(); ++j) {
                Rat binco;
                if (m >= 0)
                    binco = Rat(binomial(static_cast<unsigned long>(m + j - 1), static_cast<unsigned long>(j)));
                else {
                    if (j > -m) break;
                    binco = Rat(binomial(static_cast<unsigned long>(-m), static_cast<unsigned long>(j)));
                    if (j % 2) binco = -binco;
                }
                factor.add_to_coeff(static_cast<int>(j) * d, Scalar::monomial(binco, k * j));
            }
            out = out * factor;
        }
    }
    return out;
}

// Brute-force count of plane partitions of n: nonincreasing nonnegative
// integer matrices with entry sum n.
long plane_partitions(int n) {
    if (n == 0) return 1;
    long count = 0;
    std::vector<std::vector<int>> box(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    auto rec = [&](auto&& self, int i, int j, int remaining) -> void {
        if (remaining == 0) {
            ++count;
            return;
        }
        if (i == n) return;
        if (j == n) {
            self(self, i + 1, 0, remaining);
            return;
        }
        int cap = remaining;
        if (i > 0) cap = std::min(cap, box[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)]);
        if (j > 0) cap = std::min(cap, box[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) - 1]);
        for (int v = cap; v >= 0; --v) {
            box[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            if (v == 0)
                self(self, i + 1, 0, remaining);
            else
                self(self, i, j + 1, remaining - v);
        }
        box[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
    };
    rec(rec, 0, 0, n);
    return count;
}

} // namespace

TEST_CASE("series ring basics") {
    int N = 4;
    Series one = Series::one(1, N);
    Series t = t_power(1, 0, 1, N);
    CHECK((one + t) * (one - t) == one - t * t);
    std::mt19937 rng(7);
    Series a = testutil::random_series(rng, 1, N);
    CHECK(a * one == a);
    Series inv1mt = (one - t).inv();
    CHECK(inv1mt * (one - t) == one);
    Series geom(1, N);
    for (int n = 0; n <= N; ++n) geom.add_to_coeff({n}, Scalar(1));
    CHECK(inv1mt == geom);
    CHECK(Series::one(1, N).inv() == Series::one(1, N));
    CHECK_THROWS_AS(t.inv(), std::domain_error);
    CHECK_THROWS_AS(Series::one(1, 3) * Series::one(2, 3), std::invalid_argument);
}

TEST_CASE("mul commutative and associative") {
    std::mt19937 rng(20);
    for (int iter = 0; iter < 10; ++iter) {
        Series a = testutil::random_series(rng, 2, 4);
        Series b = testutil::random_series(rng, 2, 4);
        Series c = testutil::random_series(rng, 2, 4);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("pochhammer and gl motive") {
    CHECK(qfact(0) == Scalar(1));
    CHECK(qfact(2) == (Scalar(1) - q) * (Scalar(1) - q * q));
    Scalar qi = Scalar::x_power(-2);
    CHECK(pochhammer(qi, qi, 1) == Scalar(1) - qi);
    CHECK(qinv_fact(1) == Scalar(1) - qi);
    CHECK(gl_motive(0) == Scalar(1));
    CHECK(gl_motive(1) == q - Scalar(1));
    CHECK(gl_motive(2) == (q * q - Scalar(1)) * (q * q - q));
    CHECK_THROWS_AS(pochhammer(q, -1), std::invalid_argument);
    CHECK_THROWS_AS(gl_motive(-1), std::invalid_argument);
}

TEST_CASE("gl motive counts GL_n(F_p) points") {
    // independent oracle: enumerate invertible 2x2 matrices over F_2
    int invertible = 0;
    for (int m = 0; m < 16; ++m) {
        int a = m & 1, b = (m >> 1) & 1, c = (m >> 2) & 1, d = (m >> 3) & 1;
        if ((a * d - b * c) % 2 != 0) ++invertible;
    }
    CHECK(invertible == 6);
    Int value = 0;
    for (auto& [e, coeff] : gl_motive(2).clear_to_q_polynomial(0)) value += coeff * pow_int(Int(2), static_cast<unsigned long>(e));
    CHECK(value == 6);
}

TEST_CASE("pleth_exp of t/(q-1) is the infinite Pochhammer") {
    int N = 6;
    Series arg(1, N);
    arg.set_coeff({1}, (q - Scalar(1)).inverse());
    Series e = pleth_exp(arg);
    // t^n coefficient (-1)^n q^{n(n-1)/2} / (q)_n, the Euler expansion
    for (int n = 0; n <= N; ++n) {
        Scalar expect = Scalar::monomial(n % 2 ? Rat(-1) : Rat(1), static_cast<long>(n) * (n - 1)) / qfact(n);
        CHECK(e.coeff({n}) == expect);
    }
    CHECK(e.coeff({2}) == q / ((Scalar(1) - q) * (Scalar(1) - q * q)));
}

TEST_CASE("one-loop identity: Exp(qt/(q-1)) = sum t^m/(q^{-1})_m") {
    int N = 6;
    Series arg(1, N);
    arg.set_coeff({1}, q / (q - Scalar(1)));
    Series e = pleth_exp(arg);
    for (int m = 0; m <= N; ++m) CHECK(e.coeff({m}) == qinv_fact(m).inverse());
}

TEST_CASE("zero-loop identity: Exp(-xt/(q-1)) = sum (-x)^{-m^2} t^m/(q^{-1})_m") {
    int N = 6;
    Series arg(1, N);
    arg.set_coeff({1}, -x / (q - Scalar(1)));
    Series e = pleth_exp(arg);
    for (int m = 0; m <= N; ++m) {
        Scalar expect = Scalar::monomial(m % 2 ? Rat(-1) : Rat(1), -static_cast<long>(m) * m) / qinv_fact(m);
        CHECK(e.coeff({m}) == expect);
    }
}

TEST_CASE("q-binomial identities to order 8") {
    int N = 8;
    Series arg(1, N);
    arg.set_coeff({1}, (q - Scalar(1)).inverse());
    Series poch_inf = pleth_exp(arg);   // (t;q)_infty

    Series sum1(1, N), sum2(1, N);
    for (int n = 0; n <= N; ++n) {
        sum1.add_to_coeff({n}, qfact(n).inverse());
        sum2.add_to_coeff({n}, Scalar::monomial(n % 2 ? Rat(-1) : Rat(1), static_cast<long>(n) * (n - 1)) / qfact(n));
    }
    CHECK(sum1 == poch_inf.inv());
    CHECK(sum2 == poch_inf);
}

TEST_CASE("finite Pochhammer via Exp: sum (a;q)_n/(q)_n t^n = Exp((1-a)t/(1-q))") {
    int N = 6;
    Scalar a = q * q * q;
    Series lhs(1, N);
    for (int n = 0; n <= N; ++n) lhs.add_to_coeff({n}, pochhammer(a, n) / qfact(n));
    Series arg(1, N);
    arg.set_coeff({1}, (Scalar(1) - a) / (Scalar(1) - q));
    CHECK(lhs == pleth_exp(arg));
}

TEST_CASE("pleth_log inverts pleth_exp") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 5; ++iter) {
        Series a = testutil::random_positive_order_series(rng, 2, 6, 4);
        CHECK(pleth_log(pleth_exp(a)) == a);
    }
    CHECK_THROWS_AS(pleth_exp(Series::one(1, 3)), std::domain_error);
    CHECK_THROWS_AS(pleth_log(Series::zero(1, 3)), std::domain_error);
}

TEST_CASE("pleth_exp is a homomorphism") {
    std::mt19937 rng(1024);
    for (int iter = 0; iter < 4; ++iter) {
        Series a = testutil::random_positive_order_series(rng, 2, 6, 4);
        Series b = testutil::random_positive_order_series(rng, 2, 6, 4);
        CHECK(pleth_exp(a + b) == pleth_exp(a) * pleth_exp(b));
    }
}

TEST_CASE("pleth_exp matches the product form on integer coefficients") {
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> cdist(-3, 3), kdist(-2, 2), edist(0, 2);
    for (int iter = 0; iter < 8; ++iter) {
        Series a(2, 5);
        for (int t = 0; t < 3; ++t) {
            DimVector d{edist(rng), edist(rng)};
            if (is_zero(d)) continue;
            a.add_to_coeff(d, Scalar::monomial(Rat(cdist(rng)), kdist(rng)));
        }
        CHECK(pleth_exp(a) == exp_product_form(a));
    }
}

TEST_CASE("adams on series composes") {
    std::mt19937 rng(8);
    Series a = testutil::random_series(rng, 2, 8);
    CHECK(a.adams(2).adams(3) == a.adams(6));
}

TEST_CASE("MacMahon function counts plane partitions") {
    std::vector<long> expect;
    for (int n = 0; n <= 4; ++n) expect.push_back(plane_partitions(n));
    CHECK(expect == std::vector<long>{1, 1, 3, 6, 13});

    // M(1, t^delta) with delta = (1,1,1,1), read at n*delta
    DimVector zero(4, 0), delta(4, 1);
    Series m = macmahon_m(zero, delta, 16);
    for (int n = 0; n <= 4; ++n) CHECK(m.coeff(n * delta) == Scalar(expect[static_cast<std::size_t>(n)]));
}

TEST_CASE("MacMahon M~ exponent arithmetic") {
    DimVector delta(4, 1);
    DimVector u{0, 1, 1, 1};
    // u^{-1} v at n=1 is the bare monomial t_0; below degree 5 nothing else
    // contributes, so M~(t1t2t3, t^delta) = (1 - t_0)^{-1} there.
    Series mt = macmahon_m_tilde(u, delta, 4);
    CHECK(mt == binomial_factor(DimVector{1, 0, 0, 0}, -1, 4));

    // truncation below v: empty product
    CHECK(macmahon_m(DimVector(4, 0), delta, 3) == Series::one(4, 3));

    // a factor with a negative entry inside the truncation is an error
    CHECK_THROWS_AS(macmahon_m(DimVector{-2, 0, 0, 0}, delta, 6), std::domain_error);
}
