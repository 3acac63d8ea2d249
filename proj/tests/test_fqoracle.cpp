#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ddt/dtengine.hpp"
#include "ddt/fqoracle.hpp"

#include <random>

using namespace ddt;

namespace {

DimVector ev(std::initializer_list<int> v) { return DimVector(v); }

RepTuple simple_at(const RootSystemD& rs, int i, int p) {
    return zero_rep(rs.quiver(), unit_vector(static_cast<std::size_t>(rs.r()) + 1, static_cast<std::size_t>(i)), p);
}

RepTuple random_rep(const RootSystemD& rs, const DimVector& d, int p, std::mt19937& rng) {
    RepTuple m = zero_rep(rs.quiver(), d, p);
    std::uniform_int_distribution<uint32_t> dist(0, static_cast<uint32_t>(p) - 1);
    for (auto& mat : m.mats)
        for (auto& e : mat.a) e = dist(rng);
    return m;
}

RepTuple direct_sum(const RepTuple& a, const RepTuple& b) {
    RepTuple out = zero_rep(*a.quiver, a.d + b.d, a.p);
    for (std::size_t k = 0; k < out.mats.size(); ++k) {
        const FpMatrix &ma = a.mats[k], &mb = b.mats[k];
        FpMatrix& mo = out.mats[k];
        for (int i = 0; i < ma.rows; ++i)
            for (int j = 0; j < ma.cols; ++j) mo.at(i, j) = ma.at(i, j);
        for (int i = 0; i < mb.rows; ++i)
            for (int j = 0; j < mb.cols; ++j) mo.at(ma.rows + i, ma.cols + j) = mb.at(i, j);
    }
    return out;
}

FpMatrix random_invertible(int n, int p, std::mt19937& rng) {
    std::uniform_int_distribution<uint32_t> dist(0, static_cast<uint32_t>(p) - 1);
    for (;;) {
        FpMatrix g(p, n, n);
        for (auto& e : g.a) e = dist(rng);
        if (fp_rank(g) == n) return g;
    }
}

FpMatrix mul_mod(const FpMatrix& a, const FpMatrix& b) {
    FpMatrix out(a.p, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            uint64_t v = a.at(i, k);
            if (!v) continue;
            for (int j = 0; j < b.cols; ++j)
                out.at(i, j) = static_cast<uint32_t>((out.at(i, j) + v * b.at(k, j)) % static_cast<uint64_t>(a.p));
        }
    return out;
}

// Inverse by Gauss-Jordan on [g | id].
FpMatrix inverse_mod(const FpMatrix& g) {
    int n = g.rows, p = g.p;
    FpMatrix aug(p, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = g.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto inv_scalar = [&](uint64_t v) {
        uint64_t out = 1, e = static_cast<uint64_t>(p) - 2, base = v;
        while (e) {
            if (e & 1) out = out * base % static_cast<uint64_t>(p);
            base = base * base % static_cast<uint64_t>(p);
            e >>= 1;
        }
        return out;
    };
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (aug.at(piv, col) == 0) ++piv;
        for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(piv, j), aug.at(col, j));
        uint64_t f = inv_scalar(aug.at(col, col));
        for (int j = 0; j < 2 * n; ++j) aug.at(col, j) = static_cast<uint32_t>(aug.at(col, j) * f % static_cast<uint64_t>(p));
        for (int i = 0; i < n; ++i) {
            if (i == col || !aug.at(i, col)) continue;
            uint64_t c = aug.at(i, col);
            for (int j = 0; j < 2 * n; ++j)
                aug.at(i, j) = static_cast<uint32_t>((aug.at(i, j) + (static_cast<uint64_t>(p) - c) * aug.at(col, j)) %
                                                     static_cast<uint64_t>(p));
        }
    }
    FpMatrix out(p, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

// Base change (g M)_a = g_dst M_a g_src^{-1}.
RepTuple base_change(const RepTuple& m, const std::vector<FpMatrix>& g) {
    RepTuple out = m;
    const QuiverD& q = *m.quiver;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        auto [src, dst] = q.arrows[a];
        out.mats[a] = mul_mod(mul_mod(g[static_cast<std::size_t>(dst)], m.mats[a]),
                              inverse_mod(g[static_cast<std::size_t>(src)]));
    }
    return out;
}

} // namespace

TEST_CASE("fp_rank") {
    FpMatrix m(5, 2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    CHECK(fp_rank(m) == 1);
    m.at(1, 1) = 3;
    CHECK(fp_rank(m) == 2);
    CHECK(fp_rank(FpMatrix(2, 0, 0)) == 0);
}

TEST_CASE("hom_dim basics") {
    RootSystemD rs(3);
    RepTuple s0 = simple_at(rs, 0, 5);
    CHECK(hom_dim(s0, s0) == 1);

    // P_0-shaped: spaces at 0,2,3 with identity arrows
    RepTuple p0 = zero_rep(rs.quiver(), ev({1, 0, 1, 1}), 5);
    p0.mats[0].at(0, 0) = 1;   // 0 -> 2
    p0.mats[1].at(0, 0) = 1;   // 0 -> 3
    CHECK(hom_dim(p0, s0) == 1);
    CHECK(hom_dim(p0, p0) == 1);

    CHECK(hom_dim(p0, direct_sum(p0, p0)) == 2 * hom_dim(p0, p0));

    std::mt19937 rng(77);
    RepTuple m = random_rep(rs, ev({1, 2, 2, 1}), 5, rng);
    RepTuple n = random_rep(rs, ev({2, 1, 1, 2}), 5, rng);
    CHECK(hom_dim(m, direct_sum(n, n)) == 2 * hom_dim(m, n));
    CHECK(hom_dim(direct_sum(m, m), n) == 2 * hom_dim(m, n));
}

TEST_CASE("hom from a projective is the dimension at its vertex") {
    // r=3: P_0 has spaces at 0,2,3 with identity arrow maps, P_2 = S_2,
    // P_3 = S_3; Hom(P_i, N) = N_i for every N.
    RootSystemD rs(3);
    std::mt19937 rng(5);
    RepTuple p0 = zero_rep(rs.quiver(), DimVector{1, 0, 1, 1}, 7);
    p0.mats[0].at(0, 0) = 1;
    p0.mats[1].at(0, 0) = 1;
    RepTuple p1 = zero_rep(rs.quiver(), DimVector{0, 1, 1, 1}, 7);
    p1.mats[2].at(0, 0) = 1;
    p1.mats[3].at(0, 0) = 1;
    for (int iter = 0; iter < 8; ++iter) {
        RepTuple n = random_rep(rs, DimVector{2, 1, 2, 3}, 7, rng);
        CHECK(hom_dim(p0, n) == n.d[0]);
        CHECK(hom_dim(p1, n) == n.d[1]);
        CHECK(hom_dim(simple_at(rs, 2, 7), n) == n.d[2]);
        CHECK(hom_dim(simple_at(rs, 3, 7), n) == n.d[3]);
    }
}

TEST_CASE("hom_dim is constant under base change") {
    RootSystemD rs(4);
    std::mt19937 rng(13);
    for (int iter = 0; iter < 10; ++iter) {
        DimVector d = ev({1, 1, 2, 1, 1});
        RepTuple m = random_rep(rs, d, 5, rng);
        RepTuple n = random_rep(rs, d, 5, rng);
        std::vector<FpMatrix> g;
        for (int i = 0; i <= rs.r(); ++i) g.push_back(random_invertible(d[static_cast<std::size_t>(i)], 5, rng));
        CHECK(hom_dim(base_change(m, g), base_change(n, g)) == hom_dim(m, n));
    }
}

TEST_CASE("sigma_rep on the exceptional simples") {
    RootSystemD rs(3);
    RepTuple s0 = simple_at(rs, 0, 5), s1 = simple_at(rs, 1, 5);
    RepTuple s2 = simple_at(rs, 2, 5), s3 = simple_at(rs, 3, 5);
    CHECK(sigma_rep(rs, s0, s0) == 1);
    CHECK(sigma_rep(rs, s0, s1) == -1);
    CHECK(sigma_rep(rs, s1, s0) == -1);
    CHECK(sigma_rep(rs, s2, s3) == -1);
    CHECK(sigma_rep(rs, s2, s2) == 1);
}

TEST_CASE("sigma_rep flips sign under Sigma on either argument") {
    RootSystemD rs(3);
    std::mt19937 rng(31);
    for (int iter = 0; iter < 12; ++iter) {
        RepTuple m = random_rep(rs, ev({1, 1, 2, 1}), 3, rng);
        RepTuple n = random_rep(rs, ev({2, 1, 1, 1}), 3, rng);
        long s = sigma_rep(rs, m, n);
        CHECK(sigma_rep(rs, m, sigma_rep_transport(rs, n)) == -s);
        CHECK(sigma_rep(rs, sigma_rep_transport(rs, m), n) == -s);
    }
}

TEST_CASE("literally Sigma-symmetric representations do not interact") {
    RootSystemD rs(3);
    std::mt19937 rng(57);
    for (int iter = 0; iter < 10; ++iter) {
        // arrows of A^_3: 0->2, 0->3, 1->2, 1->3; Sigma swaps (0->2, 1->3)
        // and (0->3, 1->2), so equal matrices on each pair give Sigma M = M
        RepTuple m = random_rep(rs, ev({1, 1, 1, 1}), 5, rng);
        m.mats[3] = m.mats[0];
        m.mats[2] = m.mats[1];
        CHECK(sigma_rep_transport(rs, m).mats[0].a == m.mats[0].a);
        RepTuple n = random_rep(rs, ev({1, 2, 1, 2}), 5, rng);
        CHECK(sigma_rep(rs, m, n) + sigma_rep(rs, n, m) == 0);
    }
}

TEST_CASE("count_ji examples") {
    RootSystemD rs(3);
    for (int p : {2, 3, 5}) CHECK(count_ji(rs, ev({1, 0, 0, 0}), p, default_enum_budget) == 1);
    CHECK(count_ji(rs, ev({1, 1, 0, 0}), 3, default_enum_budget) == 9);
    CHECK(count_ji(rs, ev({1, 0, 1, 0}), 5, default_enum_budget) == 5);
}

TEST_CASE("budget guard") {
    RootSystemD rs(3);
    CHECK_THROWS_WITH_AS(count_ji(rs, ev({2, 2, 2, 2}), 5, 1000), doctest::Contains("budget"), std::domain_error);
    Series a = a_series_closed(rs, 8);
    CheckReport rep = coefficient_check(rs, a, ev({2, 2, 2, 2}), 5, 1000);
    CHECK(rep.skipped);
    CHECK(!rep.pass);
}

TEST_CASE("coefficient_check examples") {
    RootSystemD rs(3);
    Series a = a_series_closed(rs, 4);

    CheckReport r1 = coefficient_check(rs, a, ev({1, 1, 0, 0}), 3, default_enum_budget);
    CHECK(r1.pass);
    CHECK(r1.poly == std::vector<std::pair<long, Int>>{{2, Int(1)}});   // P(q) = q^2
    CHECK(r1.count == 9);

    CheckReport r2 = coefficient_check(rs, a, ev({1, 0, 0, 0}), 2, default_enum_budget);
    CHECK(r2.pass);
    CHECK(r2.poly == std::vector<std::pair<long, Int>>{{0, Int(1)}});   // P(q) = 1
    CHECK(r2.count == 1);

    CheckReport r3 = coefficient_check(rs, a, ev({1, 0, 1, 0}), 5, default_enum_budget);
    CHECK(r3.pass);
    CHECK(r3.poly == std::vector<std::pair<long, Int>>{{1, Int(1)}});   // P(q) = q
    CHECK(r3.count == 5);
}

TEST_CASE("coefficient_check sweep at small degree") {
    RootSystemD rs(3);
    Series a = a_series_closed(rs, 3);
    for_each_in_simplex(4, 3, [&](const DimVector& d) {
        for (int p : {2, 3}) {
            CheckReport rep = coefficient_check(rs, a, d, p, default_enum_budget);
            CHECK(rep.pass);
        }
    });
}

TEST_CASE("coefficient_check spot values at ell=3") {
    RootSystemD rs(5);
    Series a = a_series_closed(rs, 4);
    for (auto d : std::vector<DimVector>{{1, 1, 1, 0, 0, 0},
                                         {0, 0, 1, 1, 1, 1},
                                         {1, 0, 1, 1, 0, 1},
                                         {1, 1, 2, 0, 0, 0}}) {
        CheckReport rep = coefficient_check(rs, a, d, 2, default_enum_budget);
        CHECK(rep.pass);
    }
}
