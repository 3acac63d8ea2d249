// Compares the OpenMP kernels against their serial reference
// implementations and reports timings. Exits nonzero on any mismatch.

#include "ddt/dtengine.hpp"
#include "ddt/fqoracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <random>

using namespace ddt;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Fills a fraction of the full degree simplex with rational-function
// coefficients of the kind the DT series produce.
Series random_series(std::mt19937& rng, int nvars, int trunc) {
    Series s(nvars, trunc);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<int> keep(0, 2);
    for_each_in_simplex(static_cast<std::size_t>(nvars), trunc, [&](const DimVector& d) {
        if (keep(rng)) return;
        s.set_coeff(d, Scalar(LaurentPoly::monomial(Rat(num(rng)), num(rng) % 3) + LaurentPoly(1),
                              LaurentPoly::monomial(Rat(1), 2) - LaurentPoly(1)));
    });
    return s;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    int failures = 0;

    {
        RootSystemD rs(3);
        DimVector d{2, 2, 2, 2};   // dim R(Q'', d) = 16, 2^16 tuples at p = 2
        auto t0 = Clock::now();
        Int serial = count_ji_serial(rs, d, 2, uint64_t(1) << 22);
        double ts = seconds_since(t0);
        auto t1 = Clock::now();
        Int parallel = count_ji(rs, d, 2, uint64_t(1) << 22);
        double tp = seconds_since(t1);
        bool ok = serial == parallel;
        if (!ok) ++failures;
        std::printf("count_ji r=3 d=(2,2,2,2) p=2: serial %.3fs, parallel %.3fs, speedup %.2fx, %s\n", ts, tp,
                    ts / tp, ok ? "equal" : "MISMATCH");
    }
    {
        RootSystemD rs(4);
        DimVector d{1, 1, 2, 1, 1};   // dim R = 8, 3^8 tuples
        auto t0 = Clock::now();
        Int serial = count_ji_serial(rs, d, 3, uint64_t(1) << 22);
        double ts = seconds_since(t0);
        auto t1 = Clock::now();
        Int parallel = count_ji(rs, d, 3, uint64_t(1) << 22);
        double tp = seconds_since(t1);
        bool ok = serial == parallel;
        if (!ok) ++failures;
        std::printf("count_ji r=4 d=delta    p=3: serial %.3fs, parallel %.3fs, speedup %.2fx, %s\n", ts, tp,
                    ts / tp, ok ? "equal" : "MISMATCH");
    }
    {
        std::mt19937 rng(7);
        Series a = random_series(rng, 4, 8);
        Series b = random_series(rng, 4, 8);
        auto t0 = Clock::now();
        Series serial = a.mul_serial(b);
        double ts = seconds_since(t0);
        std::size_t saved = Series::parallel_threshold;
        Series::parallel_threshold = 1;
        auto t1 = Clock::now();
        Series parallel = a * b;
        double tp = seconds_since(t1);
        Series::parallel_threshold = saved;
        bool ok = serial == parallel;
        if (!ok) ++failures;
        std::printf("series mul %zux%zu terms:     serial %.3fs, parallel %.3fs, speedup %.2fx, %s\n",
                    a.term_count(), b.term_count(), ts, tp, ts / tp, ok ? "equal" : "MISMATCH");
    }
    return failures ? 1 : 0;
}
