#pragma once

#include "ddt/rootsystem.hpp"
#include "ddt/scalar.hpp"
#include "ddt/series.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ddt {

// Dense matrix over F_p, entries in {0, ..., p-1}.
struct FpMatrix {
    int p = 2;
    int rows = 0;
    int cols = 0;
    std::vector<uint32_t> a;

    FpMatrix() = default;
    FpMatrix(int p_, int rows_, int cols_) : p(p_), rows(rows_), cols(cols_), a(static_cast<std::size_t>(rows_) * cols_, 0) {}
    uint32_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    uint32_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

int fp_rank(FpMatrix m);

// A point of R(Q'', d) over F_p: one matrix of shape d_j x d_i per arrow i -> j.
struct RepTuple {
    const QuiverD* quiver = nullptr;
    int p = 2;
    DimVector d;
    std::vector<FpMatrix> mats;   // indexed like quiver->arrows
};

RepTuple zero_rep(const QuiverD& q, const DimVector& d, int p);

// dim_Fp Hom(M, N): kernel dimension of (phi_i) -> (N_a phi_i - phi_j M_a).
int hom_dim(const RepTuple& m, const RepTuple& n);

// The representation Sigma N: spaces N_{Sigma i}, arrows transported along
// the quiver automorphism Sigma.
RepTuple sigma_rep_transport(const RootSystemD& rs, const RepTuple& n);

// sigma(M,N) = h0(M,N) + h1(M,N) - h0(M,SN) - h1(M,SN), with
// h1(M,N) = h0(M,N) - chi(dim M, dim N).
long sigma_rep(const RootSystemD& rs, const RepTuple& m, const RepTuple& n);

// dim R(Q'', d) = sum over arrows of d_i d_j.
long rep_space_dim(const QuiverD& q, const DimVector& d);

// |R(J_I, d)(F_p)| = sum over M in R(Q'', d)(F_p) of p^{hom(M, Sigma M)}.
// Throws if p^{dim R} exceeds the budget. The histogram of hom dimensions
// is accumulated per thread and combined, so worker count cannot affect
// the result.
Int count_ji(const RootSystemD& rs, const DimVector& d, int p, uint64_t budget);

// Single-threaded reference implementation of the same count.
Int count_ji_serial(const RootSystemD& rs, const DimVector& d, int p, uint64_t budget);

struct CheckReport {
    DimVector d;
    int p = 0;
    long s = 0;
    std::vector<std::pair<long, Int>> poly;   // P(q) as (exponent, coeff)
    Int expected;                             // P(p)
    Int count;                                // brute-force count
    bool pass = false;
    bool skipped = false;
    std::string note;
};

// Checks that the coefficient of t^d in the closed-form series matches the
// point count: P(q) = c_d [G_d] (-x)^{-s(d,d)} must be an integer polynomial
// in q with P(p) = |R(J_I,d)(F_p)|. A failed comparison yields pass = false;
// an exceeded budget yields skipped = true.
CheckReport coefficient_check(const RootSystemD& rs, const Series& a_closed, const DimVector& d, int p,
                              uint64_t budget);

constexpr uint64_t default_enum_budget = uint64_t(1) << 24;

} // namespace ddt
