#pragma once

#include "ddt/qseries.hpp"
#include "ddt/rootsystem.hpp"

#include <utility>
#include <vector>

namespace ddt {

// One row of the DT invariant table.
struct OmegaEntry {
    DimVector d;
    RootClass cls;
    Scalar value;
};

// Omega_d(q) from the root class: q for real p=0 roots and Sigma-pair sums,
// -q^{1/2} for real p=1 roots, q(q+r) for n*delta, zero otherwise.
Scalar omega_value(const RootSystemD& rs, const RootClass& cls);

OmegaEntry omega(const RootSystemD& rs, const DimVector& d);

// Nonzero entries for all d with total(d) <= max_total.
std::vector<OmegaEntry> omega_table(const RootSystemD& rs, int max_total);

// A(t) = Exp(sum_d Omega_d t^d / (q-1)), truncated.
Series a_series_closed(const RootSystemD& rs, int max_total);

// The same series assembled from the AR factorization: one factor
// sum_m t^{md}/(q^{-1})_m per real p=0 root, Exp(q(q+r)t^{n delta}/(q-1))
// per imaginary root, and the cyclic-quiver double sum per Sigma-orbit of
// real p=1 roots.
Series a_series_ar(const RootSystemD& rs, int max_total);

// Both sides of the C_2 generating series identity in variables t1, t2:
// double sum vs Exp((q t1 t2 - q^{1/2}(t1 + t2))/(q-1)).
std::pair<Series, Series> c2_series(int max_total);

// The A^_3 closed formula (r = 3), as printed:
// Exp([q sum_{i<j} t_i t_j - q^{1/2} sum_i (t_i + t_i t_{i+1} t_{i+2})
//      + q(q+3) t^delta] / (q-1) * sum_{n>=0} t^{n delta}), indices mod 4.
Series a3_special_series(int max_total);

// Omega_d = (q-1) * coefficient of t^d in pleth_log(A); nonzero entries only.
std::vector<std::pair<DimVector, Scalar>> extract_dt(const Series& a);

// NCDT generating function framed at vertex 0 (r = 3 only):
// Exp side Exp(sum_d d_0 Omega_d(1) t^d) and the MacMahon product side.
std::pair<Series, Series> ncdt_series(int max_total);

} // namespace ddt
