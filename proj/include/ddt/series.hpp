#pragma once

#include "ddt/dimvec.hpp"
#include "ddt/scalar.hpp"

#include <map>

namespace ddt {

// Multivariate power series over Scalar, truncated by total degree.
// Invariant: every stored exponent is componentwise >= 0 with total degree
// <= truncation(); no zero coefficients are stored.
class Series {
public:
    Series(int nvars, int trunc);

    static Series zero(int nvars, int trunc) { return Series(nvars, trunc); }
    static Series one(int nvars, int trunc);
    static Series monomial(const Scalar& c, const DimVector& d, int trunc);

    int nvars() const { return nvars_; }
    int truncation() const { return trunc_; }

    Scalar coeff(const DimVector& d) const;
    void set_coeff(const DimVector& d, const Scalar& c);
    void add_to_coeff(const DimVector& d, const Scalar& c);

    const std::map<DimVector, Scalar>& terms() const { return c_; }
    std::size_t term_count() const { return c_.size(); }
    Scalar constant_term() const { return coeff(DimVector(nvars_, 0)); }

    Series operator-() const;
    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }
    Series scaled(const Scalar& c) const;

    bool operator==(const Series& o) const;

    // Serial reference product, kept for validating the parallel kernel.
    Series mul_serial(const Series& o) const;

    // Multiplicative inverse up to truncation; constant term must be nonzero.
    Series inv() const;

    Series pow(int n) const;

    // psi_n on series: Adams on coefficients, d -> n*d on exponents.
    Series adams(int n) const;

    // Parallel kernel control: products with at least this many coefficient
    // pairs run under OpenMP. Exact arithmetic keeps results identical.
    static std::size_t parallel_threshold;

private:
    void check_shape(const Series& o) const;

    int nvars_;
    int trunc_;
    std::map<DimVector, Scalar> c_;
};

// Plethystic exponential Exp(A) = exp(sum_{n>=1} psi_n(A)/n);
// A must have zero constant term.
Series pleth_exp(const Series& a);

// Plethystic logarithm, inverse of pleth_exp; B must have constant term 1.
Series pleth_log(const Series& b);

int moebius(int n);

} // namespace ddt
