#pragma once

#include "ddt/series.hpp"

namespace ddt {

// (a; b)_n = prod_{i=0}^{n-1} (1 - b^i a).
Scalar pochhammer(const Scalar& a, const Scalar& base, int n);

// (a; q)_n.
Scalar pochhammer(const Scalar& a, int n);

// (q)_n = prod_{i=1}^{n} (1 - q^i).
Scalar qfact(int n);

// (q^{-1})_n = prod_{i=1}^{n} (1 - q^{-i}).
Scalar qinv_fact(int n);

// [GL_n] = q^{n^2} (q^{-1})_n.
Scalar gl_motive(int n);

// [G_d] = prod_i [GL_{d_i}].
Scalar group_motive(const DimVector& d);

// (1 - t^e)^k for integer k (negative k expands the inverse), truncated.
Series binomial_factor(const DimVector& e, long k, int trunc);

// M(u, v) = prod_{n>=1} (1 - t^{u + n v})^{-n}, truncated by total degree.
// u may have negative entries (a Laurent monomial); every factor whose
// exponent is visible within the truncation must be a genuine monomial.
Series macmahon_m(const DimVector& u, const DimVector& v, int trunc);

// M~(u, v) = M(u, v) * M(-u, v).
Series macmahon_m_tilde(const DimVector& u, const DimVector& v, int trunc);

} // namespace ddt
