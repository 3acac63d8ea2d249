#include "ddt/qseries.hpp"

namespace ddt {

Scalar pochhammer(const Scalar& a, const Scalar& base, int n) {
    if (n < 0) throw std::invalid_argument("pochhammer: n >= 0 required");
    Scalar out(1);
    Scalar bi(1);
    for (int i = 0; i < n; ++i) {
        out *= Scalar(1) - bi * a;
        bi *= base;
    }
    return out;
}

Scalar pochhammer(const Scalar& a, int n) { return pochhammer(a, Scalar::q(), n); }

Scalar qfact(int n) { return pochhammer(Scalar::q(), Scalar::q(), n); }

Scalar qinv_fact(int n) {
    Scalar qi = Scalar::x_power(-2);
    return pochhammer(qi, qi, n);
}

Scalar gl_motive(int n) {
    if (n < 0) throw std::invalid_argument("gl_motive: n >= 0 required");
    return Scalar::x_power(2L * n * n) * qinv_fact(n);
}

Scalar group_motive(const DimVector& d) {
    Scalar out(1);
    for (int di : d) out *= gl_motive(di);
    return out;
}

Series binomial_factor(const DimVector& e, long k, int trunc) {
    int nv = static_cast<int>(e.size());
    if (!all_nonneg(e) || is_zero(e))
        throw std::invalid_argument("binomial_factor: exponent must be a nonzero monomial");
    Series out(nv, trunc);
    int step = total(e);
    if (k >= 0) {
        // (1 - t^e)^k, finite sum.
        for (long j = 0; j <= k && static_cast<long>(step) * j <= trunc; ++j) {
            Rat c(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)));
            if (j % 2) c = -c;
            out.add_to_coeff(static_cast<int>(j) * e, Scalar(c));
        }
    } else {
        long n = -k;
        for (long j = 0; static_cast<long>(step) * j <= trunc; ++j) {
            Rat c(binomial(static_cast<unsigned long>(n + j - 1), static_cast<unsigned long>(j)));
            out.add_to_coeff(static_cast<int>(j) * e, Scalar(c));
        }
    }
    return out;
}

Series macmahon_m(const DimVector& u, const DimVector& v, int trunc) {
    if (u.size() != v.size()) throw std::invalid_argument("macmahon_m: shape mismatch");
    if (!all_nonneg(v) || is_zero(v)) throw std::invalid_argument("macmahon_m: v must be a nonzero monomial");
    int nv = static_cast<int>(u.size());
    Series out = Series::one(nv, trunc);
    for (int n = 1;; ++n) {
        DimVector e = u + n * v;
        if (total(e) > trunc) break;
        if (!all_nonneg(e))
            throw std::domain_error("macmahon_m: factor exponent has a negative entry within truncation");
        out = out * binomial_factor(e, -n, trunc);
    }
    return out;
}

Series macmahon_m_tilde(const DimVector& u, const DimVector& v, int trunc) {
    DimVector neg(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) neg[i] = -u[i];
    return macmahon_m(u, v, trunc) * macmahon_m(neg, v, trunc);
}

} // namespace ddt
