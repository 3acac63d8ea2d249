#pragma once

#include "ddt/laurent.hpp"

#include <utility>
#include <vector>

namespace ddt {

// Element of Q(x), x = q^{1/2}, as a reduced fraction of Laurent polynomials.
// Normal form: gcd(num, den) = 1 after shifting both to minimum exponent 0;
// den has minimum exponent 0, coprime integer coefficients and positive
// leading coefficient. Equality is structural equality of normal forms.
class Scalar {
public:
    Scalar() : num_(0), den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}
    explicit Scalar(const Rat& c) : num_(c), den_(1) {}
    Scalar(LaurentPoly num, LaurentPoly den);

    // q^{k/2} and c * x^k constructors.
    static Scalar x_power(long k) { return Scalar(LaurentPoly::monomial(Rat(1), k), LaurentPoly(1)); }
    static Scalar q() { return x_power(2); }
    static Scalar x() { return x_power(1); }
    static Scalar monomial(const Rat& c, long k) { return Scalar(LaurentPoly::monomial(c, k), LaurentPoly(1)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;

    // Adams operation psi_n: x -> x^n.
    Scalar adams(long n) const;

    // Exact evaluation at x = x0; throws on a pole.
    Rat eval_rational(const Rat& x0) const;

    // Multiplies by (-x)^{-s} and expands the result as a polynomial in
    // q = x^2 with integer coefficients, returned as (q-exponent, coeff)
    // pairs in increasing exponent order. Throws with a message naming the
    // failure if the result is not such a polynomial.
    std::vector<std::pair<long, Int>> clear_to_q_polynomial(long s) const;

    // Re-runs normalization; public so idempotence is testable.
    void normalize();

private:
    LaurentPoly num_, den_;
};

inline Scalar arith_add(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar arith_sub(const Scalar& a, const Scalar& b) { return a - b; }
inline Scalar arith_mul(const Scalar& a, const Scalar& b) { return a * b; }
inline Scalar arith_div(const Scalar& a, const Scalar& b) { return a / b; }

} // namespace ddt
