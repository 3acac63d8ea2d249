#include "ddt/scalar.hpp"

namespace ddt {

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    // Put den at minimum exponent 0; the compensating power of x moves to num.
    long dmin = den_.min_exp();
    den_ = den_.shifted(-dmin);
    num_ = num_.shifted(-dmin);

    LaurentPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        long nmin = num_.min_exp();
        num_ = poly_divexact(num_.shifted(-nmin), g).shifted(nmin);
        den_ = poly_divexact(den_, g);
    }
    // Scale so den is a primitive integer polynomial with positive lead.
    Rat c = den_.content();
    if (den_.leading_coeff() < 0) c = -c;
    if (c != 1) {
        den_ = den_.scaled(1 / c);
        num_ = num_.scaled(1 / c);
    }
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    return Scalar(den_, num_);
}

Scalar Scalar::adams(long n) const {
    if (n < 1) throw std::domain_error("Scalar: adams requires n >= 1");
    return Scalar(num_.adams(n), den_.adams(n));
}

Rat Scalar::eval_rational(const Rat& x0) const {
    Rat d = den_.eval(x0);
    if (d == 0) throw std::domain_error("Scalar: pole at evaluation point");
    return num_.eval(x0) / d;
}

std::vector<std::pair<long, Int>> Scalar::clear_to_q_polynomial(long s) const {
    // a * (-x)^{-s} = a * (-1)^s * x^{-s}
    Scalar cleared = *this * Scalar::monomial(s % 2 ? Rat(-1) : Rat(1), -s);
    if (!cleared.is_polynomial())
        throw std::domain_error("clear_to_q_polynomial: denominator does not cancel");
    std::vector<std::pair<long, Int>> out;
    for (auto& [e, v] : cleared.num().terms()) {
        if (e % 2 != 0)
            throw std::domain_error("clear_to_q_polynomial: odd power of x remains");
        if (e < 0)
            throw std::domain_error("clear_to_q_polynomial: negative q-exponent remains");
        if (!is_integer(v))
            throw std::domain_error("clear_to_q_polynomial: non-integer coefficient");
        out.emplace_back(e / 2, v.get_num());
    }
    return out;
}

} // namespace ddt
