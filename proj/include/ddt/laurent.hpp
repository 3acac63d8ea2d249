#pragma once

#include "ddt/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace ddt {

// Laurent polynomial in x = q^{1/2} with exact rational coefficients.
// Exponents are x-exponents, so the monomial q^{k/2} is stored at key k.
// Invariant: no zero coefficients are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& c) {
        if (c != 0) c_[0] = c;
    }
    explicit LaurentPoly(long c) : LaurentPoly(Rat(c)) {}

    static LaurentPoly monomial(const Rat& c, long k) {
        LaurentPoly p;
        if (c != 0) p.c_[k] = c;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }

    // Smallest / largest stored x-exponent; polynomial must be nonzero.
    long min_exp() const {
        if (c_.empty()) throw std::domain_error("LaurentPoly: min_exp of zero");
        return c_.begin()->first;
    }
    long max_exp() const {
        if (c_.empty()) throw std::domain_error("LaurentPoly: max_exp of zero");
        return c_.rbegin()->first;
    }

    Rat coeff(long k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Rat(0) : it->second;
    }

    void set_coeff(long k, const Rat& v) {
        if (v == 0)
            c_.erase(k);
        else
            c_[k] = v;
    }

    const std::map<long, Rat>& terms() const { return c_; }
    std::size_t term_count() const { return c_.size(); }

    LaurentPoly operator-() const {
        LaurentPoly out;
        for (auto& [k, v] : c_) out.c_[k] = -v;
        return out;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly out = *this;
        for (auto& [k, v] : o.c_) {
            Rat s = out.coeff(k) + v;
            out.set_coeff(k, s);
        }
        return out;
    }

    LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly out;
        for (auto& [ka, va] : c_)
            for (auto& [kb, vb] : o.c_) {
                Rat s = out.coeff(ka + kb) + va * vb;
                out.set_coeff(ka + kb, s);
            }
        return out;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

    // Multiply by x^k.
    LaurentPoly shifted(long k) const {
        LaurentPoly out;
        for (auto& [e, v] : c_) out.c_[e + k] = v;
        return out;
    }

    LaurentPoly scaled(const Rat& c) const {
        LaurentPoly out;
        if (c == 0) return out;
        for (auto& [e, v] : c_) out.c_[e] = v * c;
        return out;
    }

    // Adams substitution x -> x^n.
    LaurentPoly adams(long n) const {
        LaurentPoly out;
        for (auto& [e, v] : c_) out.c_[e * n] = v;
        return out;
    }

    Rat eval(const Rat& x0) const {
        Rat acc(0);
        for (auto& [e, v] : c_) {
            if (x0 == 0) {
                if (e < 0) throw std::domain_error("LaurentPoly: evaluation at 0 with negative exponent");
                if (e == 0) acc += v;
                continue;
            }
            acc += v * pow_rat(x0, e);
        }
        return acc;
    }

    // Rational content: the positive rational c such that (*this)/c has
    // coprime integer coefficients. Zero polynomial has content 0.
    Rat content() const {
        if (c_.empty()) return Rat(0);
        Int num_gcd(0), den_lcm(1);
        for (auto& [e, v] : c_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
        }
        Rat c(num_gcd, den_lcm);
        c.canonicalize();
        return c;
    }

    Rat leading_coeff() const {
        if (c_.empty()) return Rat(0);
        return c_.rbegin()->second;
    }

private:
    std::map<long, Rat> c_;
};

// gcd of two Laurent polynomials, computed on the ordinary polynomials
// obtained by shifting each argument to minimum exponent 0. The result is
// primitive with positive leading coefficient (1 for coprime inputs).
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact division; throws if the remainder is nonzero.
LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b);

} // namespace ddt
