#pragma once

#include "ddt/rational.hpp"

#include <stdexcept>
#include <vector>

namespace ddt {

// Element of Q(z) = Q[z] / Phi_n(z), z a primitive n-th root of unity.
// Used with n = 2*ell, z = e^{i pi / ell}, to evaluate dihedral characters
// exactly.
class Cyclotomic {
public:
    Cyclotomic(int n, const Rat& c);   // the rational constant c
    static Cyclotomic zeta_power(int n, long k);   // z^k

    int order() const { return n_; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic scaled(const Rat& c) const;

    bool operator==(const Cyclotomic& o) const { return n_ == o.n_ && c_ == o.c_; }

    // Complex conjugation z -> z^{-1}.
    Cyclotomic conj() const;

    bool is_rational() const;
    Rat rational_value() const;   // throws if not rational

    // Integer coefficients of Phi_n, index = degree (cached).
    static const std::vector<Int>& cyclotomic_poly(int n);

private:
    Cyclotomic(int n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
    void reduce();

    int n_;
    std::vector<Rat> c_;   // dense, length deg(Phi_n), index = power of z
};

} // namespace ddt
