#include "ddt/laurent.hpp"

#include <vector>

namespace ddt {

namespace {

// Dense integer polynomial, index = exponent. Trailing zeros trimmed.
using ZPoly = std::vector<Int>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly primitive_part(ZPoly p) {
    trim(p);
    if (p.empty()) return p;
    Int g(0);
    for (auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (p.back() < 0) g = -g;
    for (auto& c : p) c /= g;
    return p;
}

// Pseudo-remainder of a by b (b nonzero, deg a >= deg b assumed not required).
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    trim(a);
    long db = static_cast<long>(b.size()) - 1;
    const Int& lb = b.back();
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
        long da = static_cast<long>(a.size()) - 1;
        Int la = a.back();
        for (auto& c : a) c *= lb;
        for (long i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
        trim(a);
    }
    return a;
}

// Primitive PRS gcd over Z[x]; result primitive with positive lead.
ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Shift a Laurent polynomial to min exponent 0 and clear denominators.
ZPoly to_zpoly(const LaurentPoly& p) {
    if (p.is_zero()) return {};
    long lo = p.min_exp();
    Rat cont = p.content();
    ZPoly out(static_cast<std::size_t>(p.max_exp() - lo + 1), Int(0));
    for (auto& [e, v] : p.terms()) {
        Rat c = v / cont;
        out[static_cast<std::size_t>(e - lo)] = c.get_num();
    }
    return out;
}

LaurentPoly from_zpoly(const ZPoly& p) {
    LaurentPoly out;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) out.set_coeff(static_cast<long>(i), Rat(p[i]));
    return out;
}

} // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly(0);
    if (a.is_zero()) return from_zpoly(primitive_part(to_zpoly(b)));
    if (b.is_zero()) return from_zpoly(primitive_part(to_zpoly(a)));
    return from_zpoly(zpoly_gcd(to_zpoly(a), to_zpoly(b)));
}

LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divexact: division by zero polynomial");
    if (a.is_zero()) return LaurentPoly(0);
    // Ordinary long division over Q on the shifted polynomials; the quotient
    // picks up the shift difference, the remainder must vanish.
    long shift = a.min_exp() - b.min_exp();
    LaurentPoly rem = a.shifted(-a.min_exp());
    LaurentPoly bb = b.shifted(-b.min_exp());
    LaurentPoly quot;
    long db = bb.max_exp();
    Rat lb = bb.leading_coeff();
    while (!rem.is_zero() && rem.max_exp() >= db) {
        Rat c = rem.leading_coeff() / lb;
        long e = rem.max_exp() - db;
        quot.set_coeff(e, c);
        rem = rem - bb.shifted(e).scaled(c);
    }
    if (!rem.is_zero()) throw std::domain_error("poly_divexact: inexact division");
    return quot.shifted(shift);
}

} // namespace ddt
