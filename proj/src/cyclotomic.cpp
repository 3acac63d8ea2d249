#include "ddt/cyclotomic.hpp"

#include <map>

namespace ddt {

namespace {

// Exact division of integer polynomials (dense, index = degree).
std::vector<Int> zdiv(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> rem = a, quot(a.size(), Int(0));
    while (rem.size() >= b.size() && !(rem.size() == 1 && rem[0] == 0)) {
        std::size_t shift = rem.size() - b.size();
        Int c = rem.back() / b.back();
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        while (rem.size() > 1 && rem.back() == 0) rem.pop_back();
        if (rem.size() < b.size()) break;
    }
    for (auto& v : rem)
        if (v != 0) throw std::logic_error("cyclotomic: inexact division");
    while (quot.size() > 1 && quot.back() == 0) quot.pop_back();
    return quot;
}

} // namespace

const std::vector<Int>& Cyclotomic::cyclotomic_poly(int n) {
    static std::map<int, std::vector<Int>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    std::vector<Int> xn(static_cast<std::size_t>(n) + 1, Int(0));
    xn[0] = -1;
    xn.back() = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        xn = zdiv(xn, cyclotomic_poly(d));
    }
    return cache.emplace(n, std::move(xn)).first->second;
}

Cyclotomic::Cyclotomic(int n, const Rat& c) : n_(n) {
    if (n < 1) throw std::invalid_argument("Cyclotomic: order >= 1 required");
    std::size_t deg = cyclotomic_poly(n).size() - 1;   // = phi(n) >= 1
    c_.assign(deg, Rat(0));
    c_[0] = c;
}

Cyclotomic Cyclotomic::zeta_power(int n, long k) {
    long kk = ((k % n) + n) % n;
    std::vector<Rat> raw(static_cast<std::size_t>(kk) + 1, Rat(0));
    raw.back() = 1;
    Cyclotomic tmp(n, std::move(raw));
    tmp.reduce();
    return tmp;
}

void Cyclotomic::reduce() {
    const auto& phi = cyclotomic_poly(n_);
    std::size_t deg = phi.size() - 1;
    while (c_.size() > deg) {
        Rat lead = c_.back();
        std::size_t shift = c_.size() - 1 - deg;
        if (lead != 0) {
            Rat f = lead / Rat(phi.back());
            for (std::size_t i = 0; i <= deg; ++i) c_[shift + i] -= f * Rat(phi[i]);
        }
        c_.pop_back();
    }
    c_.resize(deg, Rat(0));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Cyclotomic: mixed orders");
    Cyclotomic out = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] += o.c_[i];
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    return *this + o.scaled(Rat(-1));
}

Cyclotomic Cyclotomic::scaled(const Rat& c) const {
    Cyclotomic out = *this;
    for (auto& v : out.c_) v *= c;
    return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Cyclotomic: mixed orders");
    std::vector<Rat> prod(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    Cyclotomic out(n_, std::move(prod));
    out.reduce();
    return out;
}

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic out(n_, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        out += zeta_power(n_, -static_cast<long>(i)).scaled(c_[i]);
    }
    return out;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("Cyclotomic: value is not rational");
    return c_[0];
}

} // namespace ddt
