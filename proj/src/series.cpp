#include "ddt/series.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <vector>

namespace ddt {

std::size_t Series::parallel_threshold = 4096;

Series::Series(int nvars, int trunc) : nvars_(nvars), trunc_(trunc) {
    if (nvars < 1 || trunc < 0) throw std::invalid_argument("Series: bad shape");
}

Series Series::one(int nvars, int trunc) {
    Series s(nvars, trunc);
    s.c_[DimVector(nvars, 0)] = Scalar(1);
    return s;
}

Series Series::monomial(const Scalar& c, const DimVector& d, int trunc) {
    Series s(static_cast<int>(d.size()), trunc);
    s.set_coeff(d, c);
    return s;
}

Scalar Series::coeff(const DimVector& d) const {
    auto it = c_.find(d);
    return it == c_.end() ? Scalar(0) : it->second;
}

void Series::set_coeff(const DimVector& d, const Scalar& c) {
    if (static_cast<int>(d.size()) != nvars_) throw std::invalid_argument("Series: exponent size mismatch");
    if (!all_nonneg(d)) throw std::invalid_argument("Series: negative exponent");
    if (total(d) > trunc_) return;
    if (c.is_zero())
        c_.erase(d);
    else
        c_[d] = c;
}

void Series::add_to_coeff(const DimVector& d, const Scalar& c) {
    if (total(d) > trunc_) return;
    set_coeff(d, coeff(d) + c);
}

void Series::check_shape(const Series& o) const {
    if (nvars_ != o.nvars_ || trunc_ != o.trunc_)
        throw std::invalid_argument("Series: mismatched variable count or truncation");
}

Series Series::operator-() const {
    Series out(nvars_, trunc_);
    for (auto& [d, c] : c_) out.c_[d] = -c;
    return out;
}

Series Series::operator+(const Series& o) const {
    check_shape(o);
    Series out = *this;
    for (auto& [d, c] : o.c_) out.add_to_coeff(d, c);
    return out;
}

Series Series::operator-(const Series& o) const {
    check_shape(o);
    Series out = *this;
    for (auto& [d, c] : o.c_) out.add_to_coeff(d, -c);
    return out;
}

Series Series::scaled(const Scalar& c) const {
    Series out(nvars_, trunc_);
    if (c.is_zero()) return out;
    for (auto& [d, v] : c_) out.c_[d] = v * c;
    return out;
}

bool Series::operator==(const Series& o) const {
    return nvars_ == o.nvars_ && trunc_ == o.trunc_ && c_ == o.c_;
}

Series Series::mul_serial(const Series& o) const {
    check_shape(o);
    Series out(nvars_, trunc_);
    for (auto& [da, ca] : c_) {
        int ta = total(da);
        for (auto& [db, cb] : o.c_) {
            if (ta + total(db) > trunc_) continue;
            out.add_to_coeff(da + db, ca * cb);
        }
    }
    return out;
}

Series Series::operator*(const Series& o) const {
    check_shape(o);
#ifdef _OPENMP
    if (c_.size() * o.c_.size() >= parallel_threshold && omp_get_max_threads() > 1) {
        std::vector<const std::pair<const DimVector, Scalar>*> lhs;
        lhs.reserve(c_.size());
        for (auto& kv : c_) lhs.push_back(&kv);
        int nt = omp_get_max_threads();
        std::vector<Series> partial(static_cast<std::size_t>(nt), Series(nvars_, trunc_));
#pragma omp parallel num_threads(nt)
        {
            int tid = omp_get_thread_num();
            Series& local = partial[static_cast<std::size_t>(tid)];
#pragma omp for schedule(static)
            for (long i = 0; i < static_cast<long>(lhs.size()); ++i) {
                const auto& [da, ca] = *lhs[static_cast<std::size_t>(i)];
                int ta = total(da);
                for (auto& [db, cb] : o.c_) {
                    if (ta + total(db) > trunc_) continue;
                    local.add_to_coeff(da + db, ca * cb);
                }
            }
        }
        Series out(nvars_, trunc_);
        for (auto& p : partial) out += p;
        return out;
    }
#endif
    return mul_serial(o);
}

Series Series::inv() const {
    Scalar c0 = constant_term();
    if (c0.is_zero()) throw std::domain_error("Series: inverse requires invertible constant term");
    // *this = c0 * (1 - u) with u of positive order; invert by geometric series.
    Series u = Series::one(nvars_, trunc_) - scaled(c0.inverse());
    Series acc = Series::one(nvars_, trunc_);
    Series out = Series::one(nvars_, trunc_);
    for (int k = 1; k <= trunc_; ++k) {
        acc = acc * u;
        if (acc.c_.empty()) break;
        out += acc;
    }
    return out.scaled(c0.inverse());
}

Series Series::pow(int n) const {
    if (n < 0) throw std::invalid_argument("Series: negative power, use inv()");
    Series out = Series::one(nvars_, trunc_);
    Series base = *this;
    while (n) {
        if (n & 1) out = out * base;
        base = (n >>= 1) ? base * base : base;
    }
    return out;
}

Series Series::adams(int n) const {
    if (n < 1) throw std::invalid_argument("Series: adams requires n >= 1");
    Series out(nvars_, trunc_);
    for (auto& [d, c] : c_) {
        DimVector nd = n * d;
        if (total(nd) > trunc_) continue;
        out.c_[nd] = c.adams(n);
    }
    return out;
}

namespace {

// exp of a series with zero constant term.
Series exp_positive_order(const Series& b) {
    Series out = Series::one(b.nvars(), b.truncation());
    Series pw = Series::one(b.nvars(), b.truncation());
    Rat fact(1);
    for (int k = 1; k <= b.truncation(); ++k) {
        pw = pw * b;
        if (pw.term_count() == 0) break;
        fact *= k;
        out += pw.scaled(Scalar(Rat(1) / fact));
    }
    return out;
}

// log of a series with constant term 1.
Series log_unit(const Series& b) {
    Series u = b - Series::one(b.nvars(), b.truncation());
    Series out(b.nvars(), b.truncation());
    Series pw = Series::one(b.nvars(), b.truncation());
    for (int k = 1; k <= b.truncation(); ++k) {
        pw = pw * u;
        if (pw.term_count() == 0) break;
        Rat c(k % 2 ? 1 : -1, k);
        out += pw.scaled(Scalar(c));
    }
    return out;
}

} // namespace

int moebius(int n) {
    if (n < 1) throw std::invalid_argument("moebius: n >= 1 required");
    int out = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        out = -out;
    }
    if (n > 1) out = -out;
    return out;
}

Series pleth_exp(const Series& a) {
    if (!a.constant_term().is_zero())
        throw std::domain_error("pleth_exp: nonzero constant term");
    Series b(a.nvars(), a.truncation());
    for (int n = 1; n <= a.truncation(); ++n) {
        Series psi = a.adams(n);
        if (psi.term_count() == 0) continue;
        b += psi.scaled(Scalar(Rat(1, n)));
    }
    return exp_positive_order(b);
}

Series pleth_log(const Series& b) {
    if (!b.constant_term().is_one())
        throw std::domain_error("pleth_log: constant term must be 1");
    Series l = log_unit(b);
    Series out(b.nvars(), b.truncation());
    for (int n = 1; n <= b.truncation(); ++n) {
        int mu = moebius(n);
        if (mu == 0) continue;
        Series psi = l.adams(n);
        if (psi.term_count() == 0) continue;
        out += psi.scaled(Scalar(Rat(mu, n)));
    }
    return out;
}

} // namespace ddt
