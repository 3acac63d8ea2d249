#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace ddt {

// Exponent / dimension vector indexed by the quiver vertices 0..r.
using DimVector = std::vector<int>;

inline int total(const DimVector& d) { return std::accumulate(d.begin(), d.end(), 0); }

inline bool all_nonneg(const DimVector& d) {
    for (int x : d)
        if (x < 0) return false;
    return true;
}

inline bool is_zero(const DimVector& d) {
    for (int x : d)
        if (x != 0) return false;
    return true;
}

inline DimVector operator+(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("DimVector: size mismatch");
    DimVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline DimVector operator-(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("DimVector: size mismatch");
    DimVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline DimVector operator*(int n, const DimVector& d) {
    DimVector out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out[i] = n * d[i];
    return out;
}

inline DimVector unit_vector(std::size_t len, std::size_t i) {
    DimVector out(len, 0);
    out.at(i) = 1;
    return out;
}

// Visits every d in N^len with total(d) <= max_total, in lexicographic order.
template <typename F>
void for_each_in_simplex(std::size_t len, int max_total, F&& f) {
    DimVector d(len, 0);
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i == len) {
            f(const_cast<const DimVector&>(d));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            d[i] = v;
            self(self, i + 1, remaining - v);
        }
        d[i] = 0;
    };
    rec(rec, 0, max_total);
}

} // namespace ddt
