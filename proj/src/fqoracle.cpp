#include "ddt/fqoracle.hpp"

#include "ddt/qseries.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <stdexcept>

namespace ddt {

int fp_rank(FpMatrix m) {
    const uint64_t p = static_cast<uint64_t>(m.p);
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows; ++i)
            if (m.at(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        // scale pivot row to 1
        uint64_t inv = 1, base = m.at(rank, col), e = p - 2;   // Fermat inverse
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int j = 0; j < m.cols; ++j) m.at(rank, j) = static_cast<uint32_t>(m.at(rank, j) * inv % p);
        for (int i = 0; i < m.rows; ++i) {
            if (i == rank || !m.at(i, col)) continue;
            uint64_t f = m.at(i, col);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = static_cast<uint32_t>((m.at(i, j) + (p - f) * m.at(rank, j)) % p);
        }
        ++rank;
    }
    return rank;
}

RepTuple zero_rep(const QuiverD& q, const DimVector& d, int p) {
    if (static_cast<int>(d.size()) != q.vertex_count())
        throw std::invalid_argument("zero_rep: dimension vector size mismatch");
    RepTuple m;
    m.quiver = &q;
    m.p = p;
    m.d = d;
    for (auto& [s, t] : q.arrows) m.mats.emplace_back(p, d[t], d[s]);
    return m;
}

long rep_space_dim(const QuiverD& q, const DimVector& d) {
    long out = 0;
    for (auto& [s, t] : q.arrows) out += static_cast<long>(d[s]) * d[t];
    return out;
}

int hom_dim(const RepTuple& m, const RepTuple& n) {
    if (m.p != n.p) throw std::invalid_argument("hom_dim: prime mismatch");
    if (m.quiver->arrows != n.quiver->arrows) throw std::invalid_argument("hom_dim: quiver mismatch");
    const QuiverD& q = *m.quiver;
    int nv = q.vertex_count();

    // Unknowns: phi_i of shape n.d[i] x m.d[i], flattened vertex by vertex.
    std::vector<int> offset(static_cast<std::size_t>(nv) + 1, 0);
    for (int i = 0; i < nv; ++i) offset[static_cast<std::size_t>(i) + 1] = offset[static_cast<std::size_t>(i)] + n.d[i] * m.d[i];
    int cols = offset[static_cast<std::size_t>(nv)];
    int rows = 0;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) rows += n.d[q.arrows[a].second] * m.d[q.arrows[a].first];
    if (cols == 0) return 0;

    FpMatrix sys(m.p, rows, cols);
    int row = 0;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        auto [src, dst] = q.arrows[a];
        const FpMatrix& ma = m.mats[a];   // m.d[dst] x m.d[src]
        const FpMatrix& na = n.mats[a];   // n.d[dst] x n.d[src]
        // N_a phi_src - phi_dst M_a = 0, entry (u, v), u < n.d[dst], v < m.d[src].
        for (int u = 0; u < n.d[dst]; ++u)
            for (int v = 0; v < m.d[src]; ++v) {
                for (int w = 0; w < n.d[src]; ++w) {
                    uint32_t c = na.at(u, w);
                    if (c) sys.at(row, offset[static_cast<std::size_t>(src)] + w * m.d[src] + v) = c;
                }
                for (int w = 0; w < m.d[dst]; ++w) {
                    uint32_t c = ma.at(w, v);
                    if (c) {
                        int idx = offset[static_cast<std::size_t>(dst)] + u * m.d[dst] + w;
                        sys.at(row, idx) = static_cast<uint32_t>((sys.at(row, idx) + m.p - c % m.p) % m.p);
                    }
                }
                ++row;
            }
    }
    return cols - fp_rank(std::move(sys));
}

RepTuple sigma_rep_transport(const RootSystemD& rs, const RepTuple& n) {
    const QuiverD& q = rs.quiver();
    if (n.quiver->arrows != q.arrows) throw std::invalid_argument("sigma_rep_transport: quiver mismatch");
    const auto& sg = rs.sigma();
    RepTuple out = zero_rep(q, rs.apply_sigma(n.d), n.p);
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        auto [src, dst] = q.arrows[a];
        // (Sigma N)_a = N_{Sigma a} where Sigma a : Sigma src -> Sigma dst.
        int ss = sg[static_cast<std::size_t>(src)], st = sg[static_cast<std::size_t>(dst)];
        std::size_t b = q.arrows.size();
        for (std::size_t k = 0; k < q.arrows.size(); ++k)
            if (q.arrows[k] == std::make_pair(ss, st)) {
                b = k;
                break;
            }
        if (b == q.arrows.size()) throw std::logic_error("sigma_rep_transport: Sigma image arrow missing");
        out.mats[a] = n.mats[b];
    }
    return out;
}

long sigma_rep(const RootSystemD& rs, const RepTuple& m, const RepTuple& n) {
    RepTuple sn = sigma_rep_transport(rs, n);
    long h0 = hom_dim(m, n);
    long h0s = hom_dim(m, sn);
    long h1 = h0 - rs.euler_form(m.d, n.d);
    long h1s = h0s - rs.euler_form(m.d, sn.d);
    return h0 + h1 - h0s - h1s;
}

namespace {

// Decode enumeration index k into the arrow matrices, base p, fixed layout:
// arrows in quiver order, entries row-major.
void fill_rep(RepTuple& m, uint64_t k, int p) {
    for (auto& mat : m.mats)
        for (auto& e : mat.a) {
            e = static_cast<uint32_t>(k % static_cast<uint64_t>(p));
            k /= static_cast<uint64_t>(p);
        }
}

// hom(M, Sigma M) histogram over a contiguous index range.
void accumulate_range(const RootSystemD& rs, const DimVector& d, int p, uint64_t lo, uint64_t hi,
                      std::vector<uint64_t>& histogram) {
    RepTuple m = zero_rep(rs.quiver(), d, p);
    for (uint64_t k = lo; k < hi; ++k) {
        fill_rep(m, k, p);
        int h = hom_dim(m, sigma_rep_transport(rs, m));
        if (h >= static_cast<int>(histogram.size())) histogram.resize(static_cast<std::size_t>(h) + 1, 0);
        ++histogram[static_cast<std::size_t>(h)];
    }
}

uint64_t checked_total(const RootSystemD& rs, const DimVector& d, int p, uint64_t budget) {
    long dim = rep_space_dim(rs.quiver(), d);
    uint64_t tuples = 1;
    for (long i = 0; i < dim; ++i) {
        if (tuples > budget / static_cast<uint64_t>(p))
            throw std::domain_error("count_ji: enumeration budget exceeded, need p^" + std::to_string(dim) +
                                    " tuples");
        tuples *= static_cast<uint64_t>(p);
    }
    if (tuples > budget)
        throw std::domain_error("count_ji: enumeration budget exceeded, need p^" + std::to_string(dim) + " tuples");
    return tuples;
}

Int histogram_total(const std::vector<uint64_t>& histogram, int p) {
    Int out = 0;
    for (std::size_t h = 0; h < histogram.size(); ++h) {
        if (!histogram[h]) continue;
        out += Int(histogram[h]) * pow_int(Int(p), static_cast<unsigned long>(h));
    }
    return out;
}

} // namespace

Int count_ji_serial(const RootSystemD& rs, const DimVector& d, int p, uint64_t budget) {
    uint64_t tuples = checked_total(rs, d, p, budget);
    std::vector<uint64_t> histogram;
    accumulate_range(rs, d, p, 0, tuples, histogram);
    return histogram_total(histogram, p);
}

Int count_ji(const RootSystemD& rs, const DimVector& d, int p, uint64_t budget) {
    uint64_t tuples = checked_total(rs, d, p, budget);
#ifdef _OPENMP
    int nt = omp_get_max_threads();
    if (nt > 1 && tuples >= 1024) {
        std::vector<std::vector<uint64_t>> parts(static_cast<std::size_t>(nt));
#pragma omp parallel num_threads(nt)
        {
            int tid = omp_get_thread_num();
            uint64_t chunk = (tuples + static_cast<uint64_t>(nt) - 1) / static_cast<uint64_t>(nt);
            uint64_t lo = chunk * static_cast<uint64_t>(tid);
            uint64_t hi = std::min(tuples, lo + chunk);
            if (lo < hi) accumulate_range(rs, d, p, lo, hi, parts[static_cast<std::size_t>(tid)]);
        }
        std::vector<uint64_t> histogram;
        for (auto& part : parts) {
            if (part.size() > histogram.size()) histogram.resize(part.size(), 0);
            for (std::size_t h = 0; h < part.size(); ++h) histogram[h] += part[h];
        }
        return histogram_total(histogram, p);
    }
#endif
    std::vector<uint64_t> histogram;
    accumulate_range(rs, d, p, 0, tuples, histogram);
    return histogram_total(histogram, p);
}

CheckReport coefficient_check(const RootSystemD& rs, const Series& a_closed, const DimVector& d, int p,
                              uint64_t budget) {
    CheckReport rep;
    rep.d = d;
    rep.p = p;
    rep.s = rs.s_form(d, d);
    if (total(d) > a_closed.truncation())
        throw std::invalid_argument("coefficient_check: d exceeds the series truncation");

    Scalar cd = a_closed.coeff(d);
    try {
        rep.poly = (cd * group_motive(d)).clear_to_q_polynomial(rep.s);
    } catch (const std::domain_error& e) {
        rep.pass = false;
        rep.note = std::string("closed form is not an integer q-polynomial: ") + e.what();
        return rep;
    }
    rep.expected = 0;
    for (auto& [e, c] : rep.poly) rep.expected += c * pow_int(Int(p), static_cast<unsigned long>(e));

    try {
        rep.count = count_ji(rs, d, p, budget);
    } catch (const std::domain_error& e) {
        rep.skipped = true;
        rep.note = e.what();
        return rep;
    }
    rep.pass = (rep.count == rep.expected);
    if (!rep.pass) rep.note = "count mismatch";
    return rep;
}

} // namespace ddt
