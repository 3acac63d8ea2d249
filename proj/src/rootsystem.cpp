#include "ddt/rootsystem.hpp"

#include "ddt/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace ddt {

QuiverD::QuiverD(int r_) : r(r_) {
    if (r < 3) throw std::invalid_argument("QuiverD: r >= 3 required");
    if (r == 3) {
        arrows = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    } else {
        arrows.push_back({0, 2});
        arrows.push_back({1, 2});
        for (int i = 2; i < r - 2; ++i) arrows.push_back({i, i + 1});
        arrows.push_back({r - 2, r - 1});
        arrows.push_back({r - 2, r});
    }
}

std::string RootClass::name() const {
    switch (kind) {
        case Kind::real_root: return parity ? "real(p=1)" : "real(p=0)";
        case Kind::imaginary_root: return "imaginary";
        case Kind::sigma_pair_sum: return "sigma_pair_sum";
        case Kind::none: return "none";
    }
    return "none";
}

namespace {

// Exact inverse of a unimodular integer matrix via rational elimination.
IntMatrix invert_unimodular(const IntMatrix& m) {
    std::size_t n = m.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("invert_unimodular: singular matrix");
        std::swap(a[piv], a[col]);
        Rat p = a[col][col];
        for (auto& x : a[col]) x /= p;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rat f = a[row][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[row][j] -= f * a[col][j];
        }
    }
    IntMatrix out(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = a[i][n + j];
            if (!is_integer(v)) throw std::domain_error("invert_unimodular: non-integer inverse");
            out[i][j] = static_cast<long>(v.get_num().get_si());
        }
    return out;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    std::size_t n = a.size();
    IntMatrix out(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            long v = a[i][k];
            if (!v) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += v * b[k][j];
        }
    return out;
}

} // namespace

DimVector apply_matrix(const IntMatrix& m, const DimVector& d) {
    std::size_t n = m.size();
    if (d.size() != n) throw std::invalid_argument("apply_matrix: size mismatch");
    DimVector out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        long acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += m[i][j] * d[j];
        out[i] = static_cast<int>(acc);
    }
    return out;
}

RootSystemD::RootSystemD(int r_) : quiver_(r_) {
    int n = quiver_.vertex_count();
    int r = quiver_.r;

    euler_ = IntMatrix(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) euler_[i][i] = 1;
    for (auto& [i, j] : quiver_.arrows) euler_[i][j] -= 1;

    sigma_perm_.resize(n);
    for (int i = 0; i < n; ++i) sigma_perm_[i] = i;
    std::swap(sigma_perm_[0], sigma_perm_[1]);
    std::swap(sigma_perm_[r - 1], sigma_perm_[r]);

    rho_ = DimVector(n, 1);
    delta_ = DimVector(n, 1);
    for (int i = 2; i <= r - 2; ++i) delta_[i] = 2;

    // Path counts of the acyclic quiver: paths[i][j] = #paths i -> j.
    std::vector<std::vector<long>> paths(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) paths[i][i] = 1;
    // Arrows go from lower to higher position, so a reverse-topological sweep
    // over sources accumulates all path counts.
    for (int i = n - 1; i >= 0; --i)
        for (auto& [s, t] : quiver_.arrows)
            if (s == i)
                for (int j = 0; j < n; ++j) paths[i][j] += paths[t][j];

    proj_.resize(n);
    inj_.resize(n);
    IntMatrix pmat(n, std::vector<long>(n)), imat(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i) {
        proj_[i] = DimVector(n);
        inj_[i] = DimVector(n);
        for (int j = 0; j < n; ++j) {
            proj_[i][j] = static_cast<int>(paths[i][j]);
            inj_[i][j] = static_cast<int>(paths[j][i]);
            pmat[j][i] = paths[i][j];   // column i = dim P_i
            imat[j][i] = paths[j][i];   // column i = dim I_i
        }
    }

    // T [P_i] = -[I_i], hence T = -I_mat P_mat^{-1}.
    IntMatrix pinv = invert_unimodular(pmat);
    coxeter_ = mat_mul(imat, pinv);
    for (auto& row : coxeter_)
        for (auto& v : row) v = -v;
    coxeter_inv_ = invert_unimodular(coxeter_);

    // Structural self-checks of the built data.
    if (euler_form(delta_, delta_) != 0) throw std::logic_error("RootSystemD: chi(delta,delta) != 0");
    if (apply_coxeter(delta_) != delta_) throw std::logic_error("RootSystemD: T delta != delta");
    for (int i = 0; i < n; ++i) {
        DimVector ti = apply_coxeter(proj_[i]);
        for (int j = 0; j < n; ++j)
            if (ti[j] != -inj_[i][j]) throw std::logic_error("RootSystemD: T P_i != -I_i");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (coxeter_[sigma_perm_[i]][sigma_perm_[j]] != coxeter_[i][j])
                throw std::logic_error("RootSystemD: T does not commute with Sigma");
    for (auto& [s, t] : quiver_.arrows) {
        auto it = std::find(quiver_.arrows.begin(), quiver_.arrows.end(),
                            std::make_pair(sigma_perm_[s], sigma_perm_[t]));
        if (it == quiver_.arrows.end())
            throw std::logic_error("RootSystemD: Sigma is not a quiver automorphism");
    }
}

void RootSystemD::check_dimvec(const DimVector& d) const {
    if (static_cast<int>(d.size()) != quiver_.vertex_count())
        throw std::invalid_argument("RootSystemD: dimension vector size mismatch");
}

long RootSystemD::euler_form(const DimVector& d, const DimVector& e) const {
    check_dimvec(d);
    check_dimvec(e);
    long acc = 0;
    int n = quiver_.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc += d[i] * euler_[i][j] * e[j];
    return acc;
}

long RootSystemD::s_form(const DimVector& d, const DimVector& e) const {
    return euler_form(d, e) - euler_form(d, apply_sigma(e));
}

int RootSystemD::p_parity(const DimVector& d) const {
    check_dimvec(d);
    int r = quiver_.r;
    return ((d[0] + d[1] + d[r - 1] + d[r]) % 2 + 2) % 2;
}

DimVector RootSystemD::apply_sigma(const DimVector& d) const {
    check_dimvec(d);
    DimVector out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out[sigma_perm_[i]] = d[i];
    return out;
}

DimVector RootSystemD::apply_coxeter(const DimVector& d) const {
    check_dimvec(d);
    return apply_matrix(coxeter_, d);
}

DimVector RootSystemD::apply_coxeter_inv(const DimVector& d) const {
    check_dimvec(d);
    return apply_matrix(coxeter_inv_, d);
}

DimVector RootSystemD::projective(int i) const { return proj_.at(static_cast<std::size_t>(i)); }
DimVector RootSystemD::injective(int i) const { return inj_.at(static_cast<std::size_t>(i)); }

RootClass RootSystemD::classify(const DimVector& d) const {
    check_dimvec(d);
    if (is_zero(d)) throw std::invalid_argument("classify: d must be nonzero");
    if (!all_nonneg(d)) throw std::invalid_argument("classify: d must be nonnegative");

    long chi = euler_form(d, d);

    // d = n*delta?
    int r = quiver_.r;
    if (d[0] > 0) {
        DimVector nd = d[0] * delta_;
        if (nd == d) {
            RootClass c;
            c.kind = RootClass::Kind::imaginary_root;
            c.level = d[0];
            if (chi != 0) throw std::logic_error("classify: imaginary root with chi != 0");
            return c;
        }
    }

    if (chi == 1) {
        RootClass c;
        c.kind = RootClass::Kind::real_root;
        c.parity = p_parity(d);
        return c;
    }

    // d = d' + Sigma d' with d' a positive real root, p(d') = 1. Such a d has
    // equal entries on each Sigma-pair and even entries on the fixed vertices.
    if (d[0] == d[1] && d[r - 1] == d[r]) {
        bool evens = true;
        for (int i = 2; i <= r - 2; ++i)
            if (d[i] % 2) evens = false;
        if (evens) {
            for (int a = 0; a <= d[0]; ++a)
                for (int b = 0; b <= d[r - 1]; ++b) {
                    DimVector w(d.size());
                    w[0] = a;
                    w[1] = d[0] - a;
                    for (int i = 2; i <= r - 2; ++i) w[i] = d[i] / 2;
                    w[r - 1] = b;
                    w[r] = d[r - 1] - b;
                    if (is_zero(w)) continue;
                    if (euler_form(w, w) != 1 || p_parity(w) != 1) continue;
                    if (chi != 2) throw std::logic_error("classify: sigma pair sum with chi != 2");
                    RootClass c;
                    c.kind = RootClass::Kind::sigma_pair_sum;
                    c.witness = w;   // lexicographically smallest by scan order
                    return c;
                }
        }
    }
    return RootClass::none();
}

std::vector<std::pair<DimVector, RootClass>> RootSystemD::positive_roots(int max_total) const {
    if (max_total < 1) throw std::invalid_argument("positive_roots: N >= 1 required");
    std::vector<std::pair<DimVector, RootClass>> out;
    for_each_in_simplex(static_cast<std::size_t>(quiver_.vertex_count()), max_total, [&](const DimVector& d) {
        if (is_zero(d)) return;
        RootClass c = classify(d);
        if (!c.is_none()) out.emplace_back(d, c);
    });
    return out;
}

std::set<DimVector> RootSystemD::exceptional_orbits(int max_total) const {
    if (max_total < 1) throw std::invalid_argument("exceptional_orbits: N >= 1 required");
    std::set<DimVector> out;
    int r = quiver_.r;
    const int guard = 8 * max_total + 16;
    for (int i : {0, 1, r - 1, r}) {
        DimVector v = proj_[static_cast<std::size_t>(i)];
        for (int k = 0; k < guard; ++k) {
            if (!all_nonneg(v) || is_zero(v) || total(v) > max_total) break;
            out.insert(v);
            v = apply_coxeter_inv(v);
        }
        v = inj_[static_cast<std::size_t>(i)];
        for (int k = 0; k < guard; ++k) {
            if (!all_nonneg(v) || is_zero(v) || total(v) > max_total) break;
            out.insert(v);
            v = apply_coxeter(v);
        }
    }
    return out;
}

std::array<std::vector<DimVector>, 3> RootSystemD::tube_quasisimples() const {
    int r = quiver_.r;
    int n = quiver_.vertex_count();
    auto arm = [&](int top, int bottom) {
        DimVector v(n, 0);
        v[top] = 1;
        for (int i = 2; i <= r - 2; ++i) v[i] = 1;
        v[bottom] = 1;
        return v;
    };
    std::array<std::vector<DimVector>, 3> out;
    out[0] = {arm(0, r - 1), arm(1, r)};
    out[1] = {arm(0, r), arm(1, r - 1)};
    if (r == 3) {
        out[2] = {rho_};   // degenerate tube: rho = delta at r = 3
    } else {
        for (int i = 2; i <= r - 2; ++i) out[2].push_back(unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(i)));
        out[2].push_back(rho_);
    }
    return out;
}

} // namespace ddt
