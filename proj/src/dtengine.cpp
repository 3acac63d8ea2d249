#include "ddt/dtengine.hpp"

#include <algorithm>
#include <map>

namespace ddt {

Scalar omega_value(const RootSystemD& rs, const RootClass& cls) {
    switch (cls.kind) {
        case RootClass::Kind::real_root:
            return cls.parity ? -Scalar::x() : Scalar::q();
        case RootClass::Kind::sigma_pair_sum:
            return Scalar::q();
        case RootClass::Kind::imaginary_root:
            return Scalar::q() * (Scalar::q() + Scalar(rs.r()));
        case RootClass::Kind::none:
            return Scalar(0);
    }
    return Scalar(0);
}

OmegaEntry omega(const RootSystemD& rs, const DimVector& d) {
    RootClass cls = rs.classify(d);
    return OmegaEntry{d, cls, omega_value(rs, cls)};
}

std::vector<OmegaEntry> omega_table(const RootSystemD& rs, int max_total) {
    std::vector<OmegaEntry> out;
    for (auto& [d, cls] : rs.positive_roots(max_total))
        out.push_back(OmegaEntry{d, cls, omega_value(rs, cls)});
    return out;
}

Series a_series_closed(const RootSystemD& rs, int max_total) {
    int nv = rs.quiver().vertex_count();
    Series arg(nv, max_total);
    Scalar qm1 = Scalar::q() - Scalar(1);
    for (auto& entry : omega_table(rs, max_total)) arg.add_to_coeff(entry.d, entry.value / qm1);
    return pleth_exp(arg);
}

namespace {

// sum_{m>=0} t^{m d} / (q^{-1})_m, the contribution of a single
// non-interacting indecomposable of dimension vector d.
Series loop_factor(const DimVector& d, int nv, int max_total) {
    Series out(nv, max_total);
    int step = total(d);
    for (int m = 0; m * step <= max_total; ++m)
        out.add_to_coeff(m * d, qinv_fact(m).inverse());
    return out;
}

// Cyclic-quiver pair factor, the double sum of Theorem C_2 with t1 -> t^d,
// t2 -> t^e: sum over (m1, m2) of (-x)^{-(m1-m2)^2} t^{m1 d + m2 e}
// / ((q^{-1})_{m1} (q^{-1})_{m2}).
Series pair_factor(const DimVector& d, const DimVector& e, int nv, int max_total) {
    Series out(nv, max_total);
    int sd = total(d), se = total(e);
    for (int m1 = 0; m1 * sd <= max_total; ++m1)
        for (int m2 = 0; m1 * sd + m2 * se <= max_total; ++m2) {
            long diff = m1 - m2;
            Scalar sign = Scalar::monomial((diff % 2) ? Rat(-1) : Rat(1), -diff * diff);
            Scalar coeff = sign / (qinv_fact(m1) * qinv_fact(m2));
            out.add_to_coeff(m1 * d + m2 * e, coeff);
        }
    return out;
}

} // namespace

Series a_series_ar(const RootSystemD& rs, int max_total) {
    int nv = rs.quiver().vertex_count();
    Series out = Series::one(nv, max_total);
    Scalar qm1 = Scalar::q() - Scalar(1);

    std::vector<DimVector> pair_reps;
    for (auto& [d, cls] : rs.positive_roots(max_total)) {
        if (cls.kind != RootClass::Kind::real_root) continue;
        if (cls.parity == 0) {
            out = out * loop_factor(d, nv, max_total);
        } else {
            DimVector sd = rs.apply_sigma(d);
            if (d < sd) pair_reps.push_back(d);   // one representative per Sigma-orbit
        }
    }
    for (auto& d : pair_reps) out = out * pair_factor(d, rs.apply_sigma(d), nv, max_total);

    // Imaginary roots: the dimension-(n delta) regular families have motivic
    // class q + r, contributing the plethystic power Exp(q(q+r) t^{n delta}/(q-1)).
    Series im_arg(nv, max_total);
    Scalar im_value = Scalar::q() * (Scalar::q() + Scalar(rs.r()));
    int sdelta = total(rs.delta());
    for (int n = 1; n * sdelta <= max_total; ++n) im_arg.add_to_coeff(n * rs.delta(), im_value / qm1);
    out = out * pleth_exp(im_arg);
    return out;
}

std::pair<Series, Series> c2_series(int max_total) {
    Series lhs(2, max_total);
    for (int d1 = 0; d1 <= max_total; ++d1)
        for (int d2 = 0; d1 + d2 <= max_total; ++d2) {
            long diff = d1 - d2;
            Scalar sign = Scalar::monomial((diff % 2) ? Rat(-1) : Rat(1), -diff * diff);
            lhs.add_to_coeff(DimVector{d1, d2}, sign / (qinv_fact(d1) * qinv_fact(d2)));
        }

    Scalar qm1 = Scalar::q() - Scalar(1);
    Series arg(2, max_total);
    arg.add_to_coeff(DimVector{1, 1}, Scalar::q() / qm1);
    arg.add_to_coeff(DimVector{1, 0}, -Scalar::x() / qm1);
    arg.add_to_coeff(DimVector{0, 1}, -Scalar::x() / qm1);
    return {lhs, pleth_exp(arg)};
}

Series a3_special_series(int max_total) {
    const int nv = 4;
    Scalar qm1 = Scalar::q() - Scalar(1);
    DimVector delta(nv, 1);

    Series bracket(nv, max_total);
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j) {
            DimVector d(nv, 0);
            d[i] = d[j] = 1;
            bracket.add_to_coeff(d, Scalar::q());
        }
    for (int i = 0; i < nv; ++i) {
        bracket.add_to_coeff(unit_vector(nv, static_cast<std::size_t>(i)), -Scalar::x());
        DimVector d(nv, 0);
        d[i] = d[(i + 1) % 4] = d[(i + 2) % 4] = 1;
        bracket.add_to_coeff(d, -Scalar::x());
    }
    bracket.add_to_coeff(delta, Scalar::q() * (Scalar::q() + Scalar(3)));

    Series geom(nv, max_total);
    for (int n = 0; 4 * n <= max_total; ++n) geom.add_to_coeff(n * delta, Scalar(1));

    return pleth_exp(bracket.scaled(qm1.inverse()) * geom);
}

std::vector<std::pair<DimVector, Scalar>> extract_dt(const Series& a) {
    Series l = pleth_log(a);
    Scalar qm1 = Scalar::q() - Scalar(1);
    std::vector<std::pair<DimVector, Scalar>> out;
    for (auto& [d, c] : l.terms()) out.emplace_back(d, c * qm1);
    return out;
}

std::pair<Series, Series> ncdt_series(int max_total) {
    const int nv = 4;
    RootSystemD rs(3);
    DimVector delta = rs.delta();

    // Exp side: Exp(sum_d d_0 Omega_d(1) t^d).
    Series arg(nv, max_total);
    for (auto& entry : omega_table(rs, max_total)) {
        if (entry.d[0] == 0) continue;
        Rat v = entry.value.eval_rational(Rat(1)) * entry.d[0];
        arg.add_to_coeff(entry.d, Scalar(v));
    }
    Series exp_side = pleth_exp(arg);

    // Product side: M(1, t^delta)^4 * prod M~(t_i t_j) / prod M~(...).
    DimVector zero(nv, 0);
    Series prod_side = macmahon_m(zero, delta, max_total).pow(4);
    std::vector<DimVector> numer, denom;
    for (int i = 1; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j) {
            DimVector u(nv, 0);
            u[i] = u[j] = 1;
            numer.push_back(u);
        }
    {
        DimVector u(nv, 0);
        u[1] = u[2] = u[3] = 1;
        denom.push_back(u);
        for (int i = 1; i < nv; ++i) denom.push_back(unit_vector(nv, static_cast<std::size_t>(i)));
    }
    for (auto& u : numer) prod_side = prod_side * macmahon_m_tilde(u, delta, max_total);
    Series den = Series::one(nv, max_total);
    for (auto& u : denom) den = den * macmahon_m_tilde(u, delta, max_total);
    prod_side = prod_side * den.inv();

    return {exp_side, prod_side};
}

} // namespace ddt
