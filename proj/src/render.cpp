#include "ddt/render.hpp"

#include <sstream>

namespace ddt {

namespace {

std::string coeff_str(const Rat& c) {
    std::string s = c.get_str();
    if (c < 0 || !is_integer(c)) return "(" + s + ")";
    return s;
}

} // namespace

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [k, c] = *it;
        if (!out.empty()) out += "+";
        if (k == 0) {
            out += coeff_str(c);
        } else if (c == 1) {
            out += "x^" + std::to_string(k);
        } else {
            out += coeff_str(c) + "*x^" + std::to_string(k);
        }
    }
    return out;
}

std::string to_string(const Scalar& s) {
    std::string num = to_string(s.num());
    if (s.is_polynomial()) return num;
    if (s.num().term_count() > 1) num = "(" + num + ")";
    return num + "/(" + to_string(s.den()) + ")";
}

std::string to_string(const DimVector& d, char sep) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(d[i]);
    }
    return out;
}

Json series_to_json(const Series& s) {
    Json terms = Json::array();
    for (auto& [d, c] : s.terms()) {
        Json t;
        t["d"] = d;
        t["c"] = to_string(c);
        terms.push_back(std::move(t));
    }
    return terms;
}

Json omega_table_to_json(const std::vector<OmegaEntry>& table) {
    Json out = Json::array();
    for (auto& e : table) {
        Json row;
        row["d"] = e.d;
        row["class"] = e.cls.name();
        row["omega"] = to_string(e.value);
        out.push_back(std::move(row));
    }
    return out;
}

Json roots_to_json(const std::vector<std::pair<DimVector, RootClass>>& roots) {
    Json out = Json::array();
    for (auto& [d, cls] : roots) {
        Json row;
        row["d"] = d;
        row["class"] = cls.name();
        if (cls.kind == RootClass::Kind::imaginary_root) row["level"] = cls.level;
        if (cls.kind == RootClass::Kind::sigma_pair_sum) row["witness"] = cls.witness;
        out.push_back(std::move(row));
    }
    return out;
}

Json rootsystem_to_json(const RootSystemD& rs) {
    // matrices flattened row-major
    auto mat = [](const IntMatrix& m) {
        Json flat = Json::array();
        for (auto& row : m)
            for (long v : row) flat.push_back(v);
        return flat;
    };
    Json out;
    out["r"] = rs.r();
    Json arrows = Json::array();
    for (auto& [s, t] : rs.quiver().arrows) arrows.push_back(Json::array({s, t}));
    out["arrows"] = std::move(arrows);
    out["euler_matrix"] = mat(rs.euler_matrix());
    out["coxeter_matrix"] = mat(rs.coxeter_matrix());
    out["sigma"] = rs.sigma();
    out["delta"] = rs.delta();
    out["rho"] = rs.rho();
    return out;
}

Json mckay_to_json(const McKayQuiver& q) {
    Json out;
    out["ell"] = q.ell;
    Json verts = Json::array();
    for (auto& v : q.vertices) verts.push_back(v.name());
    out["vertices"] = std::move(verts);
    Json arrows = Json::array();
    for (auto& a : q.arrows) {
        Json row;
        row["src"] = q.vertices[static_cast<std::size_t>(a.src)].name();
        row["dst"] = q.vertices[static_cast<std::size_t>(a.dst)].name();
        row["color"] = a.color == McKayArrow::Color::blue ? "blue" : "black";
        row["mult"] = a.mult;
        arrows.push_back(std::move(row));
    }
    out["arrows"] = std::move(arrows);
    return out;
}

Json check_report_to_json(const CheckReport& r) {
    Json out;
    out["d"] = r.d;
    out["p"] = r.p;
    out["s"] = r.s;
    Json poly = Json::array();
    for (auto& [e, c] : r.poly) {
        if (c.fits_slong_p())
            poly.push_back(Json::array({e, c.get_si()}));
        else
            poly.push_back(Json::array({e, c.get_str()}));
    }
    out["P"] = std::move(poly);
    out["expected"] = r.expected.get_str();
    out["count"] = r.count.get_str();
    out["pass"] = r.pass;
    out["skipped"] = r.skipped;
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

} // namespace ddt
